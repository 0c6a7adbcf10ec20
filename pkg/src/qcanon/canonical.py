"""Canonical and dual canonical bases via the bar-involution fixed point.

On a contragredient slice the involution is

    psi_c(x) = tau(Theta^(n)) . bar(x),

where bar acts coefficientwise on dual monomial coordinates (the dual
monomials are bar-fixed because divided powers have bar-invariant
coefficients).  The matrix of tau(Theta^(n)) is unipotent lower triangular in
ascending lexicographic index order, so psi_c(e_m) = e_m + (terms at k > m).

The dual canonical basis is the unique family b_m = e_m + sum_{k>m} c_k e_k
fixed by psi_c with every off-lead coefficient in q^-1 Z[q^-1].  The solver
walks the indices in decreasing lexicographic order: the defect
psi_c(e_m) - e_m re-expressed over the already-built b_k has bar-antisymmetric
coefficients rho_k, and c_k = solve_bar_equation(rho_k) is the unique ideal
element with c_k - bar(c_k) = rho_k.  Triangularity is asserted, not assumed:
a defect at an index <= m aborts the run, so a convention error surfaces as a
loud failure instead of silent garbage.

On the plain (non-dual) side of a two-factor product the same construction
with psi(x) = bar(Theta) . bar(x) produces the canonical basis; there the
corrections run toward lexicographically smaller indices, so the solver walks
upward instead.

Singular vectors (killed by the coproduct E) are recognized exactly, and
`singular_subset` checks its count against an independent fraction-free rank
computation -- a disagreement is a falsification signal and raises.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import linalg
from .qring import ONE, QScalar, in_qinv_ideal, solve_bar_equation
from .rmatrix import tau_theta_n, theta_matrix
from .tensor import WeightSpace, coproduct_matrix, weight_space
from .weightmod import GEN_E, contragredient, make_simple


class TriangularityViolationError(AssertionError):
    """The involution is not unipotent triangular in the expected direction."""


class CountMismatchError(AssertionError):
    """A basis subset count disagrees with an independent rank computation."""


@dataclass(frozen=True)
class AntilinearMap:
    """x -> matrix . bar(x) on a fixed weight slice."""
    space: WeightSpace
    matrix: np.ndarray

    def apply(self, vec: np.ndarray) -> np.ndarray:
        return linalg.matmul(self.matrix, linalg.mat_bar(vec))

    def is_involution(self) -> bool:
        composed = linalg.matmul(self.matrix, linalg.mat_bar(self.matrix))
        return linalg.mat_eq(composed, linalg.identity(self.space.dim))


@dataclass(frozen=True)
class BasisVector:
    """One basis element, as exact coordinates over (dual) monomials."""
    index: tuple[int, ...]
    space: WeightSpace
    coords: np.ndarray

    def coeff(self, k: tuple[int, ...]) -> QScalar:
        return self.coords[self.space.pos[k]]

    def support(self) -> list[tuple[int, ...]]:
        return [m for m, c in zip(self.space.indices, self.coords) if c]

    def __repr__(self):
        parts = []
        for m, c in zip(self.space.indices, self.coords):
            if c:
                text = str(c)
                if " " in text:
                    text = f"({text})"
                parts.append(f"{text}*{m}")
        return f"b{self.index} = " + " + ".join(parts)


def dual_factors(lams: Sequence[int]):
    return tuple(contragredient(make_simple(x)) for x in lams)


def simple_factors(lams: Sequence[int]):
    return tuple(make_simple(x) for x in lams)


def psi_c(lams: Sequence[int], level: int) -> AntilinearMap:
    """The involution tau(Theta^(n)) . bar on the contragredient slice."""
    fs = dual_factors(lams)
    return AntilinearMap(weight_space(fs, level),
                         tau_theta_n(fs, level).matrix)


def psi_tensor2(lams: Sequence[int], level: int) -> AntilinearMap:
    """The involution bar(Theta) . bar on a plain two-factor slice."""
    if len(lams) != 2:
        raise ValueError("psi_tensor2 needs exactly two factors")
    fs = simple_factors(lams)
    return AntilinearMap(weight_space(fs, level),
                         linalg.mat_bar(theta_matrix(fs, level).matrix))


def _solve_triangular(anti: AntilinearMap, descending: bool) -> list[BasisVector]:
    """Shared fixed-point recursion; `descending` picks the processing order
    (decreasing lex for the dual basis, increasing for the canonical one)."""
    space = anti.space
    dim = space.dim
    order = range(dim - 1, -1, -1) if descending else range(dim)
    built: dict[int, np.ndarray] = {}
    for p in order:
        delta = anti.matrix[:, p].copy()
        delta[p] = delta[p] - ONE
        later = (lambda k: k > p) if descending else (lambda k: k < p)
        for k in range(dim):
            if delta[k] and not later(k):
                raise TriangularityViolationError(
                    f"defect of {space.indices[p]} touches "
                    f"{space.indices[k]} on {space!r}")
        peel = range(p + 1, dim) if descending else range(p - 1, -1, -1)
        vec = space.unit_vector(space.indices[p])
        for k in peel:
            rho = delta[k]
            if not rho:
                continue
            c = solve_bar_equation(rho)
            delta = delta - linalg.mat_scale(built[k], rho)
            vec = vec + linalg.mat_scale(built[k], c)
        assert linalg.is_zero(delta)
        if not linalg.mat_eq(anti.apply(vec), vec):
            raise TriangularityViolationError(
                f"fixed-point defect at {space.indices[p]} on {space!r}")
        assert all(in_qinv_ideal(c) for k, c in enumerate(vec) if k != p)
        built[p] = vec
    return [BasisVector(space.indices[p], space, built[p])
            for p in range(dim)]


def dual_canonical_basis(lams: Sequence[int], level: int) -> list[BasisVector]:
    """The psi_c-fixed, lex-unipotent basis of the dual weight slice.

    Returned in ascending lexicographic index order.  Every off-lead
    coefficient lies in q^-1 Z[q^-1] and the support of b_m sits at indices
    >= m (with the factor bounds of the simple modules respected by
    construction).
    """
    return _solve_triangular(psi_c(lams, level), descending=True)


def canonical_basis_pair(lams: Sequence[int], level: int) -> list[BasisVector]:
    """The psi-fixed basis of a two-factor product of simple modules.

    Corrections to the leading monomial run toward lexicographically smaller
    indices, which for two factors means the anti-diagonal shifts
    (i, j) -> (i - k, j + k) with k > 0 only.
    """
    basis = _solve_triangular(psi_tensor2(lams, level), descending=False)
    for b in basis:
        i, j = b.index
        for k in b.support():
            if k == b.index:
                continue
            shift = b.index[0] - k[0]
            if shift <= 0 or k != (i - shift, j + shift):
                raise TriangularityViolationError(
                    f"support {k} of {b.index} outside the k>0 shift family")
    return basis


def is_singular(basis_vector_or_coords, lams=None, level=None) -> bool:
    """True iff the coproduct E annihilates the vector."""
    if isinstance(basis_vector_or_coords, BasisVector):
        space = basis_vector_or_coords.space
        coords = basis_vector_or_coords.coords
        factors, lvl = space.factors, space.level
    else:
        factors, lvl = dual_factors(lams), level
        coords = np.asarray(basis_vector_or_coords, dtype=object)
    e = coproduct_matrix(factors, lvl, GEN_E)
    return linalg.is_zero(linalg.matmul(e, coords))


def singular_subset(basis: list[BasisVector]) -> list[BasisVector]:
    """The singular members, with an independent E-kernel dimension check."""
    if not basis:
        return []
    space = basis[0].space
    subset = [b for b in basis if is_singular(b)]
    e = coproduct_matrix(space.factors, space.level, GEN_E)
    expected = linalg.kernel_dimension(e)
    if len(subset) != expected:
        raise CountMismatchError(
            f"{len(subset)} singular basis elements but ker E has dimension "
            f"{expected} on {space!r}")
    return subset
