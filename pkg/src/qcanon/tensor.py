"""Tensor products of weight modules and their weight-space matrices.

The n-fold product is never materialized: all computation happens inside one
weight slice at a time.  A slice at level l (total weight sum(lam) - 2l) is
indexed by the tuples m = (m_1, ..., m_n) with sum(m) = l and each m_i inside
its factor, listed in ascending lexicographic order.  For simple factors this
index list is exactly the set of tuples bounded by the highest weights.

Generator actions are the iterated comultiplication

    E |-> sum_i  1 x ... x E_i x q^h x ... x q^h
    F |-> sum_i  q^-h x ... x q^-h x F_i x 1 x ... x 1

with the Cartan generators acting diagonally; E maps level l to l-1 and F to
l+1, so the matrices are rectangular between adjacent slices.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

from . import linalg
from .qring import ONE
from .weightmod import (GEN_E, GEN_F, GEN_QH, GEN_QH_INV, GEN_QHALF,
                        GEN_QHALF_INV, WeightModule, contragredient,
                        make_simple)

_DIAGONAL_GENS = (GEN_QH, GEN_QH_INV, GEN_QHALF, GEN_QHALF_INV)


def enumerate_P(lam: Sequence[int], l: int) -> list[tuple[int, ...]]:
    """All tuples a with 0 <= a_i <= lam_i and sum(a) = l, in lex order."""
    lam = tuple(lam)
    out: list[tuple[int, ...]] = []

    def rec(i: int, remaining: int, prefix: tuple[int, ...]):
        if i == len(lam):
            if remaining == 0:
                out.append(prefix)
            return
        tail_room = sum(lam[i + 1:])
        lo = max(0, remaining - tail_room)
        hi = min(lam[i], remaining)
        for a in range(lo, hi + 1):
            rec(i + 1, remaining - a, prefix + (a,))

    if l >= 0:
        rec(0, l, ())
    return out


class WeightSpace:
    """One weight slice of a tensor product, with its monomial index list."""

    __slots__ = ("factors", "level", "weight", "indices", "pos")

    def __init__(self, factors: tuple[WeightModule, ...], level: int):
        self.factors = factors
        self.level = level
        self.weight = sum(f.highest_weight for f in factors) - 2 * level
        bounds = [f.size - 1 for f in factors]
        self.indices = tuple(enumerate_P(bounds, level))
        self.pos = {m: i for i, m in enumerate(self.indices)}

    @property
    def dim(self) -> int:
        return len(self.indices)

    def factor_weights(self, m: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(f.weight(mi) for f, mi in zip(self.factors, m))

    def unit_vector(self, m: tuple[int, ...]) -> np.ndarray:
        return linalg.unit_vector(self.dim, self.pos[m])

    def __repr__(self):
        return f"WeightSpace({list(self.factors)!r}, l={self.level}, dim={self.dim})"


@lru_cache(maxsize=None)
def weight_space(factors: tuple[WeightModule, ...], level: int) -> WeightSpace:
    return WeightSpace(factors, level)


def coproduct_target_level(level: int, gen: str) -> int:
    if gen == GEN_E:
        return level - 1
    if gen == GEN_F:
        return level + 1
    return level


@lru_cache(maxsize=None)
def coproduct_matrix(factors: tuple[WeightModule, ...], level: int,
                     gen: str) -> np.ndarray:
    """Matrix of the iterated coproduct of a generator on one weight slice.

    Rows are indexed by the target slice (level-1 for E, level+1 for F, the
    same slice for Cartan generators).
    """
    src = weight_space(factors, level)
    tgt = weight_space(factors, coproduct_target_level(level, gen))
    n = len(factors)
    out = linalg.zeros(tgt.dim, src.dim)
    if gen in _DIAGONAL_GENS:
        for j, m in enumerate(src.indices):
            val = ONE
            for f, mi in zip(factors, m):
                val = val * f.matrix(gen)[mi, mi]
            out[j, j] = val
        return out
    flank_gen = GEN_QH if gen == GEN_E else GEN_QH_INV
    for j, m in enumerate(src.indices):
        for i in range(n):
            col = factors[i].matrix(gen)[:, m[i]]
            for t in range(factors[i].size):
                c = col[t]
                if not c:
                    continue
                # E carries q^h on the factors after slot i, F carries q^-h
                # on the factors before it.
                flank_range = range(i + 1, n) if gen == GEN_E else range(i)
                for k in flank_range:
                    c = c * factors[k].matrix(flank_gen)[m[k], m[k]]
                target = m[:i] + (t,) + m[i + 1:]
                p = tgt.pos[target]
                out[p, j] = out[p, j] + c
    return out


class TensorModule:
    """Ordered list of factors with cached per-slice operator matrices."""

    def __init__(self, factors: Sequence[WeightModule]):
        if len(factors) < 1:
            raise ValueError("need at least one factor")
        self.factors = tuple(factors)

    @property
    def n(self) -> int:
        return len(self.factors)

    @property
    def weight_sum(self) -> int:
        return sum(f.highest_weight for f in self.factors)

    @property
    def max_level(self) -> int:
        return sum(f.size - 1 for f in self.factors)

    def weight_space(self, level: int) -> WeightSpace:
        return weight_space(self.factors, level)

    def coproduct_matrix(self, level: int, gen: str) -> np.ndarray:
        return coproduct_matrix(self.factors, level, gen)

    def levels(self) -> Iterator[int]:
        return iter(range(self.max_level + 1))

    def contragredient(self) -> "TensorModule":
        return TensorModule(tuple(contragredient(f) for f in self.factors))

    def __repr__(self):
        return " (x) ".join(repr(f) for f in self.factors)


def tensor_product(factors: Sequence[WeightModule]) -> TensorModule:
    return TensorModule(factors)


def simple_tensor(lams: Sequence[int]) -> TensorModule:
    """V_{lam_1} x ... x V_{lam_n}."""
    return TensorModule(tuple(make_simple(x) for x in lams))


def dual_tensor(lams: Sequence[int]) -> TensorModule:
    """The contragredient product, carrying the dual monomial coordinates."""
    return TensorModule(tuple(contragredient(make_simple(x)) for x in lams))
