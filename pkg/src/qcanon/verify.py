"""Named property checks aggregating every cross-model guarantee.

Each check sweeps a family of desk-scale cases (bounded by the sum of the
highest weights) and returns a result record; `run_suite` composes them.  The
checks are deliberately redundant with independent machinery on each side:
dimension counts come from convolving weight multisets, singular counts from
fraction-free rank, braid products are compared against coproduct recursions,
and the diagram model is compared against the fixed-point solver.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from . import linalg
from .canonical import (canonical_basis_pair, dual_canonical_basis, psi_c,
                        psi_tensor2, singular_subset)
from .cabling import cabling_report
from .diagrams import (diagram_of_index, enumerate_B, filter_invariant,
                       filter_singular, index_of_diagram)
from .qring import ONE, QScalar, in_qinv_ideal
from .rmatrix import (cartan_factor, r_n_matrix, rcheck_longest,
                      sigma0_matrix, tau_theta_direct, theta_n_matrix)
from .tensor import enumerate_P
from .weightmod import contragredient, make_simple


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    elapsed: float
    failure: dict | None = None


def positive_compositions(max_sum: int, min_parts: int = 1,
                          max_parts: int | None = None):
    """All tuples of positive integers with sum <= max_sum."""
    for total in range(min_parts, max_sum + 1):
        top = total if max_parts is None else min(total, max_parts)
        for n in range(min_parts, top + 1):
            for cuts in itertools.combinations(range(1, total), n - 1):
                bounds = (0,) + cuts + (total,)
                yield tuple(bounds[i + 1] - bounds[i] for i in range(n))


def independent_dimension(lams: Sequence[int], level: int) -> int:
    """dim of the weight slice by convolving single-factor weight multisets."""
    counts = {0: 1}
    for lam in lams:
        nxt: dict[int, int] = {}
        for w, c in counts.items():
            for m in range(lam + 1):
                ww = w + lam - 2 * m
                nxt[ww] = nxt.get(ww, 0) + c
        counts = nxt
    return counts.get(sum(lams) - 2 * level, 0)


def _simple(lams):
    return tuple(make_simple(x) for x in lams)


def _dual(lams):
    return tuple(contragredient(make_simple(x)) for x in lams)


def _check(name: str, body: Callable[[], str]) -> CheckResult:
    start = time.perf_counter()
    try:
        detail = body()
        return CheckResult(name, True, detail, time.perf_counter() - start)
    except Exception as exc:  # property failure: report, never mask
        return CheckResult(
            name, False, f"{type(exc).__name__}: {exc}",
            time.perf_counter() - start,
            failure={"check": name, "error_type": type(exc).__name__,
                     "error": str(exc)})


# ---------------------------------------------------------------------------
# the acceptance checks
# ---------------------------------------------------------------------------

def check_golden_dual_basis(max_sum: int = 6) -> CheckResult:
    """Exact coefficients of the two-factor unit-weight dual basis."""
    def body():
        q = QScalar.q_power
        basis = {b.index: b for b in dual_canonical_basis((1, 1), 1)}
        b10, b01 = basis[(1, 0)], basis[(0, 1)]
        assert b10.coeff((1, 0)) == ONE and not b10.coeff((0, 1))
        assert b01.coeff((0, 1)) == ONE and b01.coeff((1, 0)) == -q(-1)
        return "dual basis of (V1 x V1)[0] matches the frozen coefficients"
    return _check("golden_dual_basis", body)


def check_yang_baxter(max_sum: int = 6) -> CheckResult:
    """Braid relation on three factors, both bracketings, every slice."""
    def body():
        cases = 0
        for lams in [(1, 1, 1), (1, 2, 1)]:
            fs = _simple(lams)
            for l in range(sum(lams) + 1):
                a = rcheck_longest(fs, l, word=(0, 1, 0)).matrix
                b = rcheck_longest(fs, l, word=(1, 0, 1)).matrix
                assert linalg.mat_eq(a, b), f"YBE fails on {lams} level {l}"
                cases += 1
        return f"braid relation exact on {cases} weight slices"
    return _check("yang_baxter", body)


def check_braid_factorizations(max_sum: int = 6) -> CheckResult:
    """Word independence, sigma0-factorization, Cartan-theta factorization
    and the tau-twist braid product, on every slice up to the bound."""
    def body():
        words3 = ((0, 1, 0), (1, 0, 1))
        cases = 0
        for lams in positive_compositions(max_sum, max_parts=3):
            if len(lams) != 3:
                continue
            fs = _simple(lams)
            for l in range(sum(lams) + 1):
                mats = [rcheck_longest(fs, l, word=w).matrix for w in words3]
                assert linalg.mat_eq(*mats), \
                    f"reduced words disagree on {lams} level {l}"
                cases += 1
        for lams in positive_compositions(max_sum):
            fs = _simple(lams)
            for l in range(sum(lams) + 1):
                sigma = sigma0_matrix(fs, l).matrix
                rn = r_n_matrix(fs, l).matrix
                assert linalg.mat_eq(rcheck_longest(fs, l).matrix,
                                     linalg.matmul(sigma, rn)), \
                    f"longest braiding is not sigma0 R on {lams} level {l}"
                assert linalg.mat_eq(
                    rn, linalg.matmul(cartan_factor(fs, l).matrix,
                                      theta_n_matrix(fs, l).matrix)), \
                    f"R != C Theta on {lams} level {l}"
                rev = fs[::-1]
                braid = linalg.matmul(
                    rcheck_longest(rev, l).matrix,
                    linalg.matmul(
                        linalg.diagonal_inverse(cartan_factor(rev, l).matrix),
                        sigma))
                assert linalg.mat_eq(tau_theta_direct(fs, l).matrix, braid), \
                    f"tau-twist braid product fails on {lams} level {l}"
                cases += 3
        return f"{cases} exact operator identities verified"
    return _check("braid_factorizations", body)


def check_involutions(max_sum: int = 6) -> CheckResult:
    """psi_c (any factor count) and psi (two factors) square to the identity;
    psi_c carries its built-in transpose/braid cross-check."""
    def body():
        cases = 0
        for lams in positive_compositions(max_sum):
            for l in range(sum(lams) + 1):
                assert psi_c(lams, l).is_involution(), \
                    f"psi_c not involutive on {lams} level {l}"
                cases += 1
                if len(lams) == 2:
                    assert psi_tensor2(lams, l).is_involution(), \
                        f"psi not involutive on {lams} level {l}"
                    cases += 1
        return f"{cases} involution identities verified"
    return _check("involutions", body)


def check_solver_contract(max_sum: int = 6) -> CheckResult:
    """Existence, lex-unipotence, coefficient-ring membership and uniqueness
    of the dual canonical basis; the two-factor support shape on the plain
    side."""
    def body():
        q = QScalar.q_power
        vectors = 0
        for lams in positive_compositions(max_sum):
            for l in range(sum(lams) + 1):
                basis = dual_canonical_basis(lams, l)
                assert [b.index for b in basis] == enumerate_P(lams, l)
                for b in basis:
                    assert b.coeff(b.index) == ONE
                    for k in b.support():
                        assert k >= b.index, \
                            f"support below the lead index on {lams} level {l}"
                        if k != b.index:
                            assert in_qinv_ideal(b.coeff(k)), \
                                f"coefficient outside q^-1 Z[q^-1] " \
                                f"on {lams} level {l}"
                    vectors += 1
                if len(lams) == 2:
                    canonical_basis_pair(lams, l)  # support shape checked inside
        # uniqueness: perturbing by an ideal multiple of a later element
        # breaks the fixed point
        basis = dual_canonical_basis((2, 2), 2)
        psi = psi_c((2, 2), 2)
        for i, b in enumerate(basis):
            for other in basis[i + 1:]:
                perturbed = b.coords + linalg.mat_scale(other.coords, q(-1))
                assert not linalg.mat_eq(psi.apply(perturbed), perturbed)
        return f"{vectors} basis vectors pass the full contract"
    return _check("solver_contract", body)


def check_bijection_counts(max_sum: int = 6) -> CheckResult:
    """Diagram count = index count = slice dimension; the index map is a
    round-trip bijection."""
    def body():
        cases = 0
        for lams in positive_compositions(max_sum):
            for l in range(sum(lams) + 1):
                diagrams = enumerate_B(lams, l)
                indices = [index_of_diagram(d) for d in diagrams]
                expected = enumerate_P(lams, l)
                assert sorted(indices) == expected, \
                    f"index image mismatch on {lams} level {l}"
                assert len(diagrams) == independent_dimension(lams, l), \
                    f"diagram count != dimension on {lams} level {l}"
                for d, a in zip(diagrams, indices):
                    assert diagram_of_index(lams, a) == d, \
                        f"round trip fails at {a} on {lams}"
                cases += len(diagrams)
        return f"{cases} diagrams matched to indices and dimensions"
    return _check("bijection_counts", body)


def check_singular_bases(max_sum: int = 6) -> CheckResult:
    """Origin-avoiding diagrams index exactly the E-kernel members of the
    dual canonical basis, with the count certified by exact rank."""
    def body():
        cases = 0
        for lams in positive_compositions(max_sum):
            for l in range(sum(lams) + 1):
                basis = dual_canonical_basis(lams, l)
                kernel_indices = {b.index for b in singular_subset(basis)}
                diagram_indices = {
                    index_of_diagram(d)
                    for d in filter_singular(enumerate_B(lams, l))}
                assert kernel_indices == diagram_indices, \
                    f"singular sets disagree on {lams} level {l}"
                cases += len(kernel_indices)
        return f"{cases} singular basis elements matched both ways"
    return _check("singular_bases", body)


def check_catalan(max_sum: int = 8) -> CheckResult:
    """Fully saturated unit-capacity diagrams are counted by Catalan numbers."""
    def body():
        got = [len(filter_invariant(enumerate_B((1,) * (2 * l), l)))
               for l in range(1, 5)]
        assert got == [1, 2, 5, 14], f"Catalan counts off: {got}"
        return "invariant diagram counts 1, 2, 5, 14 for levels 1..4"
    return _check("catalan", body)


def check_cabling(max_sum: int = 5) -> CheckResult:
    """Algebraic and diagrammatic collapses agree everywhere; the surviving
    scalars are all exactly 1 at desk scale."""
    def body():
        scalars = {}
        for lams in positive_compositions(max_sum):
            for l in range(sum(lams) + 1):
                report = cabling_report(lams, l)
                for o in report.outcomes:
                    if not o.killed:
                        key = str(o.scalar)
                        scalars[key] = scalars.get(key, 0) + 1
        golden = cabling_report((2,), 1)
        assert golden.all_scalars_one
        assert [o.killed for o in golden.outcomes] == [True, False]
        return f"kill patterns agree; scalar multiset {scalars}"
    return _check("cabling", body)


def check_duality(max_sum: int = 5) -> CheckResult:
    """The canonical and dual canonical bases pair to the identity matrix."""
    def body():
        cases = 0
        for l1 in range(max_sum + 1):
            for l2 in range(max_sum + 1 - l1):
                lams = (l1, l2)
                for l in range(sum(lams) + 1):
                    can = canonical_basis_pair(lams, l)
                    dual = dual_canonical_basis(lams, l)
                    for db in dual:
                        for cb in can:
                            pair = sum(
                                (a * b for a, b in zip(db.coords, cb.coords)),
                                start=QScalar())
                            want = ONE if db.index == cb.index else QScalar()
                            assert pair == want, \
                                f"pairing off at {db.index}/{cb.index} " \
                                f"on {lams} level {l}"
                            cases += 1
        return f"{cases} pairings equal the identity pattern"
    return _check("duality", body)


ALL_CHECKS: dict[str, Callable[[int], CheckResult]] = {
    "golden_dual_basis": check_golden_dual_basis,
    "yang_baxter": check_yang_baxter,
    "braid_factorizations": check_braid_factorizations,
    "involutions": check_involutions,
    "solver_contract": check_solver_contract,
    "bijection_counts": check_bijection_counts,
    "singular_bases": check_singular_bases,
    "catalan": check_catalan,
    "cabling": check_cabling,
    "duality": check_duality,
}

SUITE_ALIASES = {
    "all": tuple(ALL_CHECKS),
    "ybe": ("yang_baxter",),
    "braiding": ("yang_baxter", "braid_factorizations"),
    "basis": ("golden_dual_basis", "involutions", "solver_contract",
              "duality"),
    "diagrams": ("bijection_counts", "singular_bases", "catalan"),
    "cabling": ("cabling",),
}


def run_suite(suite: str = "all", max_weight_sum: int = 6) -> list[CheckResult]:
    if suite in SUITE_ALIASES:
        names: Iterable[str] = SUITE_ALIASES[suite]
    elif suite in ALL_CHECKS:
        names = (suite,)
    else:
        raise KeyError(f"unknown suite {suite!r}; know "
                       f"{sorted(set(SUITE_ALIASES) | set(ALL_CHECKS))}")
    out = []
    for name in names:
        fn = ALL_CHECKS[name]
        if name in ("cabling", "duality"):
            out.append(fn(min(max_weight_sum, 5)))
        else:
            out.append(fn(max_weight_sum))
    return out
