import itertools

import pytest

from qcanon import linalg
from qcanon.canonical import (CountMismatchError, canonical_basis_pair,
                              dual_canonical_basis, is_singular, psi_c,
                              psi_tensor2, singular_subset)
from qcanon.qring import ONE, QScalar, in_qinv_ideal
from qcanon.tensor import enumerate_P

q = QScalar.q_power


def small_lams(max_sum, min_n=1, max_n=None):
    for n in range(min_n, (max_n or max_sum) + 1):
        for lam in itertools.product(range(1, max_sum + 1), repeat=n):
            if sum(lam) <= max_sum:
                yield lam


class TestPsiC:
    def test_fixes_lowest_dual_monomial(self):
        psi = psi_c((1, 1), 1)
        e10 = psi.space.unit_vector((1, 0))
        assert linalg.mat_eq(psi.apply(e10), e10)

    def test_corrects_highest_dual_monomial(self):
        psi = psi_c((1, 1), 1)
        ws = psi.space
        out = psi.apply(ws.unit_vector((0, 1)))
        assert out[ws.pos[(0, 1)]] == ONE
        assert out[ws.pos[(1, 0)]] == q(1) - q(-1)

    @pytest.mark.parametrize("lams", [(1, 1), (2, 1), (1, 1, 1), (2, 2)])
    def test_involution(self, lams):
        for l in range(sum(lams) + 1):
            assert psi_c(lams, l).is_involution()


class TestPsiTensor2:
    def test_fixes_top(self):
        psi = psi_tensor2((1, 1), 0)
        e = psi.space.unit_vector((0, 0))
        assert linalg.mat_eq(psi.apply(e), e)

    def test_bar_theta_coefficient(self):
        psi = psi_tensor2((1, 1), 1)
        ws = psi.space
        out = psi.apply(ws.unit_vector((1, 0)))
        assert out[ws.pos[(1, 0)]] == ONE
        assert out[ws.pos[(0, 1)]] == q(-1) - q(1)

    def test_involution_v2v1(self):
        for l in range(4):
            assert psi_tensor2((2, 1), l).is_involution()


class TestDualCanonicalBasis:
    def test_golden_v1v1(self):
        basis = dual_canonical_basis((1, 1), 1)
        by_index = {b.index: b for b in basis}
        b10 = by_index[(1, 0)]
        assert b10.coeff((1, 0)) == ONE and not b10.coeff((0, 1))
        b01 = by_index[(0, 1)]
        assert b01.coeff((0, 1)) == ONE
        assert b01.coeff((1, 0)) == -q(-1)

    def test_level_zero_single_monomial(self):
        for lams in [(1,), (2, 3), (1, 1, 1)]:
            basis = dual_canonical_basis(lams, 0)
            assert len(basis) == 1
            assert basis[0].coeff(tuple(0 for _ in lams)) == ONE
            assert len(basis[0].support()) == 1

    def test_single_factor_monomials(self):
        for lam in range(4):
            for m in range(lam + 1):
                basis = dual_canonical_basis((lam,), m)
                assert len(basis) == 1
                assert len(basis[0].support()) == 1

    @pytest.mark.parametrize("lams", [(1, 1), (2, 1), (1, 1, 1), (2, 2),
                                      (1, 2, 1)])
    def test_solver_contract(self, lams):
        for l in range(sum(lams) + 1):
            basis = dual_canonical_basis(lams, l)
            assert [b.index for b in basis] == enumerate_P(lams, l)
            psi = psi_c(lams, l)
            for b in basis:
                assert linalg.mat_eq(psi.apply(b.coords), b.coords)
                assert b.coeff(b.index) == ONE
                for k in b.support():
                    assert k >= b.index
                    if k != b.index:
                        assert in_qinv_ideal(b.coeff(k))

    def test_uniqueness_perturbation_breaks_fixedness(self):
        basis = dual_canonical_basis((2, 2), 2)
        psi = psi_c((2, 2), 2)
        eps = q(-1)
        for i, b in enumerate(basis):
            for k in basis[i + 1:]:
                perturbed = b.coords + linalg.mat_scale(k.coords, eps)
                assert not linalg.mat_eq(psi.apply(perturbed), perturbed)


class TestCanonicalPair:
    def test_v1v1_level1(self):
        basis = canonical_basis_pair((1, 1), 1)
        by_index = {b.index: b for b in basis}
        pure = by_index[(0, 1)]
        assert len(pure.support()) == 1
        corrected = by_index[(1, 0)]
        assert corrected.coeff((1, 0)) == ONE
        low = corrected.coeff((0, 1))
        assert low and in_qinv_ideal(low)

    def test_top_space_pure_monomial(self):
        basis = canonical_basis_pair((2, 3), 0)
        assert len(basis) == 1 and len(basis[0].support()) == 1

    @pytest.mark.parametrize("lams", [(1, 1), (2, 1), (2, 2), (1, 3)])
    def test_duality_with_dual_basis(self, lams):
        for l in range(sum(lams) + 1):
            can = canonical_basis_pair(lams, l)
            dual = dual_canonical_basis(lams, l)
            for db in dual:
                for cb in can:
                    pair = sum((a * b for a, b in zip(db.coords, cb.coords)),
                               start=QScalar())
                    expected = ONE if db.index == cb.index else QScalar()
                    assert pair == expected


class TestSingular:
    def test_golden_example(self):
        basis = dual_canonical_basis((1, 1), 1)
        by_index = {b.index: b for b in basis}
        assert is_singular(by_index[(0, 1)])
        assert not is_singular(by_index[(1, 0)])

    def test_level_zero_always_singular(self):
        basis = dual_canonical_basis((2, 1), 0)
        assert is_singular(basis[0])

    def test_v2_level1_empty(self):
        basis = dual_canonical_basis((2,), 1)
        assert singular_subset(basis) == []

    def test_subset_examples(self):
        subset = singular_subset(dual_canonical_basis((1, 1), 1))
        assert [b.index for b in subset] == [(0, 1)]
        subset4 = singular_subset(dual_canonical_basis((1, 1, 1, 1), 2))
        assert len(subset4) == 2  # Catalan C_2

    def test_count_check_fires_on_corruption(self):
        basis = dual_canonical_basis((1, 1), 1)
        # drop the singular member: the rank check must notice
        broken = [b for b in basis if b.index == (1, 0)]
        with pytest.raises(CountMismatchError):
            singular_subset(broken)


class TestLemmaDimensionIdentity:
    def test_singular_slice_of_trivial_verma_product(self):
        # dim ker E on (M_0^c x V)[mu] equals dim V[mu]: attaching a
        # contragredient copy of the trivial Verma enlarges the slice but
        # its singular part keeps the original dimension.
        from qcanon.tensor import coproduct_matrix
        from qcanon.weightmod import GEN_E, contragredient, \
            make_simple, make_verma_truncated
        for lams, l in [((1, 1), 1), ((2, 1), 2), ((1, 1, 1), 1)]:
            v_dim = len(enumerate_P(lams, l))
            factors = (contragredient(make_verma_truncated(0, sum(lams))),) \
                + tuple(contragredient(make_simple(x)) for x in lams)
            e = coproduct_matrix(factors, l, GEN_E)
            assert linalg.kernel_dimension(e) == v_dim
