import math
import random
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors

from helpers import det_by_elimination, invariant_factors_by_minors
from mcgpic.linalg import (
    FgAbelianGroup,
    IntMatrix,
    cokernel,
    direct_sum,
    reduce_mod,
    smith_normal_form,
    theta_wedge_matrix,
)


@st.composite
def small_matrices(draw, max_dim=6):
    m = draw(st.integers(0, max_dim))
    n = draw(st.integers(0, max_dim))
    entries = draw(st.lists(st.integers(-9, 9), min_size=m * n, max_size=m * n))
    return IntMatrix(m, n, tuple(entries))


def check_snf(M):
    res = smith_normal_form(M)
    assert res.U @ M @ res.V == res.S
    assert res.S.is_diagonal()
    assert abs(res.U.det()) == 1
    assert abs(res.V.det()) == 1
    diag = res.invariants
    assert all(x >= 0 for x in diag)
    nonzero = [x for x in diag if x]
    # zeros trail the nonzero entries
    assert diag[: len(nonzero)] == nonzero
    for a, b in zip(nonzero, nonzero[1:]):
        assert b % a == 0
    return res


class TestIntMatrix:
    def test_shape_validation(self):
        with pytest.raises(ValueError):
            IntMatrix(2, 2, (1, 2, 3))

    def test_matmul_and_transpose(self):
        A = IntMatrix.from_rows([[1, 2, 3], [4, 5, 6]])
        assert (A @ A.transpose()).to_rows() == [[14, 32], [32, 77]]

    def test_no_overflow(self):
        big = 10 ** 40
        A = IntMatrix.from_rows([[big, 1], [0, big]])
        assert A.det() == big * big
        assert smith_normal_form(A).invariants == [1, big * big]

    @given(small_matrices(max_dim=5))
    def test_det_matches_elimination(self, M):
        if M.rows == M.cols:
            assert M.det() == det_by_elimination(M.to_rows())


class TestSmithNormalForm:
    def test_identity(self):
        res = smith_normal_form(IntMatrix.identity(2))
        assert res.S == res.U == res.V == IntMatrix.identity(2)

    def test_two_by_two(self):
        res = check_snf(IntMatrix.from_rows([[2, 4], [6, 8]]))
        assert res.invariants == [2, 4]

    def test_zero(self):
        assert smith_normal_form(IntMatrix.from_rows([[0]])).invariants == [0]

    def test_empty(self):
        res = smith_normal_form(IntMatrix.zeros(0, 0))
        assert res.S.shape == (0, 0)

    @given(small_matrices())
    @settings(max_examples=300)
    def test_invariants(self, M):
        check_snf(M)

    @given(small_matrices(max_dim=4))
    @settings(max_examples=150)
    def test_matches_determinantal_divisors(self, M):
        diag = [x for x in smith_normal_form(M).invariants if x]
        assert diag == invariant_factors_by_minors(M.to_rows(), M.cols)


class TestCokernel:
    def test_free(self):
        assert cokernel(IntMatrix.zeros(0, 3)) == FgAbelianGroup(3)

    def test_cyclic(self):
        assert cokernel(IntMatrix.from_rows([[10]])) == FgAbelianGroup.cyclic(10)

    def test_two_relations_one_generator(self):
        n, d = 6, 2
        M = IntMatrix.from_rows([[2 * d * (n - 1)], [n * (n - 1)]])
        assert cokernel(M) == FgAbelianGroup.cyclic(10)

    @given(small_matrices(max_dim=5), st.randoms(use_true_random=False))
    def test_row_operation_invariance(self, M, rnd):
        if M.rows == 0:
            return
        rows = M.to_rows()
        for _ in range(6):
            op = rnd.randrange(3)
            i, j = rnd.randrange(M.rows), rnd.randrange(M.rows)
            if op == 0:
                rows[i], rows[j] = rows[j], rows[i]
            elif op == 1:
                rows[i] = [-x for x in rows[i]]
            elif i != j:
                q = rnd.randint(-5, 5)
                rows[i] = [x + q * y for x, y in zip(rows[i], rows[j])]
        assert cokernel(IntMatrix.from_rows(rows, cols=M.cols)) == cokernel(M)

    @given(small_matrices(max_dim=5))
    def test_duplicate_rows(self, M):
        doubled = IntMatrix.from_rows(M.to_rows() * 2, cols=M.cols)
        assert cokernel(doubled) == cokernel(M)


class TestThetaWedge:
    def test_shape_g2(self):
        M = theta_wedge_matrix(2)
        assert M.shape == (4, comb(4, 3))

    @pytest.mark.parametrize("g", [2, 3, 4])
    def test_split_injective(self, g):
        M = theta_wedge_matrix(g)
        # sympy is the independent SNF here
        ref = invariant_factors(Matrix(M.to_rows()), domain=ZZ)
        assert all(int(x) == 1 for x in ref) and len(ref) == 2 * g
        assert cokernel(M) == FgAbelianGroup(comb(2 * g, 3) - 2 * g)

    def test_rows_are_theta_wedge_basis_vectors(self):
        # theta ^ a_1 = a_2 ^ b_2 ^ a_1 = a_1 ^ a_2 ^ b_2 for g = 2; basis a1,a2,b1,b2 -> 0,1,2,3
        row = theta_wedge_matrix(2).to_rows()[0]
        assert row == [0, 1, 0, 0]  # triples (0,1,2), (0,1,3), (0,2,3), (1,2,3)

    def test_rejects_small_genus(self):
        with pytest.raises(ValueError):
            theta_wedge_matrix(1)


class TestFgAbelianGroup:
    def test_canonical_strings(self):
        assert str(FgAbelianGroup()) == "0"
        assert str(FgAbelianGroup(1, (2,))) == "Z x Z/2"
        assert str(FgAbelianGroup(3)) == "Z^3"
        assert str(FgAbelianGroup(0, (2, 4))) == "Z/2 x Z/4"

    @pytest.mark.parametrize("text", ["0", "Z", "Z^9 x Z/2", "Z/2 x Z/2 x Z/12", "Z/4 x Z/8"])
    def test_parse_roundtrip(self, text):
        assert str(FgAbelianGroup.parse(text)) == text

    def test_parse_normalizes(self):
        assert FgAbelianGroup.parse("Z/4 x Z/6") == FgAbelianGroup(0, (2, 12))
        assert FgAbelianGroup.parse("Z/2 x Z/3") == FgAbelianGroup.cyclic(6)

    def test_json(self):
        G = FgAbelianGroup(2, (2, 4))
        assert G.to_dict() == {"free_rank": 2, "torsion": [2, 4]}
        assert FgAbelianGroup.from_dict(G.to_dict()) == G

    def test_chain_enforced(self):
        with pytest.raises(ValueError):
            FgAbelianGroup(0, (4, 6))
        with pytest.raises(ValueError):
            FgAbelianGroup(0, (1,))

    @given(st.lists(st.integers(0, 60), max_size=6))
    def test_from_orders_matches_diagonal_cokernel(self, orders):
        n = len(orders)
        diag = IntMatrix.from_rows(
            [[orders[i] if i == j else 0 for j in range(n)] for i in range(n)], cols=n
        )
        assert FgAbelianGroup.from_orders(orders) == cokernel(diag)

    def test_direct_sum(self):
        assert direct_sum(FgAbelianGroup.cyclic(4), FgAbelianGroup.cyclic(6), FgAbelianGroup(1)) == FgAbelianGroup(1, (2, 12))


class TestReduceMod:
    def test_free(self):
        assert reduce_mod(FgAbelianGroup(3), 2) == FgAbelianGroup(0, (2, 2, 2))

    def test_torsion(self):
        assert reduce_mod(FgAbelianGroup.cyclic(10), 4) == FgAbelianGroup.cyclic(2)

    def test_lambda3_0_g3(self):
        assert reduce_mod(cokernel(theta_wedge_matrix(3)), 3) == FgAbelianGroup(0, (3,) * 14)

    def test_rejects_small_modulus(self):
        with pytest.raises(ValueError):
            reduce_mod(FgAbelianGroup(1), 1)

    @given(st.integers(0, 4), st.lists(st.integers(2, 40), max_size=4), st.integers(2, 30))
    def test_orders(self, r, orders, m):
        G = FgAbelianGroup.from_orders(orders, free_rank=r)
        expected = m ** r * math.prod(math.gcd(o, m) for o in orders)
        assert reduce_mod(G, m).order == expected


def test_random_matrices_seeded():
    rnd = random.Random(7)
    for _ in range(200):
        m, n = rnd.randint(1, 6), rnd.randint(1, 6)
        check_snf(IntMatrix(m, n, tuple(rnd.randint(-9, 9) for _ in range(m * n))))
