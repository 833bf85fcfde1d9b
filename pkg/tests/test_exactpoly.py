"""The exact polynomial kernel, checked against independent brute force.

The characteristic polynomial is cross-checked by expanding det(x*I - M)
as a signed sum over permutations (an O(n!) oracle that shares no code
with the production path), and the eigen-product against direct
substitution of known roots.
"""

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from xyzspectra.exactpoly import (
    BiPoly,
    IntPoly,
    NotDivisible,
    RatPoly,
    charpoly,
    compose_linear,
    det,
    eig_product,
    exact_div,
    reduced_qpoly,
    resultant,
)
from xyzspectra.graph import complete_graph, cycle_graph, petersen_graph
from xyzspectra.linalg import IntMatrix, signless_laplacian


def poly(*coeffs):
    """Ascending-coefficient literal."""
    return IntPoly(coeffs)


def from_roots(*roots):
    out = IntPoly.one()
    for c in roots:
        out = out * IntPoly.linear_root(c)
    return out


def brute_charpoly(mat):
    """Permutation expansion of det(x*I - M); independent oracle, n <= 6."""
    n = mat.rows
    entries = [
        [
            IntPoly((-mat.entries[i][j], 1)) if i == j else IntPoly((-mat.entries[i][j],))
            for j in range(n)
        ]
        for i in range(n)
    ]
    total = IntPoly.zero()
    for perm in itertools.permutations(range(n)):
        inversions = sum(
            1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b]
        )
        term = IntPoly.one()
        for i in range(n):
            term = term * entries[i][perm[i]]
        total = total + (-1) ** (inversions % 2) * term
    return total


class TestArithmetic:
    def test_exact_div_basic(self):
        assert exact_div(poly(-1, 0, 1), poly(-1, 1)) == poly(1, 1)

    def test_exact_div_not_divisible(self):
        with pytest.raises(NotDivisible):
            exact_div(poly(1, 0, 1), poly(-1, 1))

    def test_pow_binomial(self):
        assert poly(-2, 1) ** 3 == poly(-8, 12, -6, 1)

    def test_mul_and_eval(self):
        p = poly(1, 2) * poly(3, 4)
        assert p == poly(3, 10, 8)
        assert p(2) == 55

    def test_zero_normalization(self):
        assert poly(0, 0, 0) == IntPoly.zero()
        assert poly(1, 2, 0, 0).degree == 1
        assert IntPoly.zero().degree == -1

    def test_div_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            exact_div(poly(1), IntPoly.zero())

    def test_ratpoly_reduces(self):
        rp = RatPoly(from_roots(1, 2, 3)) * RatPoly(IntPoly.one(), from_roots(2))
        assert rp.to_poly() == from_roots(1, 3)

    def test_ratpoly_not_polynomial(self):
        with pytest.raises(NotDivisible):
            RatPoly(from_roots(1), from_roots(2)).to_poly()

    def test_pretty(self):
        assert poly(40, -14, 1).pretty("lam") == "lam^2 - 14*lam + 40"
        assert IntPoly.zero().pretty() == "0"


class TestComposeLinear:
    def test_square_shift(self):
        assert compose_linear(poly(0, 0, 1), -1, 2) == poly(4, -4, 1)

    def test_identity_shift(self):
        f = poly(-4, 9, -6, 1)
        assert compose_linear(f, 1, 0) == f

    def test_reflect_k3(self):
        # f(1 - x) for f = (x-4)(x-1)^2 is -x^3 - 3x^2; spot values at 0..3
        f = poly(-4, 9, -6, 1)
        g = compose_linear(f, -1, 1)
        assert g == poly(0, 0, -3, -1)
        for x in range(4):
            assert g(x) == f(1 - x)


class TestCharpoly:
    def test_zero_matrix(self):
        assert charpoly(IntMatrix.zeros(2, 2)) == poly(0, 0, 1)

    def test_k3_hand_expansion(self):
        assert charpoly(signless_laplacian(complete_graph(3))) == poly(-4, 9, -6, 1)

    def test_c4_hand_expansion(self):
        assert charpoly(signless_laplacian(cycle_graph(4))) == poly(0, -16, 20, -8, 1)

    def test_known_spectra(self):
        # Q = D + A shifts the adjacency spectrum by the degree:
        # Petersen A-spectrum {3, 1^5, (-2)^4}, 3-cube {3, 1^3, (-1)^3, -3},
        # K_{4,4} {4, 0^6, -4}
        from xyzspectra.graph import complete_bipartite_graph, hypercube_graph

        assert charpoly(signless_laplacian(petersen_graph())) == from_roots(
            6, 4, 4, 4, 4, 4, 1, 1, 1, 1
        )
        assert charpoly(signless_laplacian(hypercube_graph(3))) == from_roots(
            6, 4, 4, 4, 2, 2, 2, 0
        )
        assert charpoly(signless_laplacian(complete_bipartite_graph(4))) == from_roots(
            8, 4, 4, 4, 4, 4, 4, 0
        )

    def test_against_permutation_expansion(self):
        rng = random.Random(7)
        for _ in range(20):
            n = rng.randint(1, 5)
            mat = IntMatrix.from_rows(
                [[rng.randint(-6, 6) for _ in range(n)] for _ in range(n)]
            )
            assert charpoly(mat) == brute_charpoly(mat)

    def test_constant_term_is_signed_det(self):
        rng = random.Random(11)
        for _ in range(20):
            n = rng.randint(1, 6)
            mat = IntMatrix.from_rows(
                [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
            )
            assert charpoly(mat)(0) == (-1) ** (n % 2) * det(mat)

    def test_block_diagonal_factorizes(self):
        # charpoly of a block-diagonal matrix is the product of the blocks'
        rng = random.Random(19)
        for _ in range(10):
            na, nb = rng.randint(1, 4), rng.randint(1, 4)
            a = [[rng.randint(-5, 5) for _ in range(na)] for _ in range(na)]
            b = [[rng.randint(-5, 5) for _ in range(nb)] for _ in range(nb)]
            rows = [row + [0] * nb for row in a] + [[0] * na + row for row in b]
            combined = charpoly(IntMatrix.from_rows(rows))
            parts = charpoly(IntMatrix.from_rows(a)) * charpoly(IntMatrix.from_rows(b))
            assert combined == parts

    def test_permutation_similarity(self):
        rng = random.Random(13)
        for _ in range(10):
            n = 6
            mat = IntMatrix.from_rows(
                [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
            )
            perm = list(range(n))
            rng.shuffle(perm)
            p = IntMatrix.from_rows(
                [[1 if perm[i] == j else 0 for j in range(n)] for i in range(n)]
            )
            assert charpoly(p.transpose() * mat * p) == charpoly(mat)


class TestDet:
    def test_small_cases(self):
        assert det(IntMatrix.from_rows([[5]])) == 5
        assert det(IntMatrix.from_rows([[1, 2], [3, 4]])) == -2
        assert det(IntMatrix.identity(4)) == 1

    def test_singular_with_zero_pivot(self):
        assert det(IntMatrix.from_rows([[0, 1], [0, 2]])) == 0

    def test_row_swap_pivoting(self):
        assert det(IntMatrix.from_rows([[0, 1], [1, 0]])) == -1

    def test_against_permutation_expansion(self):
        rng = random.Random(17)
        for _ in range(20):
            n = rng.randint(1, 5)
            mat = IntMatrix.from_rows(
                [[rng.randint(-6, 6) for _ in range(n)] for _ in range(n)]
            )
            assert det(mat) == brute_charpoly(mat)(0) * (-1) ** (n % 2)


class TestReducedQPoly:
    def test_k3(self):
        assert reduced_qpoly(from_roots(4, 1, 1), 2) == from_roots(1, 1)

    def test_c4(self):
        assert reduced_qpoly(from_roots(0, 2, 2, 4), 2) == from_roots(0, 2, 2)

    def test_petersen_degree(self):
        f = charpoly(signless_laplacian(petersen_graph()))
        reduced = reduced_qpoly(f, 3)
        assert reduced.degree == 9
        assert reduced.is_monic
        assert reduced * IntPoly.linear_root(6) == f

    def test_wrong_degree_not_divisible(self):
        with pytest.raises(NotDivisible):
            reduced_qpoly(from_roots(1, 1), 2)  # 4 is not a root


class TestResultant:
    def test_two_linear(self):
        assert resultant(from_roots(3), from_roots(5)) == 3 - 5

    def test_constant_h(self):
        assert resultant(from_roots(1, 2, 3), poly(7)) == 343

    def test_shared_root(self):
        assert resultant(from_roots(1, 2), from_roots(2, 9)) == 0


class TestEigProduct:
    def test_single_root(self):
        # p = q - c, g = lam - q  ->  lam - c
        g = BiPoly.u() - BiPoly.v()
        assert eig_product(from_roots(5), g) == from_roots(5)

    def test_k3_reduced_square(self):
        # p = (q-1)^2, g = lam - 3 - q  ->  (lam-4)^2
        g = BiPoly.u() - 3 - BiPoly.v()
        assert eig_product(from_roots(1, 1), g) == from_roots(4, 4)

    def test_c4_quadratic_factor(self):
        # p = q(q-2)^2 and g = (lam-r-q)(lam-2r+2-q)-q with r=2:
        # substituting the roots 0, 2, 2 gives (lam-2)^2 * ((lam-4)^2 - 2)^2
        lam, q = BiPoly.u(), BiPoly.v()
        g = (lam - 2 - q) * (lam - 2 - q) - q
        expected = (
            (IntPoly.linear_root(2) * IntPoly.linear_root(2))
            * (from_roots(4, 4) - poly(2)) ** 2
        )
        assert eig_product(from_roots(0, 2, 2), g) == expected

    def test_identity_reproduces_p(self):
        g = BiPoly.u() - BiPoly.v()
        rng = random.Random(23)
        for _ in range(25):
            deg = rng.randint(1, 8)
            p = IntPoly([rng.randint(-9, 9) for _ in range(deg)] + [1])
            assert eig_product(p, g) == p

    def test_multiplicativity(self):
        lam, q = BiPoly.u(), BiPoly.v()
        g = (lam - 1 - q) * (lam + q) - q
        rng = random.Random(29)
        for _ in range(10):
            p1 = IntPoly([rng.randint(-5, 5) for _ in range(rng.randint(1, 4))] + [1])
            p2 = IntPoly([rng.randint(-5, 5) for _ in range(rng.randint(1, 4))] + [1])
            assert eig_product(p1 * p2, g) == eig_product(p1, g) * eig_product(p2, g)

    def test_constant_p(self):
        g = BiPoly.u() - BiPoly.v()
        assert eig_product(IntPoly.one(), g) == IntPoly.one()

    def test_degree_drop_in_q(self):
        # g = (lam - 1)*q + lam: at lam = 1 the q-degree collapses to 0
        lam, q = BiPoly.u(), BiPoly.v()
        g = (lam - 1) * q + lam
        p = from_roots(2, 3)
        got = eig_product(p, g)
        # direct substitution: ((lam-1)*2 + lam) * ((lam-1)*3 + lam)
        expected = poly(-2, 3) * poly(-3, 4)
        assert got == expected

    def test_non_monic_rejected(self):
        with pytest.raises(ValueError):
            eig_product(poly(1, 2), BiPoly.u() - BiPoly.v())


class TestBiPoly:
    def test_eval_u(self):
        lam, q = BiPoly.u(), BiPoly.v()
        g = (lam - 2) * (lam - q) - q
        # at lam = 5: (3)*(5 - q) - q = 15 - 4q
        assert g.eval_u(5) == poly(15, -4)

    def test_degrees(self):
        lam, q = BiPoly.u(), BiPoly.v()
        g = (lam - q) * (lam - q)
        assert (g.deg_u, g.deg_v) == (2, 2)

    def test_int_mixing(self):
        assert 3 + BiPoly.u() == BiPoly.u() + 3
        assert 2 * BiPoly.v() == BiPoly.v() + BiPoly.v()
        assert (1 - BiPoly.u()) + (BiPoly.u() - 1) == BiPoly()

    def test_to_poly_in_u(self):
        p = (BiPoly.u() - 3) * (BiPoly.u() + 1)
        assert p.to_poly_in_u() == poly(-3, -2, 1)
        with pytest.raises(ValueError):
            (BiPoly.u() - BiPoly.v()).to_poly_in_u()


# ----------------------------------------------------------------------------
# Property-based checks.
# ----------------------------------------------------------------------------

coeff_lists = st.lists(st.integers(-50, 50), min_size=1, max_size=7)


@given(coeff_lists, coeff_lists)
def test_exact_div_roundtrips_mul(a_coeffs, b_coeffs):
    a, b = IntPoly(a_coeffs), IntPoly(b_coeffs)
    if b.is_zero:
        return
    assert exact_div(a * b, b) == a


@given(coeff_lists, st.integers(-10, 10))
def test_compose_linear_reflection_involution(coeffs, b):
    f = IntPoly(coeffs)
    assert compose_linear(compose_linear(f, -1, b), -1, b) == f


@settings(max_examples=40)
@given(st.lists(st.integers(-9, 9), min_size=1, max_size=6))
def test_eig_product_identity_property(coeffs):
    p = IntPoly(coeffs + [1])
    assert eig_product(p, BiPoly.u() - BiPoly.v()) == p
