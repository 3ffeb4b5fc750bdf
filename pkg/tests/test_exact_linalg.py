import math
import random

import numpy as np
import pytest
import sympy

from exact_linalg import (
    DimensionMismatchError,
    InexactDivisionError,
    IntMatrix,
    IntPolynomial,
    InvalidPermutationError,
    NotInvariantError,
    ReducibleMatrixError,
    char_poly,
    determinant,
    dominant_eigenvalue,
    identity,
    is_block_lower_triangular,
    mat_mul,
    mat_pow,
    permutation_matrix,
    permute_basis,
    poly_divexact,
    restrict,
    scc_blocks,
    transposition,
)
from mapping_class import phi_matrix
from surface_model import validate_k

X = IntPolynomial.x()
GOLDEN = IntPolynomial([-1, -1, 1])


def random_matrix(rng, n, low=-3, high=3):
    return IntMatrix([[rng.randint(low, high) for _ in range(n)] for _ in range(n)])


def random_permutation(rng, n):
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    return perm


def test_matrix_must_be_square():
    with pytest.raises(DimensionMismatchError):
        IntMatrix([[1, 2]])
    with pytest.raises(DimensionMismatchError):
        IntMatrix([])


def test_mat_mul_identity(pinned_matrices):
    m = pinned_matrices["phi"]
    assert mat_mul(identity(6), m) == m
    assert mat_mul(m, identity(6)) == m


def test_mat_mul_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        mat_mul(identity(2), identity(3))


def test_permutation_matrices_compose():
    rng = random.Random(7)
    for _ in range(20):
        s = random_permutation(rng, 5)
        t = random_permutation(rng, 5)
        composed = [s[t[i] - 1] for i in range(5)]
        assert mat_mul(permutation_matrix(s), permutation_matrix(t)) == permutation_matrix(composed)


def test_phi_k3_from_generators(pinned_matrices):
    rotation = pinned_matrices["rotation"]
    product = mat_mul(mat_mul(rotation, pinned_matrices["twist_1"]), mat_pow(rotation, 2))
    assert product == pinned_matrices["phi"]


def test_exact_products_do_not_overflow():
    m = IntMatrix([[2 ** 70, 1], [1, 0]])
    assert mat_mul(m, m).entry(1, 1) == 2 ** 140 + 1


def test_char_poly_phi_k3(pinned_matrices):
    expected = (X + 1) ** 2 * (X - 1) ** 2 * GOLDEN
    assert char_poly(pinned_matrices["phi"]) == expected
    assert char_poly(pinned_matrices["phi"]).coeffs == (-1, -1, 3, 2, -3, -1, 1)


def test_char_poly_small_cases():
    assert char_poly(IntMatrix([[0, 1], [1, 1]])) == GOLDEN
    assert char_poly(IntMatrix([[5]])) == X - 5
    assert char_poly(identity(4)) == (X - 1) ** 4


def test_char_poly_matches_sympy():
    rng = random.Random(11)
    for n in range(1, 8):
        m = random_matrix(rng, n, -9, 9)
        oracle = sympy.Matrix(m.rows()).charpoly().all_coeffs()
        assert list(reversed(char_poly(m).coeffs)) == [int(c) for c in oracle]


def test_determinant_bareiss_against_char_poly():
    rng = random.Random(3)
    for n in range(1, 8):
        m = random_matrix(rng, n)
        assert determinant(m) == (-1) ** n * char_poly(m)(0)
        assert determinant(m) == int(sympy.Matrix(m.rows()).det())


def test_determinant_with_zero_pivot():
    assert determinant(IntMatrix([[0, 1], [1, 0]])) == -1
    assert determinant(IntMatrix([[0, 0], [1, 0]])) == 0


def test_permute_basis_swap_reproduces_reducible_form(pinned_matrices):
    swapped = permute_basis(pinned_matrices["phi"], transposition(6, 3, 5))
    assert swapped == pinned_matrices["reducible"]


def test_permute_basis_identity(pinned_matrices):
    assert permute_basis(pinned_matrices["phi"], range(1, 7)) == pinned_matrices["phi"]


def test_permute_basis_is_conjugation():
    rng = random.Random(5)
    m = random_matrix(rng, 5)
    perm = random_permutation(rng, 5)
    p = permutation_matrix(perm)
    p_inverse = IntMatrix([list(row) for row in zip(*p.rows())])
    assert permute_basis(m, perm) == mat_mul(mat_mul(p, m), p_inverse)


def test_permute_basis_rejects_bad_permutation(pinned_matrices):
    with pytest.raises(InvalidPermutationError):
        permute_basis(pinned_matrices["phi"], [1, 1, 2, 3, 4, 5])
    with pytest.raises(InvalidPermutationError):
        permute_basis(pinned_matrices["phi"], [1, 2, 3])


@pytest.mark.parametrize("k", [3, 5])
def test_char_poly_similarity_invariant(k):
    m = phi_matrix(validate_k(k))
    reference = char_poly(m)
    rng = random.Random(k)
    for _ in range(50):
        perm = random_permutation(rng, m.n)
        assert char_poly(permute_basis(m, perm)) == reference


def test_scc_blocks_phi_k3(pinned_matrices):
    structure = scc_blocks(pinned_matrices["phi"])
    assert structure.blocks == ((1, 4), (2, 5), (3, 6))
    assert structure.sinks == ((3, 6),)


def test_scc_blocks_identity_and_positive():
    assert scc_blocks(identity(4)).blocks == ((1,), (2,), (3,), (4,))
    positive = IntMatrix([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    assert scc_blocks(positive).blocks == ((1, 2, 3),)


def test_scc_order_is_block_lower_triangular():
    rng = random.Random(13)
    for n in (3, 5, 8):
        for _ in range(50):
            # Sparse nonnegative patterns give many blocks
            m = IntMatrix([[int(rng.random() < 0.2) for _ in range(n)] for _ in range(n)])
            structure = scc_blocks(m)
            assert sorted(structure.order) == list(range(1, n + 1))
            assert is_block_lower_triangular(m, structure)


def test_restrict_sink(pinned_matrices):
    assert restrict(pinned_matrices["phi"], (3, 6)) == IntMatrix([[0, 1], [1, 1]])
    assert restrict(pinned_matrices["phi"], range(1, 7)) == pinned_matrices["phi"]


def test_restrict_sink_k5():
    assert restrict(phi_matrix(validate_k(5)), (5, 10)) == IntMatrix([[0, 1], [1, 1]])


def test_restrict_rejects_non_invariant_block(pinned_matrices):
    with pytest.raises(NotInvariantError):
        restrict(pinned_matrices["phi"], (1, 4))


def test_dominant_eigenvalue_golden():
    value = dominant_eigenvalue(IntMatrix([[0, 1], [1, 1]]))
    assert value == pytest.approx((1 + math.sqrt(5)) / 2, abs=1e-12)
    assert value == pytest.approx(1.618033988749895, abs=1e-12)


def test_dominant_eigenvalue_scalars():
    assert dominant_eigenvalue(IntMatrix([[1]])) == 1
    assert dominant_eigenvalue(IntMatrix([[2]])) == 2


def test_dominant_eigenvalue_power_iteration():
    # Companion-style irreducible 3x3 with Perron root 2
    m = IntMatrix([[0, 2, 0], [0, 0, 2], [2, 0, 0]])
    assert dominant_eigenvalue(m, tol=1e-10) == pytest.approx(2, abs=1e-9)
    # Cyclic permutation: periodic, still handled through the shift by I
    cycle = IntMatrix([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
    assert dominant_eigenvalue(cycle, tol=1e-10) == pytest.approx(1, abs=1e-9)
    # x^3 - x - 1: the Perron root is the plastic number
    plastic = IntMatrix([[0, 1, 0], [0, 0, 1], [1, 1, 0]])
    assert dominant_eigenvalue(plastic, tol=1e-11) == pytest.approx(1.324717957244746, abs=1e-9)


def test_dominant_eigenvalue_rejects_reducible(pinned_matrices):
    with pytest.raises(ReducibleMatrixError):
        dominant_eigenvalue(pinned_matrices["phi"])
    with pytest.raises(ReducibleMatrixError):
        dominant_eigenvalue(IntMatrix([[0]]))


def test_poly_divexact_examples(pinned_matrices):
    quotient = poly_divexact(char_poly(pinned_matrices["reducible"]), GOLDEN)
    assert quotient == (X ** 2 - 1) ** 2
    assert poly_divexact(GOLDEN, IntPolynomial([1])) == GOLDEN
    assert poly_divexact(X ** 2 - 1, X - 1) == X + 1


def test_poly_divexact_detects_remainder():
    with pytest.raises(InexactDivisionError):
        poly_divexact(X ** 2 + 1, X - 1)
    with pytest.raises(ValueError):
        poly_divexact(X ** 2, 2 * X)


def test_poly_divexact_recovers_factor():
    rng = random.Random(17)
    for _ in range(50):
        a = IntPolynomial([rng.randint(-5, 5) for _ in range(rng.randint(1, 5))])
        b = IntPolynomial([rng.randint(-5, 5) for _ in range(rng.randint(0, 4))] + [1])
        assert poly_divexact(a * b, b) == a


def test_polynomial_formatting():
    assert str((X + 1) ** 2 * (X - 1) ** 2 * GOLDEN) == "x^6 - x^5 - 3*x^4 + 2*x^3 + 3*x^2 - x - 1"
    assert str(IntPolynomial([])) == "0"


@pytest.mark.parametrize("scale", [1, 10, 100, 1000, 100000])
def test_dominant_eigenvalue_nearly_periodic_spectrum(scale):
    # Eigenvalues close to +rho and -rho
    m = IntMatrix([[0, 2 * scale, 1], [scale, 0, 3 * scale], [1, scale, 0]])
    oracle = max(abs(np.linalg.eigvals(m.to_float())))
    assert dominant_eigenvalue(m) == pytest.approx(oracle, rel=1e-9)


def test_dominant_eigenvalue_scale_hundred():
    m = IntMatrix([[0, 200, 1], [100, 0, 300], [1, 100, 0]])
    assert dominant_eigenvalue(m) == pytest.approx(224.3057601110812, rel=1e-9)


def test_dominant_eigenvalue_matches_numpy():
    rng = random.Random(19)
    for n in range(3, 8):
        for _ in range(20):
            rows = [[rng.randint(0, 1000) if rng.random() < 0.4 else 0 for _ in range(n)] for _ in range(n)]
            # A weighted n-cycle keeps the pattern strongly connected
            for i in range(n):
                rows[i][(i + 1) % n] = rng.randint(1, 1000)
            m = IntMatrix(rows)
            oracle = max(abs(np.linalg.eigvals(m.to_float())))
            assert dominant_eigenvalue(m) == pytest.approx(oracle, rel=1e-8)


def test_dominant_eigenvalue_weighted_cycle():
    # Pure 5-cycle: every eigenvalue has modulus 1000
    rows = [[0] * 5 for _ in range(5)]
    for i in range(5):
        rows[i][(i + 1) % 5] = 1000
    assert dominant_eigenvalue(IntMatrix(rows)) == pytest.approx(1000, rel=1e-12)
