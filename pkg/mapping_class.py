# mapping_class.py - Generator matrices, words, Phi_k and the golden-ratio verification
import logging
import math
import random
from dataclasses import dataclass, field

from config import DILATATION_TOLERANCE, GOLDEN_RATIO
from exact_linalg import (
    IntMatrix,
    IntPolynomial,
    char_poly,
    determinant,
    dominant_eigenvalue,
    identity,
    mat_mul,
    mat_pow,
    permute_basis,
    poly_product,
    principal_submatrix,
    restrict,
    scc_blocks,
    transpose,
    transposition,
)
from surface_model import intersection_table

logger = logging.getLogger(__name__)

TWIST = "twist"
ROT = "rot"
ROT_INVERSE = "rot_inverse"

GOLDEN_POLY = IntPolynomial([-1, -1, 1])  # x^2 - x - 1


class WordError(ValueError):
    """A word letter that is not a generator of this surface."""


class VerificationError(AssertionError):
    pass


@dataclass(frozen=True)
class Letter:
    kind: str
    index: int = 0

    @classmethod
    def twist(cls, i):
        return cls(TWIST, int(i))

    def __str__(self):
        if self.kind == TWIST:
            return f"t{self.index}"
        return "r" if self.kind == ROT else "r-"


@dataclass(frozen=True)
class TwistWord:
    """
    Word in the generators; the rightmost letter acts first.

    TwistWord((Letter(ROT), Letter.twist(1))) is r ∘ T_{c1}.
    """

    letters: tuple = ()

    def __add__(self, other):
        return TwistWord(self.letters + other.letters)

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return " ".join(str(letter) for letter in self.letters)

    def twist_indices(self):
        return tuple(letter.index for letter in self.letters)


@dataclass(frozen=True)
class SpectralReport:
    k: int
    matrix: IntMatrix
    char_poly: IntPolynomial
    expected_char_poly: IntPolynomial
    blocks: object
    sink_block: tuple
    sink_restriction: IntMatrix
    sink_char_poly: IntPolynomial
    dilatation: float
    entropy: float
    sink_determinant: int
    identity_verified: bool
    block_product_verified: bool
    failures: tuple = field(default_factory=tuple)

    @property
    def ok(self):
        return not self.failures

    def require(self):
        """Raise VerificationError listing every failed check."""
        if self.failures:
            raise VerificationError(f"k={self.k}: " + "; ".join(self.failures))
        return self


def check_letter(p, letter):
    if letter.kind == TWIST:
        if not 1 <= letter.index <= p.n:
            raise WordError(f"twist index {letter.index} is outside 1..{p.n} for k={p.k}")
    elif letter.kind not in (ROT, ROT_INVERSE):
        raise WordError(f"unknown generator {letter.kind!r}")
    return letter


def twist_matrix(p, i):
    """
    Action of the Dehn twist about c_i on the measure cone: I + A, where the
    only nonzero row of A is row i, holding the intersection numbers of c_i.
    """
    check_letter(p, Letter.twist(i))
    table = intersection_table(p)
    rows = identity(p.n).rows()
    for j, count in enumerate(table.row(i), start=1):
        rows[i - 1][j - 1] += count
    return IntMatrix(rows)


def rotation_matrix(p):
    """Permutation matrix of the rotation by one click: row i has its 1 in column i+1 (2k wraps to 1)."""
    n = p.n
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][(i + 1) % n] = 1
    return IntMatrix(rows)


def letter_matrix(p, letter):
    check_letter(p, letter)
    if letter.kind == TWIST:
        return twist_matrix(p, letter.index)
    if letter.kind == ROT:
        return rotation_matrix(p)
    # Inverse of a permutation matrix is its transpose
    return transpose(rotation_matrix(p))


def word_matrix(p, word):
    """
    Matrix of a word: for w = f ∘ g the result is matrix(f)·matrix(g).

    Parameters:
    - p: GenusParameter
    - word: TwistWord

    Returns:
    - IntMatrix; the identity for the empty word
    """
    result = identity(p.n)
    cache = {}
    for letter in word.letters:
        if letter not in cache:
            cache[letter] = letter_matrix(p, letter)
        result = mat_mul(result, cache[letter])
    return result


def phi_word(p):
    """r ∘ T_{c1} ∘ r^(k-1)"""
    return TwistWord((Letter(ROT), Letter.twist(1)) + (Letter(ROT),) * (p.k - 1))


def phi_matrix(p):
    return word_matrix(p, phi_word(p))


def expected_char_poly(p):
    """(x+1)^(k-1) (x-1)^(k-1) (x^2-x-1), expanded."""
    x = IntPolynomial.x()
    return (x + 1) ** (p.k - 1) * (x - 1) ** (p.k - 1) * GOLDEN_POLY


def reducible_form(p):
    """Phi_k after exchanging mu_k and mu_(2k-1), which moves the invariant pair to the last two slots."""
    return permute_basis(phi_matrix(p), transposition(p.n, p.k, p.n - 1))


def block_partition(p):
    """
    Split the reducible form into [[M11, M12], [M21, M22]] with M22 of size 2.

    Returns:
    - dict with keys "M11", "M12", "M21" (lists of rows) and "M22" (IntMatrix)
    """
    rows = reducible_form(p).rows()
    cut = p.n - 2
    return {
        "M11": IntMatrix([row[:cut] for row in rows[:cut]]),
        "M12": [row[cut:] for row in rows[:cut]],
        # Entries of M21 depend on the intersection pattern and are only recorded
        "M21": [row[:cut] for row in rows[cut:]],
        "M22": IntMatrix([row[cut:] for row in rows[cut:]]),
    }


def rotation_carries_pair(p):
    """
    Whether r^(k-1) sends (mu_k, mu_2k) to (mu_1, mu_(k+1)) and r then sends
    that pair on to (mu_2k, mu_k).
    """
    rotation = rotation_matrix(p)
    partial = mat_pow(rotation, p.k - 1)

    def image(matrix, j):
        column = matrix.column(j)
        return column.index(1) + 1

    first = (image(partial, p.k), image(partial, p.n))
    second = (image(rotation, first[0]), image(rotation, first[1]))
    return first == (1, p.k + 1) and second == (p.n, p.k)


def spectral_report(p, tol=DILATATION_TOLERANCE):
    """
    Full reducibility analysis of Phi_k.

    Steps: build the matrix, take its characteristic polynomial, split it
    into strongly connected blocks, locate the sink block (expected to be
    {k, 2k}), and compute the Perron root of the restriction there.

    Parameters:
    - p: GenusParameter
    - tol: Allowed distance between the dilatation and the golden ratio

    Returns:
    - SpectralReport; failed checks are listed in report.failures
    """
    failures = []

    # 1. Matrix and its characteristic polynomial
    matrix = phi_matrix(p)
    poly = char_poly(matrix)
    expected = expected_char_poly(p)
    identity_verified = poly == expected
    if not identity_verified:
        failures.append(f"char poly {poly} differs from {expected}")

    # 2. Block structure and the per-block factorisation
    blocks = scc_blocks(matrix)
    block_polys = [char_poly(principal_submatrix(matrix, block)) for block in blocks.blocks]
    block_product_verified = poly_product(block_polys) == poly
    if not block_product_verified:
        failures.append("product of block characteristic polynomials differs from the full one")

    # 3. Invariant block
    sinks = blocks.sinks
    if len(sinks) != 1:
        failures.append(f"expected one sink block, found {len(sinks)}: {list(sinks)}")
    sink = sinks[-1]
    if sink != (p.k, p.n):
        failures.append(f"sink block {sink} is not ({p.k}, {p.n})")

    restriction = restrict(matrix, sink)
    sink_poly = char_poly(restriction)
    if sink_poly != GOLDEN_POLY:
        failures.append(f"sink char poly {sink_poly} is not {GOLDEN_POLY}")

    # 4. Dilatation on the invariant subsurface
    dilatation = dominant_eigenvalue(restriction, tol=tol)
    if abs(dilatation - GOLDEN_RATIO) > tol:
        failures.append(f"dilatation {dilatation!r} is not the golden ratio")

    report = SpectralReport(
        k=p.k,
        matrix=matrix,
        char_poly=poly,
        expected_char_poly=expected,
        blocks=blocks,
        sink_block=sink,
        sink_restriction=restriction,
        sink_char_poly=sink_poly,
        dilatation=dilatation,
        entropy=math.log(dilatation),
        sink_determinant=determinant(restriction),
        identity_verified=identity_verified,
        block_product_verified=block_product_verified,
        failures=tuple(failures),
    )

    if failures:
        logger.error("verification failed for k=%d: %s", p.k, "; ".join(failures))
    else:
        logger.info("k=%d verified: sink %s, dilatation %.15f", p.k, sink, dilatation)
    return report


def commutation_check(p):
    """
    Twist matrices commute exactly for disjoint curves.

    Returns:
    - True when for every pair i < j, T_i T_j == T_j T_i iff c_i and c_j are disjoint
    """
    table = intersection_table(p)
    twists = [twist_matrix(p, i) for i in range(1, p.n + 1)]
    for i in range(1, p.n + 1):
        for j in range(i + 1, p.n + 1):
            a, b = twists[i - 1], twists[j - 1]
            commute = mat_mul(a, b) == mat_mul(b, a)
            if commute != (table[i, j] == 0):
                logger.error("k=%d: twists %d and %d break the commutation rule", p.k, i, j)
                return False
    return True


def generator_determinants(p):
    """Determinant of every generator: each twist, the rotation and its inverse."""
    letters = [Letter.twist(i) for i in range(1, p.n + 1)] + [Letter(ROT), Letter(ROT_INVERSE)]
    return {str(letter): determinant(letter_matrix(p, letter)) for letter in letters}


def trace_normal_form(indices, table):
    """
    Lexicographic normal form of a positive twist word up to commuting disjoint twists.

    Two positive words define the same element of the semigroup
    <c_i : c_i c_j = c_j c_i when disjoint> exactly when their normal forms agree.

    Parameters:
    - indices: Sequence of twist indices, outermost first
    - table: IntersectionTable

    Returns:
    - Tuple of indices
    """
    remaining = list(indices)
    normal = []
    while remaining:
        movable = []
        seen = set()
        for pos, letter in enumerate(remaining):
            if letter in seen:
                continue
            seen.add(letter)
            if all(table[letter, other] == 0 for other in remaining[:pos]):
                movable.append((letter, pos))
        letter, pos = min(movable)
        normal.append(letter)
        del remaining[pos]
    return tuple(normal)


def random_positive_word(rng, p, length):
    return TwistWord(tuple(Letter.twist(rng.randint(1, p.n)) for _ in range(length)))


def faithfulness_spot_check(p, samples=100, length=6, seed=0):
    """
    Compare random pairs of distinct positive words.

    Words with different normal forms must give different matrices, and words
    with the same normal form the same matrix.

    Returns:
    - List of (word, word) pairs that violate this; empty when all agree
    """
    rng = random.Random(seed)
    table = intersection_table(p)
    violations = []
    checked = 0
    while checked < samples:
        u = random_positive_word(rng, p, length)
        v = random_positive_word(rng, p, length)
        if u == v:
            continue
        checked += 1

        same_form = trace_normal_form(u.twist_indices(), table) == trace_normal_form(v.twist_indices(), table)
        same_matrix = word_matrix(p, u) == word_matrix(p, v)
        if same_form != same_matrix:
            violations.append((str(u), str(v)))

    if violations:
        logger.warning("k=%d: %d word pairs break faithfulness", p.k, len(violations))
    return violations
