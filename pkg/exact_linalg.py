# exact_linalg.py - Exact integer matrices and polynomials, block structure, Perron root
import logging
import math
from dataclasses import dataclass

import networkx as nx
import numpy as np

from config import DILATATION_TOLERANCE, POWER_ITERATION_MAX_STEPS

logger = logging.getLogger(__name__)


class DimensionMismatchError(ValueError):
    pass


class InvalidPermutationError(ValueError):
    pass


class NotInvariantError(ValueError):
    """The index set is not preserved by the column action of the matrix."""


class InexactDivisionError(ArithmeticError):
    """Polynomial division left a nonzero remainder."""


class ReducibleMatrixError(ValueError):
    """The nonzero pattern is not strongly connected; analyse the blocks first."""


class ConvergenceError(ArithmeticError):
    pass


class IntMatrix:
    """
    Square matrix of arbitrary-precision integers.

    Entries live in a read-only numpy array of dtype object so that every
    product stays in Python ints. Indices in the public API are 1-based,
    matching the curve labels; matrices act on column vectors of measures.
    """

    __slots__ = ("_array",)

    def __init__(self, rows):
        rows = [list(row) for row in rows]
        n = len(rows)
        if n == 0:
            raise DimensionMismatchError("matrix dimension must be at least 1")
        if any(len(row) != n for row in rows):
            raise DimensionMismatchError(f"matrix is not square: row lengths {[len(r) for r in rows]}")

        array = np.empty((n, n), dtype=object)
        for i, row in enumerate(rows):
            for j, value in enumerate(row):
                array[i, j] = int(value)
        array.flags.writeable = False
        self._array = array

    @classmethod
    def _wrap(cls, array):
        matrix = cls.__new__(cls)
        array = np.array(array, dtype=object)
        array.flags.writeable = False
        matrix._array = array
        return matrix

    @property
    def n(self):
        return self._array.shape[0]

    @property
    def array(self):
        """Writable copy of the underlying object array (0-based)."""
        return self._array.copy()

    def entry(self, i, j):
        return self._array[i - 1, j - 1]

    def rows(self):
        return [[int(x) for x in row] for row in self._array]

    def column(self, j):
        return [int(x) for x in self._array[:, j - 1]]

    def to_float(self):
        return np.array(self.rows(), dtype=np.float64)

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self._array, other._array))

    def __hash__(self):
        return hash(tuple(tuple(row) for row in self.rows()))

    def __repr__(self):
        return f"IntMatrix({self.rows()})"


class IntPolynomial:
    """
    Polynomial with integer coefficients, constant term first.

    Trailing zero coefficients are dropped, so the zero polynomial has an
    empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = [int(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @classmethod
    def x(cls):
        return cls([0, 1])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self):
        return not self.coeffs

    def is_monic(self):
        return self.leading == 1

    def _coerce(self, other):
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int):
            return IntPolynomial([other])
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        size = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (size - len(self.coeffs))
        b = other.coeffs + (0,) * (size - len(other.coeffs))
        return IntPolynomial([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return IntPolynomial([])
        product = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    product[i + j] += a * b
        return IntPolynomial(product)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        result = IntPolynomial([1])
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __call__(self, value):
        # Horner
        result = 0
        for c in reversed(self.coeffs):
            result = result * value + c
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for power in range(self.degree, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if power == 0:
                body = str(magnitude)
            else:
                monomial = "x" if power == 1 else f"x^{power}"
                body = monomial if magnitude == 1 else f"{magnitude}*{monomial}"
            terms.append((sign, body))

        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


@dataclass(frozen=True)
class BlockStructure:
    """
    Strongly connected components of the nonzero pattern, sources first, sinks last.

    blocks are sorted tuples of 1-based indices; edges are pairs (p, q) of
    positions in blocks meaning some index of block p feeds block q.
    """

    blocks: tuple
    edges: tuple

    @property
    def order(self):
        """Concatenated block order, the basis permutation that exposes the triangular form."""
        return tuple(i for block in self.blocks for i in block)

    @property
    def sinks(self):
        sources = {p for p, _ in self.edges}
        return tuple(block for p, block in enumerate(self.blocks) if p not in sources)

    def __len__(self):
        return len(self.blocks)


def identity(n):
    return IntMatrix([[int(i == j) for j in range(n)] for i in range(n)])


def validate_permutation(perm, n=None):
    """
    Check that perm lists the images of 1..n under a bijection.

    Returns:
    - Tuple of ints
    """
    perm = tuple(int(x) for x in perm)
    if n is None:
        n = len(perm)
    if len(perm) != n or sorted(perm) != list(range(1, n + 1)):
        raise InvalidPermutationError(f"{perm} is not a permutation of 1..{n}")
    return perm


def transposition(n, a, b):
    """Permutation of 1..n exchanging a and b."""
    perm = list(range(1, n + 1))
    perm[a - 1], perm[b - 1] = b, a
    return validate_permutation(perm, n)


def permutation_matrix(perm):
    """P with P e_i = e_perm(i), so permutation_matrix(s) @ permutation_matrix(t) is that of s∘t."""
    perm = validate_permutation(perm)
    n = len(perm)
    rows = [[0] * n for _ in range(n)]
    for i, image in enumerate(perm, start=1):
        rows[image - 1][i - 1] = 1
    return IntMatrix(rows)


def mat_mul(a, b):
    """Exact product a·b."""
    if a.n != b.n:
        raise DimensionMismatchError(f"cannot multiply {a.n}x{a.n} by {b.n}x{b.n}")
    return IntMatrix._wrap(a._array.dot(b._array))


def transpose(m):
    return IntMatrix._wrap(m._array.T)


def mat_pow(m, exponent):
    """m**exponent for exponent >= 0 by repeated squaring."""
    if exponent < 0:
        raise ValueError("use an explicit inverse for negative powers")
    result = identity(m.n)
    base = m
    while exponent:
        if exponent & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base)
        exponent >>= 1
    return result


def is_nonnegative(m):
    return all(x >= 0 for row in m.rows() for x in row)


def determinant(m):
    """
    Determinant by Bareiss fraction-free elimination.

    Every division in the elimination is exact, so the computation stays in
    the integers throughout.
    """
    a = m.rows()
    n = m.n
    sign = 1
    previous_pivot = 1

    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign

        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // previous_pivot
        previous_pivot = a[k][k]

    return sign * a[n - 1][n - 1]


def char_poly(m):
    """
    Characteristic polynomial det(xI - M) by the Berkowitz algorithm.

    Division free: only ring operations on the entries, so the result is
    bit-exact for any integer matrix.

    Parameters:
    - m: IntMatrix

    Returns:
    - Monic IntPolynomial of degree n
    """
    a = m._array
    n = m.n

    # Coefficients, highest degree first, of the trailing 1x1 principal block
    vector = [1, -a[n - 1, n - 1]]

    # Grow the principal block one row/column at a time from the bottom right
    for s in range(n - 2, -1, -1):
        size = n - s
        sub = a[s + 1:, s + 1:]
        row = a[s, s + 1:]
        col = a[s + 1:, s]

        # First column of the lower-triangular Toeplitz factor
        toeplitz = [1, -a[s, s]]
        power = col
        for step in range(size - 1):
            toeplitz.append(-row.dot(power))
            if step < size - 2:
                power = sub.dot(power)

        vector = [
            sum(toeplitz[i - j] * vector[j] for j in range(min(i, size - 1) + 1))
            for i in range(size + 1)
        ]

    return IntPolynomial(reversed(vector))


def poly_product(polys):
    result = IntPolynomial([1])
    for p in polys:
        result = result * p
    return result


def poly_divexact(num, den):
    """
    Exact quotient num / den.

    Parameters:
    - num: IntPolynomial
    - den: Monic IntPolynomial

    Returns:
    - IntPolynomial q with num == den * q

    Raises:
    - InexactDivisionError when the remainder is not zero
    """
    if den.is_zero() or not den.is_monic():
        raise ValueError(f"divisor must be a nonzero monic polynomial, got {den}")

    remainder = list(num.coeffs)
    d = den.degree
    if num.degree < d:
        if not num.is_zero():
            raise InexactDivisionError(f"{den} does not divide {num}")
        return IntPolynomial([])

    quotient = [0] * (num.degree - d + 1)
    for shift in range(num.degree - d, -1, -1):
        c = remainder[shift + d]
        quotient[shift] = c
        if c:
            for i, dc in enumerate(den.coeffs):
                remainder[shift + i] -= c * dc

    if any(remainder):
        raise InexactDivisionError(f"{den} does not divide {num}")
    return IntPolynomial(quotient)


def permute_basis(m, perm):
    """
    Similar matrix P·M·P^-1 for the permutation matrix P of perm.

    Entry (i, j) of M moves to (perm(i), perm(j)).
    """
    perm = validate_permutation(perm, m.n)
    inverse = [0] * m.n
    for i, image in enumerate(perm):
        inverse[image - 1] = i
    return IntMatrix._wrap(m._array[np.ix_(inverse, inverse)])


def nonzero_digraph(m):
    """Digraph on 1..n with an edge j -> i whenever entry (i, j) is nonzero."""
    graph = nx.DiGraph()
    graph.add_nodes_from(range(1, m.n + 1))
    rows, cols = np.nonzero(m._array != 0)
    graph.add_edges_from((int(j) + 1, int(i) + 1) for i, j in zip(rows, cols))
    return graph


def scc_blocks(m):
    """
    Block structure of m from the condensation of its nonzero-pattern digraph.

    Blocks come in topological order with ties broken by smallest index, so
    permuting the basis by BlockStructure.order makes m block lower triangular
    and sink blocks (invariant coordinate subspaces) come last.
    """
    graph = nonzero_digraph(m)
    condensed = nx.condensation(graph)
    members = nx.get_node_attributes(condensed, "members")

    ordered = list(nx.lexicographical_topological_sort(condensed, key=lambda c: min(members[c])))
    position = {c: p for p, c in enumerate(ordered)}
    blocks = tuple(tuple(sorted(members[c])) for c in ordered)
    edges = tuple(sorted((position[u], position[v]) for u, v in condensed.edges()))

    logger.debug("scc_blocks: %d blocks for %dx%d matrix", len(blocks), m.n, m.n)
    return BlockStructure(blocks, edges)


def is_block_lower_triangular(m, structure):
    """Whether every entry in row-block p, column-block q with q after p is zero."""
    for p, row_block in enumerate(structure.blocks):
        for col_block in structure.blocks[p + 1:]:
            if any(m.entry(i, j) != 0 for i in row_block for j in col_block):
                return False
    return True


def principal_submatrix(m, block):
    """Rows and columns of m indexed by block (1-based), in increasing order."""
    index = [int(i) - 1 for i in sorted(block)]
    return IntMatrix._wrap(m._array[np.ix_(index, index)])


def restrict(m, block):
    """
    Submatrix on an invariant index set.

    Raises:
    - NotInvariantError when some column in the block has support outside it
    """
    block = tuple(sorted(int(i) for i in block))
    inside = set(block)
    for j in block:
        leaks = [i for i in range(1, m.n + 1) if i not in inside and m.entry(i, j) != 0]
        if leaks:
            raise NotInvariantError(f"column {j} reaches rows {leaks} outside block {block}")

    return principal_submatrix(m, block)


def dominant_eigenvalue(m, tol=DILATATION_TOLERANCE, max_steps=POWER_ITERATION_MAX_STEPS):
    """
    Perron-Frobenius eigenvalue of a nonnegative matrix with strongly connected pattern.

    Dimension 1 and 2 use closed forms. Larger matrices start from the Perron
    vector numpy's eig returns, then run power iteration on M + c·I with c the
    eigenvalue estimate, and stop once the Collatz-Wielandt bounds
    min(y/x) <= rho <= max(y/x) agree to within tol relative to max(1, rho).

    Parameters:
    - m: IntMatrix with nonnegative entries
    - tol: Relative width of the final bracketing interval
    - max_steps: Iteration cap

    Returns:
    - Spectral radius as a float
    """
    if not is_nonnegative(m):
        raise ValueError("dominant_eigenvalue needs a nonnegative matrix")
    if not any(x for row in m.rows() for x in row):
        raise ReducibleMatrixError("zero matrix has no Perron root")
    if len(scc_blocks(m)) != 1:
        raise ReducibleMatrixError("pattern is not strongly connected; restrict to a block first")

    if m.n == 1:
        return float(m.entry(1, 1))
    if m.n == 2:
        a, b = m.rows()[0]
        c, d = m.rows()[1]
        trace = a + d
        discriminant = (a - d) ** 2 + 4 * b * c
        return (trace + math.sqrt(discriminant)) / 2

    dense = m.to_float()
    values, vectors = np.linalg.eig(dense)
    top = int(np.argmax(values.real))

    # the Perron root has the largest real part
    shift = max(float(values[top].real), 1.0)
    shifted = dense + shift * np.eye(m.n)

    x = np.abs(vectors[:, top].real)
    if not np.all(x > 0):
        x = np.ones(m.n)
    x = x / x.max()

    for step in range(max_steps):
        y = shifted @ x
        ratios = y / x
        low, high = ratios.min(), ratios.max()
        if high - low <= tol * max(1.0, high - shift):
            logger.debug("power iteration converged after %d steps", step + 1)
            return float((low + high) / 2 - shift)
        x = y / y.max()

    raise ConvergenceError(f"power iteration did not reach tol={tol} in {max_steps} steps")
