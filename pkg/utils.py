def normalize_label(value, n):
    """
    Reduce an integer modulo n into the representatives 1..n.

    Same idea as wrapping clock positions into 1..12: a residue of 0 is
    reported as n, never as 0.

    Parameters:
    - value: Any integer
    - n: Modulus (number of labels or vertices)

    Returns:
    - Integer in 1..n
    """
    r = value % n
    return n if r == 0 else r


def cyclic_distance(a, b, n):
    """
    Distance between positions a and b on a cycle of length n.
    Example: cyclic_distance(1, 6, 6) → 1
    """
    d = (a - b) % n
    return min(d, n - d)


def strictly_between(x, lo, hi):
    """Whether x lies strictly inside the open interval (lo, hi)."""
    return lo < x < hi


def to_decimal_strings(values):
    """
    Convert arbitrary-precision integers to decimal strings for JSON output.
    """
    return [str(int(v)) for v in values]


def from_decimal_strings(values):
    return [int(v) for v in values]
