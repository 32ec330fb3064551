"""Exact rational number backend.

gmpy2's mpq is used when available (10-15x faster on small rationals);
fractions.Fraction is the drop-in fallback. Both are arbitrary precision,
hash-compatible and interchangeable for everything this package does.
"""

try:
    from gmpy2 import mpq as Q

    RAT_BACKEND = "gmpy2"
except ImportError:  # pragma: no cover
    from fractions import Fraction as Q

    RAT_BACKEND = "fractions"

Q0 = Q(0)
Q1 = Q(1)


def qstr(q) -> str:
    """Canonical "p/q" text of a rational, denominator always explicit."""
    return f"{q.numerator}/{q.denominator}"


def qparse(text: str):
    """Inverse of qstr; also accepts plain integers."""
    return Q(text)
