"""Arbitrary-precision rationals.

``Rational`` is ``gmpy2.mpq``: always reduced, denominator positive, and it
interoperates with ``int`` and ``fractions.Fraction`` in arithmetic, equality
and hashing.
"""
from fractions import Fraction

from gmpy2 import mpq

Rational = mpq

ZERO = mpq(0)
ONE = mpq(1)


def to_rational(value) -> mpq:
    """Coerce ints, Fractions, mpq and ``"p/q"`` strings to ``Rational``."""
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    if isinstance(value, str):
        return mpq(value.strip())
    return mpq(value)


def format_rational(value) -> str:
    """``"p/q"`` (or ``"p"`` for integers)."""
    return str(mpq(value))


def is_scalar(value) -> bool:
    return isinstance(value, (int, type(ONE), Fraction))
