"""Exact coefficient rings: rationals, Laurent polynomials and rational
functions in q, truncated q-series, and sparse multivariate Laurent series."""
from .laurent import LaurentPoly
from .products import (
    geometric,
    inverse_sqrt_one_minus,
    pochhammer_trunc,
    qpoch_scalar,
    qpoch_x,
)
from .qseries import QSeries
from .rational import ONE, ZERO, Rational, format_rational, to_rational
from .ratfunc import RationalFunction
from .xseries import XSeries, constant_term, doubled, pairing, substitute

__all__ = [
    "LaurentPoly",
    "ONE",
    "QSeries",
    "Rational",
    "RationalFunction",
    "XSeries",
    "ZERO",
    "constant_term",
    "doubled",
    "format_rational",
    "geometric",
    "inverse_sqrt_one_minus",
    "pairing",
    "pochhammer_trunc",
    "qpoch_scalar",
    "qpoch_x",
    "substitute",
    "to_rational",
]
