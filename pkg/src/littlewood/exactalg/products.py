"""Truncated q-shifted factorials ``(a; q^s)_inf = prod_{i>=0} (1 - a q^{s i})``.

``a`` is a monomial ``c * q^k * x^alpha``.  With a q-truncation order ``D``
only the factors with ``k + s*i <= D`` differ from 1, so every product here
is finite.  Reciprocals are products of truncated geometric series; a factor
of q-weight 0 must then be cut off by an x-degree bound instead.
"""
from __future__ import annotations

from math import comb
from typing import Sequence

from ..errors import NonconvergentProduct
from .qseries import QSeries
from .rational import ONE, to_rational
from .xseries import XSeries


def _factor_weights(k: int, base: int, order: int) -> list[int]:
    if base < 1:
        raise NonconvergentProduct(f"base q^{base} does not converge q-adically")
    if k < 0:
        raise NonconvergentProduct(f"q^{k} has negative q-weight")
    return list(range(k, order + 1, base))


def qpoch_scalar(k: int, order: int, base: int = 1, coefficient=1, inverse: bool = False) -> QSeries:
    """``(c q^k; q^base)_inf`` (or its reciprocal) as a QSeries of the given order."""
    c = to_rational(coefficient)
    if not c:
        return QSeries.one(order)
    result = QSeries.one(order)
    for w in _factor_weights(k, base, order):
        if w == 0:
            if inverse:
                if c == 1:
                    raise NonconvergentProduct("(1; q)_inf vanishes; its reciprocal is undefined")
                result = result * (ONE / (ONE - c))
            else:
                result = result * (ONE - c)
        elif inverse:
            result = result.div_one_minus(w, c)
        else:
            result = result.mul_one_minus(w, c)
    return result


def qpoch_x(
    alpha: Sequence[int],
    k: int,
    order: int,
    base: int = 1,
    coefficient=1,
    inverse: bool = False,
    degree_bound: int | None = None,
) -> XSeries:
    """``(c q^k x^alpha; q^base)_inf`` (or reciprocal) as an XSeries with QSeries coefficients."""
    alpha = tuple(alpha)
    nvars = len(alpha)
    c = to_rational(coefficient)
    xdeg = sum(alpha)
    result = XSeries.constant(nvars, QSeries.one(order), degree_bound)
    if not c:
        return result
    for w in _factor_weights(k, base, order):
        if not inverse:
            factor = XSeries(
                nvars,
                {(0,) * nvars: QSeries.one(order), alpha: QSeries.monomial(w, order, -c)},
                degree_bound,
            )
        else:
            if w == 0 and (degree_bound is None or xdeg <= 0):
                raise NonconvergentProduct(
                    "reciprocal of a q-weight-0 factor needs a positive x-degree bound"
                )
            terms = {}
            j = 0
            while True:
                if w * j > order or (degree_bound is not None and xdeg * j > degree_bound):
                    break
                terms[tuple(a * j for a in alpha)] = QSeries.monomial(w * j, order, c**j)
                j += 1
            factor = XSeries(nvars, terms, degree_bound)
        result = result * factor
    return result


def pochhammer_trunc(
    a,
    base: int = 1,
    order: int = 20,
    *,
    coefficient=1,
    inverse: bool = False,
    degree_bound: int | None = None,
):
    """Dispatching front end.

    ``a`` is either an integer ``k`` (for ``a = c q^k``), or a pair
    ``(k, alpha)`` for the monomial ``c q^k x^alpha``.  ``base`` is the
    exponent ``s`` of the step ``q^s`` (1 for q, 2 for q^2).
    """
    if isinstance(a, int):
        return qpoch_scalar(a, order, base, coefficient, inverse)
    k, alpha = a
    return qpoch_x(alpha, k, order, base, coefficient, inverse, degree_bound)


def binomial_half_series(k: int):
    """Coefficient of ``z^k`` in ``(1 - z)^{-1/2}``, i.e. ``C(2k, k) / 4^k``."""
    return to_rational(comb(2 * k, k)) / (4**k)


def inverse_sqrt_one_minus(nvars: int, i: int, power: int, degree_bound: int) -> XSeries:
    """``(1 - x_i^power)^{-1/2}`` expanded to total degree ``degree_bound``."""
    terms = {}
    j = 0
    while power * j <= degree_bound:
        e = [0] * nvars
        e[i] = power * j
        terms[tuple(e)] = binomial_half_series(j)
        j += 1
    return XSeries(nvars, terms, degree_bound)


def geometric(alpha: Sequence[int], degree_bound: int, coefficient=1) -> XSeries:
    """``1 / (1 - c x^alpha)`` truncated at total degree ``degree_bound`` (alpha of positive degree)."""
    alpha = tuple(alpha)
    xdeg = sum(alpha)
    if xdeg <= 0:
        raise NonconvergentProduct("geometric series needs a monomial of positive degree")
    c = to_rational(coefficient)
    terms = {}
    j = 0
    while xdeg * j <= degree_bound:
        terms[tuple(a * j for a in alpha)] = c**j
        j += 1
    return XSeries(len(alpha), terms, degree_bound)


__all__ = [
    "qpoch_scalar",
    "qpoch_x",
    "pochhammer_trunc",
    "binomial_half_series",
    "inverse_sqrt_one_minus",
    "geometric",
]
