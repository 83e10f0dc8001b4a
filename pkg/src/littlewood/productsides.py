"""Product sides of the Littlewood-type identities, expanded as XSeries.

Every builder returns a series in ``n`` variables truncated at total
x-degree ``d``; q-dependent factors carry QSeries coefficients of order
``D``.  Only the q-shifted factorial kernels of ``exactalg`` are used here,
never partition data, so these expansions are independent of the sum sides.
"""
from __future__ import annotations

from .exactalg import QSeries, XSeries, geometric, inverse_sqrt_one_minus, qpoch_x


def _unit(n: int, i: int, power: int) -> tuple[int, ...]:
    e = [0] * n
    e[i] = power
    return tuple(e)


def cross_geometric(n: int, d: int) -> XSeries:
    """``prod_{i<j} 1 / (1 - x_i x_j)``."""
    result = XSeries.constant(n, 1, d)
    for i in range(n):
        for j in range(i + 1, n):
            e = [0] * n
            e[i] = e[j] = 1
            result = result * geometric(e, d)
    return result


def single_geometric(n: int, d: int, power: int) -> XSeries:
    """``prod_i 1 / (1 - x_i^power)``."""
    result = XSeries.constant(n, 1, d)
    for i in range(n):
        result = result * geometric(_unit(n, i, power), d)
    return result


def q_ratio_product(n: int, d: int, order: int, top: int, bottom: int) -> XSeries:
    """``prod_i (q^top x_i^2; q^2)_inf / (q^bottom x_i^2; q^2)_inf``."""
    result = XSeries.constant(n, QSeries.one(order), d)
    for i in range(n):
        alpha = _unit(n, i, 2)
        result = result * qpoch_x(alpha, top, order, base=2, degree_bound=d)
        result = result * qpoch_x(alpha, bottom, order, base=2, inverse=True, degree_bound=d)
    return result


def littlewood_q_product(n: int, d: int, order: int, shift: int) -> XSeries:
    """``prod_i (q^{s+1} x_i^2; q^2)/(q^s x_i^2; q^2) prod_{i<j} 1/(1 - x_i x_j)``.

    ``shift = 0`` is the even-row deformation, ``shift = 1`` the even-column one.
    """
    return cross_geometric(n, d) * q_ratio_product(n, d, order, shift + 1, shift)


def kawanaka_product(n: int, d: int, order: int) -> XSeries:
    """``prod_i (-q x_i; q)_inf / (x_i; q)_inf prod_{i<j} 1/(1 - x_i x_j)``."""
    result = XSeries.constant(n, QSeries.one(order), d)
    for i in range(n):
        alpha = _unit(n, i, 1)
        result = result * qpoch_x(alpha, 1, order, coefficient=-1, degree_bound=d)
        result = result * qpoch_x(alpha, 0, order, inverse=True, degree_bound=d)
    return cross_geometric(n, d) * result


def sqrt_product(n: int, d: int) -> XSeries:
    """``prod_i (1 - x_i^2)^{-1/2} prod_{i<j} 1/(1 - x_i x_j)`` with exact rationals."""
    result = cross_geometric(n, d)
    for i in range(n):
        result = result * inverse_sqrt_one_minus(n, i, 2, d)
    return result
