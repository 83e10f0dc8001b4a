"""Constant-term evaluation of torus integrals at ``q = t``.

Four densities are supported.  Two are the integrand of ``I_lam^{(n)}(a, b; q)``
at ``(a, b) = (q, q)`` and ``(1, q^2)``; two are Koornwinder densities at
``q = t`` with ``(t_0, .., t_3) = (q^{1/2}, -q^{1/2}, q^{1/2}, -q^{1/2})`` and
``(1, -1, q, -q)``.  After ``(a, -a; q)_inf = (a^2; q^2)_inf`` all four only
involve integer powers of ``q``:

* ``I_qq``, ``K_halfquarters``: ``(x_i^{+-2}; q^2)_inf / (q x_i^{+-2}; q^2)_inf``
* ``I_1q2``, ``K_1m1qmq``: ``(q x_i^{+-2}; q^2)_inf / (q^2 x_i^{+-2}; q^2)_inf``

and in every case the cross factor is ``prod_{i<j} (1 - x_i^{+-} x_j^{+-})``.
The torus measure ``1 / (2^n n!)`` is applied by the integral functions,
never stored in the density.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from enum import Enum
from math import factorial
from typing import Sequence

from .errors import LengthExceeded, UnsupportedFamily
from .exactalg import QSeries, XSeries, doubled, pairing, qpoch_scalar, qpoch_x, to_rational
from .partitions import Partition
from .schur import schur


class Family(str, Enum):
    I_QQ = "I_qq"
    I_1Q2 = "I_1q2"
    K_HALFQUARTERS = "K_halfquarters"
    K_1M1QMQ = "K_1m1qmq"

    @property
    def is_koornwinder(self) -> bool:
        return self.name.startswith("K_")

    @property
    def partner(self) -> Family:
        """The family with the same density in the other naming scheme."""
        return _PARTNER[self]

    @property
    def shift(self) -> int:
        """``0`` for the ``(q, q)`` density, ``1`` for ``(1, q^2)``."""
        return 0 if self in (Family.I_QQ, Family.K_HALFQUARTERS) else 1


_PARTNER = {
    Family.I_QQ: Family.K_HALFQUARTERS,
    Family.K_HALFQUARTERS: Family.I_QQ,
    Family.I_1Q2: Family.K_1M1QMQ,
    Family.K_1M1QMQ: Family.I_1Q2,
}

# (a, b) of the I-integral as monomials (coefficient, q-exponent)
AB_PARAMETERS = {
    Family.I_QQ: ((1, 1), (1, 1)),
    Family.I_1Q2: ((1, 0), (1, 2)),
}
AB_PARAMETERS[Family.K_HALFQUARTERS] = AB_PARAMETERS[Family.I_QQ]
AB_PARAMETERS[Family.K_1M1QMQ] = AB_PARAMETERS[Family.I_1Q2]

# t_r = sign * q^{half / 2}, stored as (sign, half)
T_PARAMETERS = {
    Family.K_HALFQUARTERS: ((1, 1), (-1, 1), (1, 1), (-1, 1)),
    Family.K_1M1QMQ: ((1, 0), (-1, 0), (1, 2), (-1, 2)),
}
T_PARAMETERS[Family.I_QQ] = T_PARAMETERS[Family.K_HALFQUARTERS]
T_PARAMETERS[Family.I_1Q2] = T_PARAMETERS[Family.K_1M1QMQ]


def as_family(value) -> Family:
    try:
        return Family(value)
    except ValueError:
        raise UnsupportedFamily(f"unsupported density family {value!r}") from None


@dataclass(frozen=True)
class DensitySpec:
    n: int
    family: Family
    order: int

    def __post_init__(self):
        object.__setattr__(self, "family", as_family(self.family))
        if self.n < 1:
            raise ValueError("a torus integral needs n >= 1")
        if self.order < 0:
            raise ValueError("q-order must be nonnegative")


@dataclass(frozen=True)
class TorusIntegralResult:
    value: QSeries
    lam: Partition
    n: int
    family: Family

    @property
    def order(self) -> int:
        return self.value.order

    def to_json(self) -> dict:
        return {
            "lambda": list(self.lam),
            "n": self.n,
            "family": self.family.value,
            "value": self.value.to_json(),
        }


def _embed(f: XSeries, n: int, i: int) -> XSeries:
    """Move a one-variable series to variable ``i`` of ``n``."""
    t = {}
    for (a,), c in f.items():
        e = [0] * n
        e[i] = a
        t[tuple(e)] = c
    return XSeries(n, t)


def _single_factor(shift: int, order: int) -> XSeries:
    """``(q^s x^{+-2}; q^2)_inf / (q^{s+1} x^{+-2}; q^2)_inf`` in one variable."""
    f = XSeries.constant(1, QSeries.one(order))
    for alpha in ((2,), (-2,)):
        f = f * qpoch_x(alpha, shift, order, base=2)
        f = f * qpoch_x(alpha, shift + 1, order, base=2, inverse=True)
    return f


def cross_factor(n: int) -> XSeries:
    """``prod_{i<j} (1 - x_i x_j)(1 - x_i/x_j)(1 - x_j/x_i)(1 - 1/(x_i x_j))``."""
    result = XSeries.constant(n, 1)
    for i in range(n):
        for j in range(i + 1, n):
            for si in (1, -1):
                for sj in (1, -1):
                    e = [0] * n
                    e[i], e[j] = si, sj
                    result = result * XSeries(n, {(0,) * n: 1, tuple(e): -1})
    return result


_density_cache: dict[tuple[int, int, int], XSeries] = {}
_density_lock = threading.Lock()


def density(spec: DensitySpec) -> XSeries:
    """The simplified density as a Laurent polynomial with QSeries coefficients.

    Memoised per ``(shift, n, D)``; the two families sharing a density share
    the cache entry.
    """
    key = (spec.family.shift, spec.n, spec.order)
    cached = _density_cache.get(key)
    if cached is not None:
        return cached
    single = _single_factor(spec.family.shift, spec.order)
    result = cross_factor(spec.n)
    for i in range(spec.n):
        result = result * _embed(single, spec.n, i)
    with _density_lock:
        _density_cache.setdefault(key, result)
    return _density_cache[key]


def _measure(n: int):
    return to_rational(1) / (2**n * factorial(n))


def _as_series(value, order: int) -> QSeries:
    return value if isinstance(value, QSeries) else QSeries.coerce(value, order)


def z_n_computed(spec: DensitySpec) -> QSeries:
    """``(1 / (2^n n!)) CT(density)``."""
    return _as_series(pairing(XSeries.constant(spec.n, 1), density(spec)), spec.order) * _measure(spec.n)


def integral_I(lam, spec: DensitySpec) -> TorusIntegralResult:
    """Normalised integral of ``s_lam(x_1^{+-}, .., x_n^{+-})`` against the density."""
    lam = Partition(lam)
    if len(lam) > 2 * spec.n:
        raise LengthExceeded(f"{lam} has more than 2n={2 * spec.n} parts")
    f = doubled(schur(lam, 2 * spec.n)) if lam else XSeries.constant(spec.n, 1)
    dens = density(spec)
    numerator = _as_series(pairing(f, dens), spec.order) * _measure(spec.n)
    value = numerator / z_n_computed(spec)
    return TorusIntegralResult(value, lam, spec.n, spec.family)


def inner_product(f: XSeries, g: XSeries, spec: DensitySpec) -> QSeries:
    """``(1 / (2^n n!)) CT(f(x) g(x^{-1}) density)`` truncated at order D."""
    if f.nvars != spec.n or g.nvars != spec.n:
        raise ValueError(f"inner product needs series in {spec.n} variables")
    if not f or not g:
        return QSeries.zero(spec.order)
    return _as_series(pairing(f * g.invert_variables(), density(spec)), spec.order) * _measure(spec.n)


def _poch(coef: int, exponent: int, order: int, base: int = 1) -> QSeries:
    if exponent < 0:
        raise UnsupportedFamily(f"negative q-power {exponent} in a closed-form product")
    return qpoch_scalar(exponent, order, base, coef)


def z_n_closed_ab(n: int, a: tuple[int, int], b: tuple[int, int], order: int) -> QSeries:
    """Closed-form ``Z_n(a, b; q)`` for monomial ``a = c_a q^{k_a}``, ``b = c_b q^{k_b}``."""
    (ca, ka), (cb, kb) = a, b
    result = QSeries.one(order)
    for i in range(1, n + 1):
        result = result * _poch(ca * cb, ka + kb + n + i - 2, order)
        den = _poch(1, i, order) * _poch(-ca, ka + i - 1, order) * _poch(-cb, kb + i - 1, order)
        den = den * _poch(ca * cb, ka + kb + 2 * i - 2, order, base=2) ** 2
        result = result / den
    return result


def z_n_closed(spec: DensitySpec) -> QSeries:
    a, b = AB_PARAMETERS[spec.family]
    return z_n_closed_ab(spec.n, a, b, spec.order)


def _t_params(t_spec) -> Sequence[tuple[int, int]]:
    if isinstance(t_spec, (Family, str)):
        return T_PARAMETERS[as_family(t_spec)]
    params = tuple((int(s), int(h)) for s, h in t_spec)
    if len(params) != 4 or any(s not in (1, -1) or h < 0 for s, h in params):
        raise UnsupportedFamily(f"t-spec must be four (sign, half-exponent) pairs: {t_spec}")
    return params


def gustafson_norm(n: int, t_spec, order: int) -> QSeries:
    """``<1, 1>`` at ``t = q`` from the closed product.

    ``t_spec`` is a family name or four pairs ``(sign, h)`` meaning
    ``t_r = sign q^{h/2}``.  Every pair product and the total product
    ``t_0 t_1 t_2 t_3`` must be an integer power of ``q``.
    """
    params = _t_params(t_spec)
    total_sign = 1
    total_half = 0
    for s, h in params:
        total_sign *= s
        total_half += h
    pairs = []
    for r in range(4):
        for s in range(r + 1, 4):
            (sr, hr), (ss, hs) = params[r], params[s]
            if (hr + hs) % 2:
                raise UnsupportedFamily("t_r t_s is not an integer power of q")
            pairs.append((sr * ss, (hr + hs) // 2))
    if total_half % 2:
        raise UnsupportedFamily("t_0 t_1 t_2 t_3 is not an integer power of q")
    result = QSeries.one(order)
    for i in range(1, n + 1):
        num = _poch(1, 1, order) * _poch(total_sign, total_half // 2 + n + i - 2, order)
        den = _poch(1, 1, order) * _poch(1, i, order)
        for c, k in pairs:
            den = den * _poch(c, k + i - 1, order)
        result = result * num / den
    return result
