"""Truncated power series in q over the rationals.

A ``QSeries`` of order ``D`` stores the coefficients of ``q^0 .. q^D`` and
stands for ``sum c_i q^i + O(q^{D+1})``.  Binary operations between series
of different orders produce a result at the smaller order.  Exact scalars
(ints, rationals) behave as series of infinite order.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from ..errors import DivisionByNonUnit, NotAPowerSeries
from .laurent import LaurentPoly, format_terms
from .rational import ONE, ZERO, Rational, is_scalar, to_rational


class QSeries:
    __slots__ = ("_c", "order")

    def __init__(self, coeffs: Iterable[object], order: int):
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        c = [to_rational(v) for v in coeffs][: order + 1]
        if len(c) < order + 1:
            c.extend([ZERO] * (order + 1 - len(c)))
        self._c = tuple(c)
        self.order = order

    @classmethod
    def _raw(cls, c: Sequence[Rational], order: int) -> QSeries:
        obj = cls.__new__(cls)
        obj._c = tuple(c)
        obj.order = order
        return obj

    # constructors ------------------------------------------------------
    @classmethod
    def zero(cls, order: int) -> QSeries:
        return cls._raw([ZERO] * (order + 1), order)

    @classmethod
    def one(cls, order: int) -> QSeries:
        return cls.scalar(ONE, order)

    @classmethod
    def scalar(cls, value, order: int) -> QSeries:
        c = [ZERO] * (order + 1)
        c[0] = to_rational(value)
        return cls._raw(c, order)

    @classmethod
    def monomial(cls, exponent: int, order: int, coefficient=1) -> QSeries:
        if exponent < 0:
            raise NotAPowerSeries(f"q^{exponent} is not a power series")
        c = [ZERO] * (order + 1)
        if exponent <= order:
            c[exponent] = to_rational(coefficient)
        return cls._raw(c, order)

    @classmethod
    def from_laurent(cls, p: LaurentPoly, order: int) -> QSeries:
        c = [ZERO] * (order + 1)
        for e, v in p.coeffs.items():
            if e < 0:
                raise NotAPowerSeries(f"term {v} q^{e} has a negative exponent")
            if e <= order:
                c[e] = v
        return cls._raw(c, order)

    @classmethod
    def coerce(cls, value, order: int) -> QSeries:
        if isinstance(value, QSeries):
            return value
        if isinstance(value, LaurentPoly):
            return cls.from_laurent(value, order)
        if is_scalar(value):
            return cls.scalar(value, order)
        to_series = getattr(value, "to_series", None)
        if to_series is not None:
            return to_series(order)
        raise TypeError(f"cannot coerce {type(value).__name__} to QSeries")

    # inspection ----------------------------------------------------------
    @property
    def coeffs(self) -> tuple[Rational, ...]:
        return self._c

    def __getitem__(self, i: int) -> Rational:
        if i < 0:
            return ZERO
        if i > self.order:
            raise IndexError(f"coefficient q^{i} is beyond the truncation order {self.order}")
        return self._c[i]

    def __len__(self) -> int:
        return self.order + 1

    def __bool__(self) -> bool:
        return any(self._c)

    def is_zero(self) -> bool:
        return not any(self._c)

    @property
    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, or None for ``O(q^{D+1})``."""
        for i, v in enumerate(self._c):
            if v:
                return i
        return None

    def is_unit(self) -> bool:
        return bool(self._c[0])

    def truncate(self, order: int) -> QSeries:
        if order > self.order:
            raise ValueError(f"cannot raise truncation order {self.order} to {order}")
        return QSeries._raw(self._c[: order + 1], order)

    # arithmetic --------------------------------------------------------
    def _other(self, other):
        if isinstance(other, QSeries):
            return other
        if isinstance(other, LaurentPoly):
            return QSeries.from_laurent(other, self.order)
        return None

    def __neg__(self) -> QSeries:
        return QSeries._raw([-v for v in self._c], self.order)

    def __add__(self, other) -> QSeries:
        if is_scalar(other):
            c = list(self._c)
            c[0] += to_rational(other)
            return QSeries._raw(c, self.order)
        o = self._other(other)
        if o is None:
            return NotImplemented
        d = min(self.order, o.order)
        return QSeries._raw([a + b for a, b in zip(self._c[: d + 1], o._c[: d + 1])], d)

    __radd__ = __add__

    def __sub__(self, other) -> QSeries:
        if is_scalar(other):
            return self + (-to_rational(other))
        o = self._other(other)
        if o is None:
            return NotImplemented
        d = min(self.order, o.order)
        return QSeries._raw([a - b for a, b in zip(self._c[: d + 1], o._c[: d + 1])], d)

    def __rsub__(self, other) -> QSeries:
        return (-self) + other

    def __mul__(self, other) -> QSeries:
        if is_scalar(other):
            s = to_rational(other)
            return QSeries._raw([v * s for v in self._c], self.order)
        o = self._other(other)
        if o is None:
            return NotImplemented
        d = min(self.order, o.order)
        a, b = self._c, o._c
        out = [ZERO] * (d + 1)
        for i in range(d + 1):
            ai = a[i]
            if ai:
                for j in range(d + 1 - i):
                    bj = b[j]
                    if bj:
                        out[i + j] += ai * bj
        return QSeries._raw(out, d)

    __rmul__ = __mul__

    def inverse(self) -> QSeries:
        """Multiplicative inverse; requires a nonzero constant term."""
        c = self._c
        if not c[0]:
            raise DivisionByNonUnit("series with zero constant term is not invertible")
        inv0 = ONE / c[0]
        out = [ZERO] * (self.order + 1)
        out[0] = inv0
        for k in range(1, self.order + 1):
            s = ZERO
            for j in range(1, k + 1):
                if c[j]:
                    s += c[j] * out[k - j]
            out[k] = -s * inv0
        return QSeries._raw(out, self.order)

    def __truediv__(self, other) -> QSeries:
        if is_scalar(other):
            s = to_rational(other)
            if not s:
                raise DivisionByNonUnit("division by zero scalar")
            return self * (ONE / s)
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other) -> QSeries:
        if is_scalar(other):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, k: int) -> QSeries:
        if k < 0:
            return self.inverse() ** (-k)
        result = QSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def mul_one_minus(self, exponent: int, coefficient=1) -> QSeries:
        """Multiply by ``1 - c q^k`` in O(D)."""
        c = to_rational(coefficient)
        out = list(self._c)
        if exponent == 0:
            return QSeries._raw([v * (ONE - c) for v in out], self.order)
        for i in range(self.order, exponent - 1, -1):
            out[i] -= c * self._c[i - exponent]
        return QSeries._raw(out, self.order)

    def div_one_minus(self, exponent: int, coefficient=1) -> QSeries:
        """Divide by ``1 - c q^k`` (``k >= 1``) in O(D)."""
        if exponent < 1:
            raise DivisionByNonUnit("use inverse() for factors with a q^0 part")
        c = to_rational(coefficient)
        out = list(self._c)
        for i in range(exponent, self.order + 1):
            out[i] += c * out[i - exponent]
        return QSeries._raw(out, self.order)

    def subs_power(self, k: int) -> QSeries:
        """Substitute ``q -> q^k`` for ``k >= 1``; the order becomes ``k*D + k - 1``."""
        if k < 1:
            raise ValueError("only q -> q^k with k >= 1 preserves power series")
        order = k * (self.order + 1) - 1
        out = [ZERO] * (order + 1)
        for i, v in enumerate(self._c):
            out[i * k] = v
        return QSeries._raw(out, order)

    def evaluate_at_zero(self) -> Rational:
        return self._c[0]

    # comparison / display ------------------------------------------------
    def __eq__(self, other) -> bool:
        """Equality as truncated series, at the smaller of the two orders."""
        if is_scalar(other):
            other = QSeries.scalar(other, self.order)
        o = self._other(other)
        if o is None:
            return NotImplemented
        d = min(self.order, o.order)
        return self._c[: d + 1] == o._c[: d + 1]

    __hash__ = None

    def first_difference(self, other: QSeries) -> int | None:
        """Smallest exponent where the two series differ (None if equal)."""
        d = min(self.order, other.order)
        for i in range(d + 1):
            if self._c[i] != other._c[i]:
                return i
        return None

    def __repr__(self) -> str:
        return f"QSeries({self})"

    def __str__(self) -> str:
        body = format_terms((i, v) for i, v in enumerate(self._c) if v)
        return f"{body} + O(q^{self.order + 1})"

    def to_json(self) -> dict:
        return {"order": self.order, "coefficients": [str(v) for v in self._c]}

    @classmethod
    def from_json(cls, data: dict) -> QSeries:
        return cls(data["coefficients"], data["order"])
