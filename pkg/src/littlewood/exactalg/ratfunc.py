"""Rational functions in q over the rationals, kept in a unique canonical form.

Canonical form of ``N/D``: ``gcd(N, D) = 1``; ``D`` is an ordinary polynomial
with nonzero constant term and leading (top-degree) coefficient 1; any power
of ``q`` is carried by the numerator, which may be a Laurent polynomial.
Two rational functions are equal iff their canonical forms coincide.
"""
from __future__ import annotations

import flint

from ..errors import DivisionByNonUnit, NotAPowerSeries
from .laurent import LaurentPoly
from .qseries import QSeries
from .rational import ONE, Rational, is_scalar, to_rational


def _to_flint(p: LaurentPoly) -> tuple[int, flint.fmpq_poly]:
    """Split ``p = q^v * f(q)`` with ``f(0) != 0``."""
    v = p.valuation
    dense = [0] * (p.degree - v + 1)
    for e, c in p.coeffs.items():
        dense[e - v] = flint.fmpq(int(c.numerator), int(c.denominator))
    return v, flint.fmpq_poly(dense)


def _from_flint(f: flint.fmpq_poly, shift: int = 0) -> LaurentPoly:
    coeffs = {}
    for i, c in enumerate(f.coeffs()):
        if c != 0:
            coeffs[i + shift] = Rational(int(c.p), int(c.q))
    return LaurentPoly._raw(coeffs)


class RationalFunction:
    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1):
        num = LaurentPoly.coerce(num)
        den = LaurentPoly.coerce(den)
        if den.is_zero():
            raise DivisionByNonUnit("zero denominator")
        self.num, self.den = _normalize(num, den)
        self._hash = None

    @classmethod
    def _raw(cls, num: LaurentPoly, den: LaurentPoly) -> RationalFunction:
        obj = cls.__new__(cls)
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def coerce(cls, value) -> RationalFunction:
        if isinstance(value, RationalFunction):
            return value
        if isinstance(value, LaurentPoly) or is_scalar(value):
            return cls(value)
        raise TypeError(f"cannot coerce {type(value).__name__} to RationalFunction")

    @classmethod
    def q(cls, k: int = 1) -> RationalFunction:
        return cls._raw(LaurentPoly.monomial(k), LaurentPoly.constant(ONE))

    # inspection ----------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def is_laurent(self) -> bool:
        return self.den.degree == 0

    def den_degree(self) -> int:
        return self.den.degree

    # arithmetic --------------------------------------------------------
    def __neg__(self) -> RationalFunction:
        return RationalFunction._raw(-self.num, self.den)

    def __add__(self, other) -> RationalFunction:
        try:
            o = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other) -> RationalFunction:
        try:
            o = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> RationalFunction:
        return (-self) + other

    def __mul__(self, other) -> RationalFunction:
        if is_scalar(other):
            s = to_rational(other)
            if not s:
                return RationalFunction()
            return RationalFunction._raw(self.num * s, self.den)
        try:
            o = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> RationalFunction:
        if self.is_zero():
            raise DivisionByNonUnit("division by the zero rational function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other) -> RationalFunction:
        try:
            o = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        if o.is_zero():
            raise DivisionByNonUnit("division by the zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other) -> RationalFunction:
        return RationalFunction.coerce(other) / self

    def __pow__(self, k: int) -> RationalFunction:
        if k < 0:
            return self.inverse() ** (-k)
        return RationalFunction._raw(self.num**k, self.den**k)

    def subs_power(self, k: int) -> RationalFunction:
        """``q -> q^k`` for nonzero integer ``k``."""
        return RationalFunction(self.num.subs_power(k), self.den.subs_power(k))

    def evaluate(self, value) -> Rational:
        d = self.den.evaluate(value)
        if not d:
            raise DivisionByNonUnit(f"pole at q = {value}")
        return self.num.evaluate(value) / d

    def to_series(self, order: int) -> QSeries:
        """Expansion around q = 0 to the given order."""
        if self.is_zero():
            return QSeries.zero(order)
        if self.num.valuation < 0:
            raise NotAPowerSeries(f"{self} has a pole at q = 0")
        return QSeries.from_laurent(self.num, order) / QSeries.from_laurent(self.den, order)

    # comparison / display ------------------------------------------------
    def __eq__(self, other) -> bool:
        try:
            o = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __repr__(self) -> str:
        return f"RationalFunction({self})"

    def __str__(self) -> str:
        num = str(self.num)
        if self.den == 1:
            return num
        if len(self.num.coeffs) > 1:
            num = f"({num})"
        return f"{num}/({self.den})"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}


def _normalize(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    if num.is_zero():
        return num, LaurentPoly.constant(ONE)
    vn, fn = _to_flint(num)
    vd, fd = _to_flint(den)
    g = fn.gcd(fd)
    if g.degree() > 0:
        fn = fn // g
        fd = fd // g
    lead = fd.coeffs()[-1]
    if lead != 1:
        fn = fn / lead
        fd = fd / lead
    return _from_flint(fn, vn - vd), _from_flint(fd)
