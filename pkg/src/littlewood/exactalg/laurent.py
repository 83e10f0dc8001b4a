"""Laurent polynomials in a single variable q with rational coefficients."""
from __future__ import annotations

from types import MappingProxyType
from typing import Iterable, Mapping

from .rational import ONE, ZERO, Rational, is_scalar, to_rational


def format_terms(terms: Iterable[tuple[int, Rational]], var: str = "q") -> str:
    """Render ``(exponent, coefficient)`` pairs as ``1 - q + 3/2 q^2``.

    Pairs are printed in the order given; zero coefficients must already be
    filtered out.  An empty iterable renders as ``0``.
    """
    out: list[str] = []
    for e, c in terms:
        c = to_rational(c)
        neg = c < 0
        a = -c if neg else c
        if e == 0:
            body = str(a)
        else:
            mono = var if e == 1 else f"{var}^{e}"
            body = mono if a == 1 else f"{a} {mono}"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(out) if out else "0"


class LaurentPoly:
    """Finite sum ``sum c_e q^e`` with ``e`` ranging over the integers.

    Immutable and hashable.  Zero coefficients are never stored.

    >>> (LaurentPoly.one_minus(1) * LaurentPoly({0: 1, 1: 1})) == LaurentPoly.one_minus(2)
    True
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, object] | Iterable[tuple[int, object]] | None = None):
        items = coeffs.items() if isinstance(coeffs, Mapping) else (coeffs or ())
        c: dict[int, Rational] = {}
        for e, v in items:
            v = to_rational(v)
            if v:
                e = int(e)
                s = c.get(e, ZERO) + v
                if s:
                    c[e] = s
                else:
                    c.pop(e, None)
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, c: dict[int, Rational]) -> LaurentPoly:
        obj = cls.__new__(cls)
        obj._c = c
        obj._hash = None
        return obj

    # constructors ------------------------------------------------------
    @classmethod
    def constant(cls, value) -> LaurentPoly:
        return cls({0: value})

    @classmethod
    def monomial(cls, exponent: int, coefficient=1) -> LaurentPoly:
        return cls({exponent: coefficient})

    @classmethod
    def one_minus(cls, exponent: int, coefficient=1) -> LaurentPoly:
        """``1 - c q^k`` (which is zero when ``k == 0`` and ``c == 1``)."""
        return cls([(0, 1), (exponent, -to_rational(coefficient))])

    @classmethod
    def coerce(cls, value) -> LaurentPoly:
        if isinstance(value, LaurentPoly):
            return value
        if is_scalar(value):
            return cls.constant(value)
        raise TypeError(f"cannot coerce {type(value).__name__} to LaurentPoly")

    # inspection ----------------------------------------------------------
    @property
    def coeffs(self) -> Mapping[int, Rational]:
        return MappingProxyType(self._c)

    def terms(self) -> list[tuple[int, Rational]]:
        return sorted(self._c.items())

    def __getitem__(self, exponent: int) -> Rational:
        return self._c.get(exponent, ZERO)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    @property
    def valuation(self) -> int:
        """Lowest exponent present; raises on the zero polynomial."""
        if not self._c:
            raise ValueError("valuation of zero")
        return min(self._c)

    @property
    def degree(self) -> int:
        if not self._c:
            raise ValueError("degree of zero")
        return max(self._c)

    def is_monomial(self) -> bool:
        return len(self._c) == 1

    def is_polynomial(self) -> bool:
        return all(e >= 0 for e in self._c)

    # arithmetic --------------------------------------------------------
    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw({e: -v for e, v in self._c.items()})

    def __add__(self, other) -> LaurentPoly:
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        c = dict(self._c)
        for e, v in other._c.items():
            s = c.get(e, ZERO) + v
            if s:
                c[e] = s
            else:
                c.pop(e, None)
        return LaurentPoly._raw(c)

    __radd__ = __add__

    def __sub__(self, other) -> LaurentPoly:
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other) -> LaurentPoly:
        if is_scalar(other):
            other = to_rational(other)
            if not other:
                return LaurentPoly._raw({})
            return LaurentPoly._raw({e: v * other for e, v in self._c.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        c: dict[int, Rational] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                c[e] = c.get(e, ZERO) + v1 * v2
        return LaurentPoly._raw({e: v for e, v in c.items() if v})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            if not self.is_monomial():
                raise ValueError("negative power of a non-monomial Laurent polynomial")
            (e, v), = self._c.items()
            return LaurentPoly._raw({e * k: to_rational(v) ** k})
        result = LaurentPoly.constant(ONE)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``q^k``."""
        return LaurentPoly._raw({e + k: v for e, v in self._c.items()})

    def subs_power(self, k: int) -> LaurentPoly:
        """Substitute ``q -> q^k`` (``k`` a nonzero integer)."""
        if k == 0:
            raise ValueError("q -> q^0 is not a ring automorphism")
        return LaurentPoly._raw({e * k: v for e, v in self._c.items()})

    def evaluate(self, value):
        value = to_rational(value)
        total = ZERO
        for e, v in self._c.items():
            total += v * value**e
        return total

    # comparison / display ------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self._c == other._c
        if is_scalar(other):
            return self._c == ({0: to_rational(other)} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        return format_terms(self.terms())

    def to_json(self) -> dict[str, str]:
        return {str(e): str(v) for e, v in self.terms()}
