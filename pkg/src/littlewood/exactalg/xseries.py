"""Sparse multivariate Laurent polynomials in x_1..x_n.

Coefficients live in any of the scalar rings of this package (``int`` /
``Rational``, ``LaurentPoly``, ``RationalFunction``, ``QSeries``); the only
requirements are ``+``, ``-``, ``*`` and truthiness meaning "nonzero".
An optional total-degree bound ``d`` truncates every result to terms whose
exponent sum is at most ``d``.
"""
from __future__ import annotations

from itertools import permutations
from types import MappingProxyType
from typing import Callable, Iterable, Mapping, Sequence

from ..errors import SubstitutionError
from .rational import ONE, ZERO, is_scalar, to_rational

Exponent = tuple[int, ...]


def _clean(value):
    return to_rational(value) if is_scalar(value) else value


class XSeries:
    __slots__ = ("nvars", "_terms", "degree_bound")

    def __init__(self, nvars: int, terms: Mapping[Exponent, object] | Iterable = (), degree_bound: int | None = None):
        self.nvars = nvars
        self.degree_bound = degree_bound
        items = terms.items() if isinstance(terms, Mapping) else terms
        t: dict[Exponent, object] = {}
        for e, c in items:
            e = tuple(int(a) for a in e)
            if len(e) != nvars:
                raise ValueError(f"exponent {e} has length {len(e)}, expected {nvars}")
            if degree_bound is not None and sum(e) > degree_bound:
                continue
            c = _clean(c)
            if e in t:
                c = t[e] + c
            if c:
                t[e] = c
            else:
                t.pop(e, None)
        self._terms = t

    @classmethod
    def _raw(cls, nvars: int, terms: dict, degree_bound: int | None) -> XSeries:
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj._terms = terms
        obj.degree_bound = degree_bound
        return obj

    # constructors ------------------------------------------------------
    @classmethod
    def zero(cls, nvars: int, degree_bound: int | None = None) -> XSeries:
        return cls._raw(nvars, {}, degree_bound)

    @classmethod
    def constant(cls, nvars: int, value=ONE, degree_bound: int | None = None) -> XSeries:
        return cls(nvars, {(0,) * nvars: value}, degree_bound)

    one = constant

    @classmethod
    def monomial(cls, exponent: Sequence[int], coefficient=ONE, degree_bound: int | None = None) -> XSeries:
        return cls(len(exponent), {tuple(exponent): coefficient}, degree_bound)

    @classmethod
    def variable(cls, nvars: int, i: int, power: int = 1) -> XSeries:
        """``x_{i+1}^power`` (0-based index ``i``)."""
        e = [0] * nvars
        e[i] = power
        return cls.monomial(e)

    # inspection ----------------------------------------------------------
    @property
    def terms(self) -> Mapping[Exponent, object]:
        return MappingProxyType(self._terms)

    def items(self):
        return self._terms.items()

    def sorted_items(self) -> list[tuple[Exponent, object]]:
        return sorted(self._terms.items(), key=lambda kv: kv[0])

    def __getitem__(self, exponent: Sequence[int]):
        return self._terms.get(tuple(exponent), ZERO)

    def __contains__(self, exponent) -> bool:
        return tuple(exponent) in self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_polynomial(self) -> bool:
        return all(a >= 0 for e in self._terms for a in e)

    def min_exponent(self) -> int:
        return min((a for e in self._terms for a in e), default=0)

    def max_total_degree(self) -> int:
        return max((sum(e) for e in self._terms), default=0)

    # arithmetic --------------------------------------------------------
    def _bound(self, other: XSeries) -> int | None:
        bounds = [b for b in (self.degree_bound, other.degree_bound) if b is not None]
        return min(bounds) if bounds else None

    def _check(self, other: XSeries) -> None:
        if self.nvars != other.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def __neg__(self) -> XSeries:
        return XSeries._raw(self.nvars, {e: -c for e, c in self._terms.items()}, self.degree_bound)

    def __add__(self, other) -> XSeries:
        if not isinstance(other, XSeries):
            other = XSeries.constant(self.nvars, other)
        self._check(other)
        bound = self._bound(other)
        t = {e: c for e, c in self._terms.items() if bound is None or sum(e) <= bound}
        for e, c in other._terms.items():
            if bound is not None and sum(e) > bound:
                continue
            if e in t:
                s = t[e] + c
                if s:
                    t[e] = s
                else:
                    del t[e]
            else:
                t[e] = c
        return XSeries._raw(self.nvars, t, bound)

    __radd__ = __add__

    def __sub__(self, other) -> XSeries:
        if not isinstance(other, XSeries):
            other = XSeries.constant(self.nvars, other)
        return self + (-other)

    def __rsub__(self, other) -> XSeries:
        return (-self) + other

    def scale(self, value) -> XSeries:
        """Multiply every coefficient by a ring element."""
        value = _clean(value)
        t = {}
        for e, c in self._terms.items():
            p = c * value
            if p:
                t[e] = p
        return XSeries._raw(self.nvars, t, self.degree_bound)

    def __mul__(self, other) -> XSeries:
        if not isinstance(other, XSeries):
            return self.scale(other)
        self._check(other)
        bound = self._bound(other)
        t: dict[Exponent, object] = {}
        b_items = [(e, sum(e), c) for e, c in other._terms.items()]
        for e1, c1 in self._terms.items():
            d1 = sum(e1)
            for e2, d2, c2 in b_items:
                if bound is not None and d1 + d2 > bound:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                p = c1 * c2
                if e in t:
                    t[e] = t[e] + p
                else:
                    t[e] = p
        return XSeries._raw(self.nvars, {e: c for e, c in t.items() if c}, bound)

    def __rmul__(self, other) -> XSeries:
        return self.scale(other)

    def __pow__(self, k: int) -> XSeries:
        if k < 0:
            raise ValueError("negative powers are not supported")
        result = XSeries.constant(self.nvars, ONE, self.degree_bound)
        for _ in range(k):
            result = result * self
        return result

    def shift(self, exponent: Sequence[int]) -> XSeries:
        """Multiply by the monomial ``x^exponent`` (then re-apply the bound)."""
        exponent = tuple(exponent)
        t = {tuple(a + b for a, b in zip(e, exponent)): c for e, c in self._terms.items()}
        return XSeries(self.nvars, t, self.degree_bound)

    def truncate(self, degree: int) -> XSeries:
        bound = degree if self.degree_bound is None else min(degree, self.degree_bound)
        return XSeries._raw(
            self.nvars, {e: c for e, c in self._terms.items() if sum(e) <= bound}, bound
        )

    def homogeneous_part(self, degree: int) -> XSeries:
        return XSeries._raw(
            self.nvars, {e: c for e, c in self._terms.items() if sum(e) == degree}, self.degree_bound
        )

    def map_coefficients(self, fn: Callable[[object], object]) -> XSeries:
        t = {}
        for e, c in self._terms.items():
            v = _clean(fn(c))
            if v:
                t[e] = v
        return XSeries._raw(self.nvars, t, self.degree_bound)

    def invert_variables(self) -> XSeries:
        """``f(x) -> f(x^{-1})``."""
        return XSeries._raw(
            self.nvars, {tuple(-a for a in e): c for e, c in self._terms.items()}, None
        )

    def permute(self, perm: Sequence[int]) -> XSeries:
        """Apply ``x_i -> x_{perm[i]}`` (0-based)."""
        t = {}
        for e, c in self._terms.items():
            new = [0] * self.nvars
            for i, a in enumerate(e):
                new[perm[i]] = a
            t[tuple(new)] = c
        return XSeries._raw(self.nvars, t, self.degree_bound)

    def is_symmetric(self, transpositions: Iterable[tuple[int, int]] | None = None) -> bool:
        """Invariance under the given transpositions (default: all adjacent ones)."""
        if transpositions is None:
            transpositions = [(i, i + 1) for i in range(self.nvars - 1)]
        for i, j in transpositions:
            perm = list(range(self.nvars))
            perm[i], perm[j] = j, i
            if self.permute(perm) != self:
                return False
        return True

    def is_bc_symmetric(self) -> bool:
        if not self.is_symmetric():
            return False
        for i in range(self.nvars):
            flipped = XSeries._raw(
                self.nvars,
                {e[:i] + (-e[i],) + e[i + 1:]: c for e, c in self._terms.items()},
                self.degree_bound,
            )
            if flipped != self:
                return False
        return True

    # comparison / display ------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, XSeries):
            if is_scalar(other):
                other = XSeries.constant(self.nvars, other)
            else:
                return NotImplemented
        if self.nvars != other.nvars or self._terms.keys() != other._terms.keys():
            return False
        return all(c == other._terms[e] for e, c in self._terms.items())

    __hash__ = None

    def first_difference(self, other: XSeries):
        """First exponent (in sorted order) where the coefficients differ."""
        for e in sorted(self._terms.keys() | other._terms.keys()):
            a, b = self[e], other[e]
            if not (a == b):
                return e
        return None

    def __repr__(self) -> str:
        return f"XSeries(nvars={self.nvars}, terms={len(self._terms)}, degree_bound={self.degree_bound})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.sorted_items():
            mono = "*".join(
                (f"x{i + 1}" if a == 1 else f"x{i + 1}^{a}") for i, a in enumerate(e) if a
            )
            coef = str(c)
            if not mono:
                parts.append(f"({coef})" if " " in coef else coef)
            elif coef == "1":
                parts.append(mono)
            else:
                parts.append(f"({coef})*{mono}" if " " in coef else f"{coef}*{mono}")
        return " + ".join(parts)


def constant_term(f: XSeries):
    """Coefficient of ``x_1^0 ... x_n^0``.

    This is the torus integral of ``f`` against ``dx_1/(2 pi i x_1) ...``;
    callers apply any further normalisation.
    """
    return f[(0,) * f.nvars]


def pairing(f: XSeries, g: XSeries):
    """``constant_term(f * g)`` without forming the product."""
    if f.nvars != g.nvars:
        raise ValueError("variable count mismatch")
    if len(f) > len(g):
        f, g = g, f
    total = ZERO
    gt = g._terms
    for e, c in f._terms.items():
        other = gt.get(tuple(-a for a in e))
        if other is not None:
            total = total + c * other
    return total


def substitute(
    f: XSeries,
    images: Sequence[XSeries] | None = None,
    q_power: int | None = None,
    nvars: int | None = None,
) -> XSeries:
    """Substitute ``x_i -> images[i]`` and/or ``q -> q^k`` in the coefficients.

    Images are XSeries in a common target variable set.  Negative exponents
    of a source variable require its image to be a single monomial.
    """
    coeff_fn = (lambda c: c) if q_power is None else (
        lambda c: c if is_scalar(c) else c.subs_power(q_power)
    )
    if images is None:
        return f.map_coefficients(coeff_fn)
    if len(images) != f.nvars:
        raise SubstitutionError(f"need {f.nvars} images, got {len(images)}")
    target = nvars if nvars is not None else (images[0].nvars if images else 0)
    monos = []
    for img in images:
        if img.nvars != target:
            raise SubstitutionError("images live in different variable sets")
        if len(img) == 1:
            (e, c), = img.items()
            monos.append((e, c))
        else:
            monos.append(None)
    result: dict[Exponent, object] = {}
    powers: dict[tuple[int, int], XSeries] = {}
    for e, c in f.items():
        c = coeff_fn(c)
        if all(m is not None for m in monos):
            new = [0] * target
            coef = c
            for a, (me, mc) in zip(e, monos):
                if a:
                    for k in range(target):
                        new[k] += me[k] * a
                    if mc != 1:
                        coef = coef * (mc**a)
            key = tuple(new)
            result[key] = result[key] + coef if key in result else coef
            continue
        term = XSeries.constant(target, c)
        for i, a in enumerate(e):
            if a == 0:
                continue
            if a < 0:
                if monos[i] is None:
                    raise SubstitutionError(
                        f"x_{i + 1} has negative exponent but its image is not a monomial"
                    )
                me, mc = monos[i]
                term = term * XSeries.monomial([x * a for x in me], mc**a)
            else:
                key = (i, a)
                if key not in powers:
                    powers[key] = images[i] ** a
                term = term * powers[key]
        for te, tc in term.items():
            result[te] = result[te] + tc if te in result else tc
    return XSeries(target, {e: c for e, c in result.items() if c}, f.degree_bound)


def doubled(f: XSeries) -> XSeries:
    """``f(x_1, .., x_{2n}) -> f(x_1, x_1^{-1}, .., x_n, x_n^{-1})``."""
    if f.nvars % 2:
        raise SubstitutionError("doubling needs an even number of source variables")
    n = f.nvars // 2
    t: dict[Exponent, object] = {}
    for e, c in f.items():
        key = tuple(e[2 * i] - e[2 * i + 1] for i in range(n))
        t[key] = t[key] + c if key in t else c
    return XSeries(n, {k: v for k, v in t.items() if v})


def all_permutations_symmetric(f: XSeries) -> bool:
    """Brute-force symmetry check under the full symmetric group (tests only)."""
    return all(f.permute(p) == f for p in permutations(range(f.nvars)))
