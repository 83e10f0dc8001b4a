"""Schur polynomials in finitely many variables and Schur-basis expansion."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Iterator

from .errors import NonterminatingRemainder, NotSymmetric
from .exactalg import XSeries
from .partitions import Partition, enumerate_partitions


def _horizontal_strips(lam: Partition, n: int) -> Iterator[Partition]:
    """All ``mu`` with ``lam / mu`` a horizontal strip and ``l(mu) <= n - 1``."""
    rows = lam.padded(n)
    ranges = [range(rows[i + 1], rows[i] + 1) for i in range(n - 1)]
    for mu in product(*ranges):
        yield Partition(mu)


@lru_cache(maxsize=None)
def _schur_terms(lam: Partition, n: int) -> dict[tuple[int, ...], int]:
    if len(lam) > n:
        return {}
    if n == 0:
        return {(): 1}
    size = lam.size()
    out: dict[tuple[int, ...], int] = {}
    for mu in _horizontal_strips(lam, n):
        last = size - mu.size()
        for e, c in _schur_terms(mu, n - 1).items():
            key = e + (last,)
            out[key] = out.get(key, 0) + c
    return out


def schur(lam: Partition, n: int) -> XSeries:
    """``s_lam(x_1, .., x_n)`` as the generating polynomial of SSYT with entries <= n.

    The entries equal to ``n`` in a tableau form a horizontal strip, so the
    tableau sum factors through the branching rule, which is what is
    evaluated (memoised on ``(lam, n)``).  Zero when ``l(lam) > n``.
    """
    if n < 1:
        raise ValueError("need at least one variable")
    lam = Partition(lam)
    return XSeries(n, _schur_terms(lam, n))


def semistandard_tableaux(lam: Partition, n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Yield every SSYT of shape ``lam`` with entries in ``1..n`` (rows as tuples)."""
    lam = Partition(lam)
    if len(lam) > n:
        return
    cells = list(lam.cells())
    filling: dict[tuple[int, int], int] = {}

    def rec(k: int):
        if k == len(cells):
            yield tuple(tuple(filling[(i, j)] for j in range(1, lam[i - 1] + 1)) for i in range(1, len(lam) + 1))
            return
        i, j = cells[k]
        lo = 1
        if j > 1:
            lo = max(lo, filling[(i, j - 1)])
        if i > 1:
            lo = max(lo, filling[(i - 1, j)] + 1)
        for v in range(lo, n + 1):
            filling[(i, j)] = v
            yield from rec(k + 1)
        filling.pop((i, j), None)

    yield from rec(0)


@dataclass
class SchurExpansion:
    """Finite linear combination ``sum c_lam s_lam(x_1..x_n)``."""

    n: int
    coefficients: dict[Partition, object] = field(default_factory=dict)

    def __post_init__(self):
        self.coefficients = {Partition(k): v for k, v in self.coefficients.items() if v}

    def __getitem__(self, lam) -> object:
        return self.coefficients.get(Partition(lam), 0)

    def __len__(self) -> int:
        return len(self.coefficients)

    def keys_sorted(self) -> list[Partition]:
        return sorted(self.coefficients, key=lambda p: (p.size(), tuple(-x for x in p)))

    def items(self) -> list[tuple[Partition, object]]:
        return [(k, self.coefficients[k]) for k in self.keys_sorted()]

    def to_xseries(self, degree_bound: int | None = None) -> XSeries:
        total = XSeries.zero(self.n, degree_bound)
        for lam, c in self.items():
            if degree_bound is not None and lam.size() > degree_bound:
                continue
            total = total + schur(lam, self.n).scale(c)
        return total

    def restrict(self, max_size: int) -> SchurExpansion:
        return SchurExpansion(self.n, {k: v for k, v in self.coefficients.items() if k.size() <= max_size})

    def first_difference(self, other: SchurExpansion):
        """``(lam, self[lam], other[lam])`` at the first differing basis element, else None."""
        keys = set(self.coefficients) | set(other.coefficients)
        for lam in sorted(keys, key=lambda p: (p.size(), tuple(-x for x in p))):
            a, b = self[lam], other[lam]
            if not (a == b):
                return lam, a, b
        return None

    def __eq__(self, other) -> bool:
        if not isinstance(other, SchurExpansion):
            return NotImplemented
        return self.n == other.n and self.first_difference(other) is None

    def to_json(self) -> list:
        out = []
        for lam, c in self.items():
            out.append({"lambda": list(lam), "coefficient": c.to_json() if hasattr(c, "to_json") else str(c)})
        return out


def schur_expand(f: XSeries, n: int | None = None, check_symmetry: bool = True) -> SchurExpansion:
    """Coefficients of ``f`` in the Schur basis by greedy leading-term elimination.

    Within each degree, partitions are visited in lexicographically
    decreasing order; the coefficient of ``x^lam`` in the current remainder
    is then final, because ``s_mu`` only contains ``x^lam`` when ``mu``
    dominates ``lam``.  A nonzero final remainder raises.
    """
    n = f.nvars if n is None else n
    if f.nvars != n:
        raise ValueError(f"series has {f.nvars} variables, expected {n}")
    if not f.is_polynomial():
        raise NotSymmetric("Laurent series has no Schur expansion")
    if check_symmetry and not f.is_symmetric():
        raise NotSymmetric("input is not invariant under adjacent transpositions")
    remainder = dict(f.items())
    coefficients: dict[Partition, object] = {}
    top = f.max_total_degree()
    for lam in enumerate_partitions(top, max_length=n):
        key = lam.padded(n)
        c = remainder.get(key)
        if not c:
            continue
        coefficients[lam] = c
        for e, k in _schur_terms(lam, n).items():
            v = remainder.get(e)
            v = -(c * k) if v is None else v - c * k
            if v:
                remainder[e] = v
            else:
                remainder.pop(e, None)
    if remainder:
        e = min(remainder)
        raise NonterminatingRemainder(f"remainder {remainder[e]} at x^{e} after elimination")
    return SchurExpansion(n, coefficients)
