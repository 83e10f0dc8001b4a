"""Slow, obviously-correct reference implementations used only by the tests."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from littlewood.exactalg import XSeries
from littlewood.partitions import Partition


def cells(lam):
    return {(i, j) for i, row in enumerate(lam, start=1) for j in range(1, row + 1)}


def hooks_by_counting(lam):
    """Hook lengths by literally counting cells to the right and below."""
    cs = cells(lam)
    out = []
    for i, j in sorted(cs):
        arm = sum(1 for (a, b) in cs if a == i and b > j)
        leg = sum(1 for (a, b) in cs if b == j and a > i)
        out.append(arm + leg + 1)
    return sorted(out)


@lru_cache(maxsize=None)
def _domino_removals(lam: tuple) -> frozenset:
    """Partitions reachable by removing one domino (a rim 2-hook) from the border."""
    out = set()
    parts = list(lam)
    # horizontal domino at the end of row i
    for i in range(len(parts)):
        p = parts[:]
        p[i] -= 2
        if p[i] >= 0 and (i + 1 == len(p) or p[i] >= p[i + 1]):
            out.add(tuple(x for x in p if x))
    # vertical domino at the bottom of column j: rows i, i+1 both end there
    for i in range(len(parts) - 1):
        if parts[i] == parts[i + 1]:
            p = parts[:]
            p[i] -= 1
            p[i + 1] -= 1
            if i + 2 == len(p) or p[i + 1] >= p[i + 2]:
                out.add(tuple(x for x in p if x))
    return frozenset(out)


@lru_cache(maxsize=None)
def two_core_by_removal(lam: tuple) -> tuple:
    """Remove dominoes greedily-but-exhaustively; the 2-core is independent of order."""
    nxt = _domino_removals(lam)
    if not nxt:
        return lam
    return two_core_by_removal(min(nxt))


def b_by_definition(lam):
    lam = tuple(lam)
    conj = [sum(1 for p in lam if p >= j) for j in range(1, (lam[0] if lam else 0) + 1)]
    return sum(
        (-1) ** (lam[i - 1] + conj[j - 1] - i - j + 1) * (lam[i - 1] - i)
        for i, j in cells(lam)
    )


def perm_sign(p):
    sign = 1
    p = list(p)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


def alternant(exponents, n):
    """``det(x_i^{e_j})`` as an XSeries."""
    terms = {}
    for p in permutations(range(n)):
        e = [0] * n
        for i in range(n):
            e[i] = exponents[p[i]]
        terms[tuple(e)] = terms.get(tuple(e), 0) + perm_sign(p)
    return XSeries(n, terms)


def pfaffian_by_matchings(a):
    """Sum over perfect matchings with crossing signs."""
    n = len(a)

    def rec(rest):
        if not rest:
            return Fraction(1)
        i = rest[0]
        total = Fraction(0)
        for k in range(1, len(rest)):
            j = rest[k]
            sign = -1 if (k - 1) % 2 else 1
            total += sign * a[i][j] * rec(rest[1:k] + rest[k + 1:])
        return total

    return rec(list(range(n)))


def det_leibniz(m):
    n = len(m)
    total = Fraction(0)
    for p in permutations(range(n)):
        prod = Fraction(perm_sign(p))
        for i in range(n):
            prod *= m[i][p[i]]
        total += prod
    return total


def series_coeffs(expr, order):
    """Taylor coefficients of a sympy expression in ``q`` up to ``q^order``."""
    import sympy

    q = sympy.Symbol("q")
    s = sympy.series(expr, q, 0, order + 1).removeO()
    poly = sympy.Poly(s, q)
    return [Fraction(str(poly.coeff_monomial(q**k))) for k in range(order + 1)]


def all_partitions(max_size):
    def gen(n, cap):
        if n == 0:
            yield ()
            return
        for p in range(min(n, cap), 0, -1):
            for rest in gen(n - p, p):
                yield (p,) + rest

    for size in range(max_size + 1):
        for lam in gen(size, size):
            yield Partition(lam)


def poly_coeffs(expr, order):
    """Coefficients of a polynomial sympy expression in ``q`` up to ``q^order``."""
    import sympy

    q = sympy.Symbol("q")
    poly = sympy.Poly(sympy.expand(expr), q)
    return [Fraction(str(poly.coeff_monomial(q**k))) for k in range(order + 1)]
