"""Pfaffians over a field, with the two parity-supported Pfaffian formulas.

The linear algebra is generic: entries may be ``RationalFunction`` or plain
rationals.  Pivots are picked by smallest denominator degree to keep
rational-function growth in check.
"""
from __future__ import annotations

from enum import Enum
from typing import Callable, Sequence

from .errors import LengthExceeded, NonEmptyTwoCore, OddDimension, SingularDenominator
from .exactalg import LaurentPoly, RationalFunction
from .partitions import (
    Partition,
    Variant,
    b_statistic,
    content_poly,
    hook_poly,
    two_core,
)

def _cost(x) -> int:
    if isinstance(x, RationalFunction):
        return 4 * x.den_degree() + len(x.num.coeffs)
    return 0


class SkewMatrix:
    """Square antisymmetric matrix; the diagonal is zero."""

    __slots__ = ("entries",)

    def __init__(self, entries: Sequence[Sequence[object]]):
        rows = [list(r) for r in entries]
        m = len(rows)
        for i, r in enumerate(rows):
            if len(r) != m:
                raise ValueError("matrix is not square")
            if r[i]:
                raise ValueError(f"nonzero diagonal entry at {i}")
            for j in range(i + 1, m):
                if not (rows[j][i] == -r[j]):
                    raise ValueError(f"entries ({i},{j}) and ({j},{i}) are not antisymmetric")
        self.entries = rows

    @classmethod
    def from_upper(cls, size: int, entry: Callable[[int, int], object], zero=None) -> SkewMatrix:
        """Build from ``entry(i, j)`` for ``i < j`` (0-based); the rest follows."""
        zero = RationalFunction() if zero is None else zero
        rows = [[zero] * size for _ in range(size)]
        for i in range(size):
            for j in range(i + 1, size):
                v = entry(i, j)
                rows[i][j] = v
                rows[j][i] = -v
        obj = cls.__new__(cls)
        obj.entries = rows
        return obj

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]


def _rows(a) -> list[list]:
    return [list(r) for r in (a.entries if isinstance(a, SkewMatrix) else a)]


def pfaffian(a) -> object:
    """Pfaffian by skew-symmetric Gaussian elimination (Schur complement on 2x2 blocks)."""
    rows = _rows(a)
    m = len(rows)
    if m % 2:
        raise OddDimension(f"Pfaffian of a {m}x{m} matrix")
    if m == 0:
        return RationalFunction(1)
    one = rows[0][1] * 0 + 1
    result = one
    while m:
        candidates = [k for k in range(1, m) if rows[0][k]]
        if not candidates:
            return one * 0
        k = min(candidates, key=lambda c: (_cost(rows[0][c]), c))
        if k != 1:
            rows[1], rows[k] = rows[k], rows[1]
            for r in rows:
                r[1], r[k] = r[k], r[1]
            result = -result
        a12 = rows[0][1]
        result = result * a12
        r1, r2 = rows[0], rows[1]
        inv = 1 / a12
        zero = one * 0
        new = [[zero] * (m - 2) for _ in range(m - 2)]
        for i in range(2, m):
            for j in range(i + 1, m):
                v = rows[i][j]
                t = r2[i] * r1[j] - r1[i] * r2[j]
                if t:
                    v = v + t * inv
                new[i - 2][j - 2] = v
                new[j - 2][i - 2] = -v
        rows = new
        m -= 2
    return result


def pfaffian_expansion(a) -> object:
    """Pfaffian by recursive expansion along the first row (exponential; oracle only)."""
    rows = _rows(a)
    m = len(rows)
    if m % 2:
        raise OddDimension(f"Pfaffian of a {m}x{m} matrix")
    if m == 0:
        return 1
    total = None
    for j in range(1, m):
        if not rows[0][j]:
            continue
        keep = [k for k in range(m) if k not in (0, j)]
        minor = [[rows[r][c] for c in keep] for r in keep]
        term = rows[0][j] * pfaffian_expansion(minor)
        if (j - 1) % 2:
            term = -term
        total = term if total is None else total + term
    return total if total is not None else rows[0][1] * 0


def determinant(matrix: Sequence[Sequence[object]]) -> object:
    """Determinant by Gaussian elimination over a field."""
    rows = [list(r) for r in matrix]
    n = len(rows)
    if n == 0:
        return RationalFunction(1)
    one = rows[0][0] * 0 + 1
    result = one
    for col in range(n):
        candidates = [r for r in range(col, n) if rows[r][col]]
        if not candidates:
            return one * 0
        p = min(candidates, key=lambda r: (_cost(rows[r][col]), r))
        if p != col:
            rows[col], rows[p] = rows[p], rows[col]
            result = -result
        piv = rows[col][col]
        result = result * piv
        inv = 1 / piv
        for r in range(col + 1, n):
            f = rows[r][col]
            if not f:
                continue
            f = f * inv
            rows[r] = [x if k <= col else x - f * y for k, (x, y) in enumerate(zip(rows[r], rows[col]))]
    return result


def determinant_expansion(matrix: Sequence[Sequence[object]]) -> object:
    """Laplace expansion along the first row (oracle only)."""
    n = len(matrix)
    if n == 0:
        return 1
    if n == 1:
        return matrix[0][0]
    total = None
    for j in range(n):
        if not matrix[0][j]:
            continue
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        term = matrix[0][j] * determinant_expansion(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total if total is not None else matrix[0][0] * 0


# --- the two structured Pfaffians -------------------------------------------


class PfKind(str, Enum):
    P1 = "P1"
    P2 = "P2"


def _shifted_diff(parts: Sequence[int], i: int, j: int) -> int:
    return parts[i] - parts[j] + j - i


def _entry(kind: PfKind, d: int) -> RationalFunction:
    if d % 2 == 0:
        return RationalFunction()
    den = LaurentPoly.one_minus(d)
    if kind is PfKind.P1:
        return RationalFunction(LaurentPoly.monomial((d - 1) // 2), den)
    return RationalFunction(LaurentPoly.constant(1) + LaurentPoly.monomial(d), den)


def structured_matrix(lam: Partition, n: int, kind: PfKind | str) -> SkewMatrix:
    """The ``2n x 2n`` matrix with entries supported where ``lam_i - lam_j + j - i`` is odd."""
    kind = PfKind(kind)
    lam = Partition(lam)
    if len(lam) > 2 * n:
        raise LengthExceeded(f"{lam} has more than 2n={2 * n} parts")
    parts = lam.padded(2 * n)
    return SkewMatrix.from_upper(2 * n, lambda i, j: _entry(kind, _shifted_diff(parts, i, j)))


def pfaffian_prefactor(n: int) -> RationalFunction:
    """``prod_{i=1}^n (1-q^{2i-1})^{2n-2i+1} / (1-q^{2i})^{2n-2i}``."""
    num = LaurentPoly.constant(1)
    den = LaurentPoly.constant(1)
    for i in range(1, n + 1):
        num = num * LaurentPoly.one_minus(2 * i - 1) ** (2 * n - 2 * i + 1)
        den = den * LaurentPoly.one_minus(2 * i) ** (2 * n - 2 * i)
    return RationalFunction(num, den)


def pf_formula_P1(lam: Partition, n: int) -> RationalFunction:
    return pfaffian_prefactor(n) * pfaffian(structured_matrix(lam, n, PfKind.P1))


def pf_formula_P2(lam: Partition, n: int) -> RationalFunction:
    scale = RationalFunction(1, LaurentPoly({0: 2 ** (n - 1), n: 2 ** (n - 1)}))
    return scale * pfaffian_prefactor(n) * pfaffian(structured_matrix(lam, n, PfKind.P2))


# --- closed forms ---------------------------------------------------------


def _check_closed_form(lam: Partition, n: int) -> Partition:
    lam = Partition(lam)
    if len(lam) > 2 * n:
        raise LengthExceeded(f"{lam} has more than 2n={2 * n} parts")
    if two_core(lam):
        raise NonEmptyTwoCore(f"{lam} has 2-core {two_core(lam)}")
    return lam


def content_hook_ratio(lam: Partition, z_exponent: int) -> RationalFunction:
    """``C^e(q^z) H^o / (C^o(q^z) H^e)``."""
    num = content_poly(lam, z_exponent, Variant.EVEN) * hook_poly(lam, Variant.ODD)
    den = content_poly(lam, z_exponent, Variant.ODD) * hook_poly(lam, Variant.EVEN)
    return RationalFunction(num, den)


def closed_form_int1(lam: Partition, n: int) -> RationalFunction:
    lam = _check_closed_form(lam, n)
    return RationalFunction.q(b_statistic(lam.conjugate())) * content_hook_ratio(lam, 2 * n)


def closed_form_int2(lam: Partition, n: int) -> RationalFunction:
    lam = _check_closed_form(lam, n)
    b, bc = b_statistic(lam), b_statistic(lam.conjugate())
    head = RationalFunction(
        LaurentPoly.constant(1) + LaurentPoly.monomial(n + 2 * (bc - b)),
        LaurentPoly.constant(1) + LaurentPoly.monomial(n),
    )
    return RationalFunction.q(b) * head * content_hook_ratio(lam, 2 * n)


# --- block reduction and Chu's determinant ----------------------------------


def block_decomposition(lam: Partition, n: int, kind: PfKind | str) -> tuple[int, list[list[RationalFunction]]]:
    """``(sign, M)`` with ``pf = sign * det M``.

    ``J`` collects the (1-based) columns whose first-row entry is nonzero and
    ``I`` the rest; ``M[k][l]`` is the entry at ``(i_k, j_l)``.  Moving ``J``
    behind ``I`` costs ``(-1)^{n^2 + n(n+1)/2 + sum J}`` and the block
    Pfaffian contributes ``(-1)^{n(n-1)/2}``, so the sign is ``(-1)^{sum J}``.
    """
    a = structured_matrix(lam, n, kind)
    size = 2 * n
    J = [j for j in range(size) if a[0, j]]
    I = [i for i in range(size) if i not in J]
    if len(J) != n:
        raise NonEmptyTwoCore(f"{lam}: first row has {len(J)} nonzero entries, expected {n}")
    M = [[a[i, j] for j in J] for i in I]
    sign = -1 if sum(j + 1 for j in J) % 2 else 1
    return sign, M


def chu_determinant_sides(x: Sequence, y: Sequence, b, c) -> tuple[RationalFunction, RationalFunction]:
    """Both sides of ``det[(b x_i + c y_j)/(x_i + y_j)]`` = product formula."""
    n = len(x)
    if len(y) != n:
        raise ValueError("x and y must have the same length")
    x = [RationalFunction.coerce(v) for v in x]
    y = [RationalFunction.coerce(v) for v in y]
    b, c = RationalFunction.coerce(b), RationalFunction.coerce(c)
    sums = [[xi + yj for yj in y] for xi in x]
    if any(not s for row in sums for s in row):
        raise SingularDenominator("some x_i + y_j vanishes")
    lhs = determinant([[(b * xi + c * yj) / sums[i][j] for j, yj in enumerate(y)] for i, xi in enumerate(x)])
    px = RationalFunction(1)
    py = RationalFunction(1)
    for v in x:
        px = px * v
    for v in y:
        py = py * v
    sign = 1 if (n - 1) % 2 == 0 else -1
    rhs = (b - c) ** (n - 1) * (b * px + c * py * sign)
    for i in range(n):
        for j in range(i + 1, n):
            rhs = rhs * (x[i] - x[j]) * (y[i] - y[j])
    for row in sums:
        for s in row:
            rhs = rhs / s
    return lhs, rhs


def chu_determinant_check(x: Sequence, y: Sequence, b, c) -> bool:
    lhs, rhs = chu_determinant_sides(x, y, b, c)
    return lhs == rhs


# --- hook-content identity ------------------------------------------------


def hook_content_sides(lam: Partition, nvars: int) -> tuple[RationalFunction, RationalFunction]:
    """``C_lam(q^N; q) / H_lam(q)`` and ``prod_{i<j<=N} (1 - q^{lam_i-lam_j+j-i}) / prod_{k<N} (q;q)_k``."""
    lam = Partition(lam)
    parts = lam.padded(nvars)
    lhs = RationalFunction(content_poly(lam, nvars), hook_poly(lam))
    num = LaurentPoly.constant(1)
    for i in range(nvars):
        for j in range(i + 1, nvars):
            num = num * LaurentPoly.one_minus(_shifted_diff(parts, i, j))
    den = LaurentPoly.constant(1)
    for k in range(1, nvars):
        for r in range(1, k + 1):
            den = den * LaurentPoly.one_minus(r)
    return lhs, RationalFunction(num, den)


def parity_product_form(lam: Partition, n: int) -> RationalFunction:
    """The content-hook ratio at ``z = q^{2n}`` rewritten through pairwise differences.

    Valid for ``lam`` with empty 2-core and at most ``2n`` parts.
    """
    lam = _check_closed_form(lam, n)
    parts = lam.padded(2 * n)
    num = LaurentPoly.constant(1)
    den = LaurentPoly.constant(1)
    for i in range(2 * n):
        for j in range(i + 1, 2 * n):
            d = _shifted_diff(parts, i, j)
            if d % 2:
                den = den * LaurentPoly.one_minus(d)
            else:
                num = num * LaurentPoly.one_minus(d)
    return RationalFunction(num, den) * pfaffian_prefactor(n)
