"""Partitions and their Young-diagram statistics.

Cells are 1-based ``(row, column)`` pairs.  Besides hooks and contents this
module carries the 2-core (computed on the 2-abacus of beta-numbers), the
signed statistic ``b`` and the hook and content polynomials.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Callable, Iterable, Iterator

from .errors import CellOutsideDiagram, LengthExceeded, NonEmptyTwoCore
from .exactalg import LaurentPoly


class Partition(tuple):
    """Weakly decreasing tuple of positive integers (trailing zeros trimmed).

    >>> Partition([6, 4, 3, 1, 0]).conjugate()
    Partition(4, 3, 3, 2, 1, 1)
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be nonnegative: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Parse ``"6,4,3,1"``; the empty string is the empty partition."""
        text = text.strip().strip("()[]")
        if not text:
            return cls()
        return cls(int(t) for t in text.replace(" ", ",").split(",") if t)

    def __repr__(self) -> str:
        return f"Partition({', '.join(map(str, self))})"

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self)) + ")"

    def size(self) -> int:
        return sum(self)

    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """``lambda_i`` with 1-based ``i``; zero beyond the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def padded(self, n: int) -> tuple[int, ...]:
        if len(self) > n:
            raise LengthExceeded(f"{self} has more than {n} parts")
        return tuple(self) + (0,) * (n - len(self))

    def conjugate(self) -> Partition:
        return conjugate(self)

    def cells(self) -> Iterator[tuple[int, int]]:
        for i, row in enumerate(self, start=1):
            for j in range(1, row + 1):
                yield i, j

    def contains(self, other: Partition) -> bool:
        return len(other) <= len(self) and all(b <= a for a, b in zip(self, other))

    def is_even(self) -> bool:
        return all(p % 2 == 0 for p in self)

    def to_json(self) -> list[int]:
        return list(self)


@lru_cache(maxsize=None)
def conjugate(lam: Partition) -> Partition:
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


@dataclass(frozen=True)
class HookData:
    arm: int
    leg: int
    content: int
    even_cell: bool  # parity class of i + j

    @property
    def hook(self) -> int:
        return self.arm + self.leg + 1


def hook_data(lam: Partition, cell: tuple[int, int]) -> HookData:
    i, j = cell
    if not (i >= 1 and j >= 1 and j <= lam.part(i)):
        raise CellOutsideDiagram(f"cell {cell} is not in {lam}")
    lc = conjugate(lam)
    return HookData(arm=lam[i - 1] - j, leg=lc[j - 1] - i, content=j - i, even_cell=(i + j) % 2 == 0)


@dataclass(frozen=True)
class HookMultisets:
    all: Counter
    even: Counter
    odd: Counter


@lru_cache(maxsize=None)
def hook_multisets(lam: Partition) -> HookMultisets:
    lc = conjugate(lam)
    hooks = Counter(lam[i - 1] - j + lc[j - 1] - i + 1 for i, j in lam.cells())
    even = Counter({h: c for h, c in hooks.items() if h % 2 == 0})
    odd = Counter({h: c for h, c in hooks.items() if h % 2 == 1})
    return HookMultisets(hooks, even, odd)


def beta_numbers(lam: Partition, length: int) -> list[int]:
    """``lambda_i + length - i`` for ``i = 1..length``."""
    return [p + length - i for i, p in enumerate(lam.padded(length), start=1)]


@lru_cache(maxsize=None)
def two_core(lam: Partition) -> Partition:
    """2-core via the 2-abacus: slide every bead up its runner, read off the partition."""
    n = len(lam) + len(lam) % 2
    beta = beta_numbers(lam, n)
    evens = sum(1 for b in beta if b % 2 == 0)
    odds = n - evens
    core_beta = sorted([2 * k for k in range(evens)] + [2 * k + 1 for k in range(odds)], reverse=True)
    return Partition(b - (n - i) for i, b in enumerate(core_beta, start=1))


class CoreMethod(str, Enum):
    ABACUS = "abacus"
    HOOK_COUNT = "hook_count"
    BETA_PARITY = "beta_parity"


def has_empty_two_core(lam: Partition, method: CoreMethod | str = CoreMethod.ABACUS, m: int | None = None) -> bool:
    """Whether ``lam`` tiles by dominoes, by one of three equivalent tests.

    ``beta_parity`` pads to length ``2m`` (``m`` defaults to the smallest
    admissible value) and asks for ``m`` even and ``m`` odd beta-numbers.
    """
    method = CoreMethod(method)
    if method is CoreMethod.ABACUS:
        return not two_core(lam)
    if method is CoreMethod.HOOK_COUNT:
        hm = hook_multisets(lam)
        n_odd, n_even = sum(hm.odd.values()), sum(hm.even.values())
        return n_odd == n_even == lam.size() // 2 and lam.size() % 2 == 0
    if m is None:
        m = (len(lam) + 1) // 2
    if 2 * m < len(lam):
        raise LengthExceeded(f"padding length 2m={2 * m} is shorter than {lam}")
    beta = beta_numbers(lam, 2 * m)
    evens = sum(1 for b in beta if b % 2 == 0)
    return evens == m


@lru_cache(maxsize=None)
def b_statistic(lam: Partition) -> int:
    """``sum over cells (i, j) of (-1)^{h(i,j)} (lambda_i - i)``."""
    lc = conjugate(lam)
    total = 0
    for i, j in lam.cells():
        h = lam[i - 1] + lc[j - 1] - i - j + 1
        total += (-1) ** h * (lam[i - 1] - i)
    return total


def _delta_cells_sum(lam: Partition, n: int, weight: Callable[[int, int, int], int]) -> int:
    """Sum of ``(-1)^{lambda_i - i - j + 1} * weight(i, j, lambda_i)`` over cells of ``lambda + delta_{2n}``."""
    parts = lam.padded(2 * n)
    total = 0
    for i, p in enumerate(parts, start=1):
        for j in range(1, p + 2 * n - i + 1):
            total += (-1) ** ((p - i - j + 1) % 2) * weight(i, j, p)
    return total


def b_via_delta(lam: Partition, n: int) -> int:
    """``b(lam)`` from the filling of ``lam + delta`` with ``delta = (2n-1, .., 1, 0)``."""
    if len(lam) > 2 * n:
        raise LengthExceeded(f"{lam} has more than 2n={2 * n} parts")
    parts = lam.padded(2 * n)
    first = _delta_cells_sum(lam, n, lambda i, j, p: p - i)
    second = sum(
        (-1) ** ((parts[i - 1] - parts[j - 1] + j - i) % 2) * (parts[i - 1] - i)
        for i in range(1, 2 * n + 1)
        for j in range(i + 1, 2 * n + 1)
    )
    return first - second


def b_conj_via_delta(lam: Partition, n: int) -> int:
    """``b(lam')`` for ``lam`` with empty 2-core, from pairwise sign sums."""
    if len(lam) > 2 * n:
        raise LengthExceeded(f"{lam} has more than 2n={2 * n} parts")
    if two_core(lam):
        raise NonEmptyTwoCore(f"{lam} has nonempty 2-core")
    parts = lam.padded(2 * n)
    s = sum(
        (-1) ** ((parts[i - 1] - parts[j - 1] + j - i) % 2) * (parts[j - 1] - j)
        for i in range(1, 2 * n + 1)
        for j in range(i + 1, 2 * n + 1)
    )
    return lam.size() // 2 - n * n - n + s


class Variant(str, Enum):
    ALL = "all"
    EVEN = "even"
    ODD = "odd"


def hook_poly(lam: Partition, variant: Variant | str = Variant.ALL) -> LaurentPoly:
    """``prod (1 - q^h)`` over all / even / odd hook lengths."""
    variant = Variant(variant)
    hm = hook_multisets(lam)
    hooks = {Variant.ALL: hm.all, Variant.EVEN: hm.even, Variant.ODD: hm.odd}[variant]
    result = LaurentPoly.constant(1)
    for h, mult in sorted(hooks.items()):
        result = result * LaurentPoly.one_minus(h) ** mult
    return result


def content_poly(lam: Partition, z_exponent: int, variant: Variant | str = Variant.ALL) -> LaurentPoly:
    """``prod (1 - z q^{j-i})`` at ``z = q^z_exponent``; even/odd select cells by parity of i+j."""
    variant = Variant(variant)
    exps: Counter = Counter()
    for i, j in lam.cells():
        even = (i + j) % 2 == 0
        if variant is Variant.ALL or (variant is Variant.EVEN) == even:
            exps[z_exponent + j - i] += 1
    result = LaurentPoly.constant(1)
    for e, mult in sorted(exps.items()):
        result = result * LaurentPoly.one_minus(e) ** mult
    return result


def _partitions_of(size: int, max_part: int | None, max_length: int | None) -> Iterator[Partition]:
    """Partitions of ``size`` in lexicographically decreasing order."""
    max_part = size if max_part is None else min(max_part, size)
    max_length = size if max_length is None else max_length

    def rec(remaining: int, cap: int, slots: int, prefix: list[int]):
        if remaining == 0:
            yield Partition(prefix)
            return
        if slots == 0:
            return
        for p in range(min(cap, remaining), 0, -1):
            if p * slots < remaining:
                break
            prefix.append(p)
            yield from rec(remaining - p, p, slots - 1, prefix)
            prefix.pop()

    yield from rec(size, max_part, max_length, [])


def enumerate_partitions(
    max_size: int,
    predicate: Callable[[Partition], bool] | None = None,
    max_part: int | None = None,
    max_length: int | None = None,
    min_size: int = 0,
) -> Iterator[Partition]:
    """All partitions with ``min_size <= |lam| <= max_size`` within the bounds.

    Order is graded lexicographic descending: by size ascending, then
    lexicographically decreasing within each size.
    """
    for size in range(min_size, max_size + 1):
        for lam in _partitions_of(size, max_part, max_length):
            if predicate is None or predicate(lam):
                yield lam


def empty_two_core(lam: Partition) -> bool:
    return not two_core(lam)
