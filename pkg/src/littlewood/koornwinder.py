"""Koornwinder polynomials at ``q = t`` for the two supported parameter choices.

``K_lam`` is built by solving ``<K_lam, m_nu> = 0`` for every ``nu < lam`` in
the extended dominance order, with coefficients in the truncated series ring.
Pivots must be units (nonzero at ``q = 0``); at ``q = 0`` the inner product
is a classical Weyl-type inner product, so the Gram matrix is invertible there.
"""
from __future__ import annotations

import json
import os
import tempfile
import threading
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations, product
from pathlib import Path

from .errors import GramSingular, LengthExceeded, NegativeExponentRemains, NoStabilization
from .exactalg import QSeries, XSeries
from .partitions import Partition, enumerate_partitions
from .productsides import littlewood_q_product
from .schur import SchurExpansion, schur_expand
from .torus import DensitySpec, Family, as_family, inner_product

CACHE_VERSION = 1
CACHE_ENV = "LITTLEWOOD_CACHE_DIR"


def dominance_leq(mu, lam) -> bool:
    """Extended dominance: every partial sum of ``mu`` is at most that of ``lam``."""
    mu, lam = Partition(mu), Partition(lam)
    a = b = 0
    for i in range(max(len(mu), len(lam))):
        a += mu.part(i + 1)
        b += lam.part(i + 1)
        if a > b:
            return False
    return True


@lru_cache(maxsize=None)
def _orbit(mu: Partition, n: int) -> frozenset[tuple[int, ...]]:
    base = mu.padded(n)
    out = set()
    for perm in set(permutations(base)):
        nonzero = [i for i, a in enumerate(perm) if a]
        for signs in product((1, -1), repeat=len(nonzero)):
            e = list(perm)
            for i, s in zip(nonzero, signs):
                e[i] *= s
            out.add(tuple(e))
    return frozenset(out)


def bc_orbit_sum(mu, n: int) -> XSeries:
    """``m_mu^{BC}``: every exponent in the signed-permutation orbit once."""
    mu = Partition(mu)
    if len(mu) > n:
        raise LengthExceeded(f"{mu} has more than {n} parts")
    return XSeries(n, {e: 1 for e in _orbit(mu, n)})


def dominated_basis(lam: Partition, n: int) -> list[Partition]:
    """All ``mu < lam`` (strictly) with at most ``n`` parts, graded lex order."""
    lam = Partition(lam)
    top = lam[0] if lam else 0
    return [
        mu
        for mu in enumerate_partitions(lam.size(), max_part=top, max_length=n)
        if mu != lam and dominance_leq(mu, lam)
    ]


@dataclass
class KoornwinderPoly:
    lam: Partition
    n: int
    family: Family
    order: int
    coefficients: dict[Partition, QSeries] = field(default_factory=dict)

    def __getitem__(self, mu) -> QSeries:
        mu = Partition(mu)
        if mu == self.lam:
            return QSeries.one(self.order)
        return self.coefficients.get(mu, QSeries.zero(self.order))

    def to_xseries(self) -> XSeries:
        total = bc_orbit_sum(self.lam, self.n).scale(QSeries.one(self.order))
        for mu, c in self.coefficients.items():
            if c:
                total = total + bc_orbit_sum(mu, self.n).scale(c)
        return total

    def to_json(self) -> dict:
        return {
            "version": CACHE_VERSION,
            "lambda": list(self.lam),
            "n": self.n,
            "family": self.family.value,
            "order": self.order,
            "coefficients": [
                {"mu": list(mu), "value": c.to_json()} for mu, c in sorted(self.coefficients.items())
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> KoornwinderPoly:
        coeffs = {Partition(r["mu"]): QSeries.from_json(r["value"]) for r in data["coefficients"]}
        return cls(Partition(data["lambda"]), data["n"], Family(data["family"]), data["order"], coeffs)


class KoornwinderCache:
    """In-memory memo backed by an optional directory of versioned JSON records."""

    def __init__(self, directory: str | os.PathLike | None = None):
        self._memory: dict[tuple, KoornwinderPoly] = {}
        self._lock = threading.Lock()
        self.directory = Path(directory) if directory else None

    @staticmethod
    def key(lam: Partition, n: int, family: Family, order: int) -> tuple:
        return (tuple(lam), n, family.value, order)

    def _path(self, key: tuple) -> Path:
        lam, n, family, order = key
        name = f"K_v{CACHE_VERSION}_{family}_n{n}_D{order}_{'-'.join(map(str, lam)) or '0'}.json"
        return self.directory / name

    def get(self, key: tuple) -> KoornwinderPoly | None:
        hit = self._memory.get(key)
        if hit is not None or self.directory is None:
            return hit
        path = self._path(key)
        if not path.exists():
            return None
        try:
            data = json.loads(path.read_text())
        except (OSError, ValueError):
            return None
        if data.get("version") != CACHE_VERSION:
            return None
        poly = KoornwinderPoly.from_json(data)
        with self._lock:
            self._memory[key] = poly
        return poly

    def put(self, key: tuple, poly: KoornwinderPoly) -> None:
        with self._lock:
            self._memory[key] = poly
        if self.directory is None:
            return
        self.directory.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            json.dump(poly.to_json(), fh, sort_keys=True)
        os.replace(tmp, self._path(key))

    def clear(self, disk: bool = False) -> int:
        """Drop the memo; with ``disk`` also delete cached records.  Returns files removed."""
        with self._lock:
            self._memory.clear()
        removed = 0
        if disk and self.directory is not None and self.directory.exists():
            for path in self.directory.glob("K_v*.json"):
                path.unlink()
                removed += 1
        return removed


_cache = KoornwinderCache(os.environ.get(CACHE_ENV) or None)


def get_cache() -> KoornwinderCache:
    return _cache


def set_cache_dir(directory: str | os.PathLike | None) -> KoornwinderCache:
    global _cache
    _cache = KoornwinderCache(directory)
    return _cache


@lru_cache(maxsize=None)
def _orbit_inner(mu: Partition, nu: Partition, spec: DensitySpec) -> QSeries:
    return inner_product(bc_orbit_sum(mu, spec.n), bc_orbit_sum(nu, spec.n), spec)


def _solve(matrix: list[list[QSeries]], rhs: list[QSeries]) -> list[QSeries]:
    """Gauss-Jordan elimination over truncated series with unit pivots.

    Rows are kept sparse: far-apart orbit sums are orthogonal because the
    density has bounded x-support at fixed q-order, so most entries vanish.
    """
    size = len(rhs)
    rows = []
    for row, b in zip(matrix, rhs):
        r = {j: v for j, v in enumerate(row) if v}
        if b:
            r[size] = b
        rows.append(r)
    done: list[dict] = []
    pending = rows
    for col in range(size):
        idx = next((k for k, r in enumerate(pending) if col in r and r[col].is_unit()), None)
        if idx is None:
            raise GramSingular(f"no unit pivot in column {col}: Gram matrix singular at q=0")
        pivot = pending.pop(idx)
        inv = pivot[col].inverse()
        pivot = {j: v * inv for j, v in pivot.items()}
        pivot[col] = QSeries.one(inv.order)
        for group in (pending, done):
            for r in group:
                f = r.get(col)
                if f is None:
                    continue
                for j, v in pivot.items():
                    w = r.get(j)
                    w = -(f * v) if w is None else w - f * v
                    if w:
                        r[j] = w
                    else:
                        r.pop(j, None)
                r.pop(col, None)
        done.append(pivot)
    order = rhs[0].order if rhs else 0
    solution = [QSeries.zero(order)] * size
    for r in done:
        col = min(j for j in r if j < size)
        solution[col] = r.get(size, QSeries.zero(order))
    return solution


def koornwinder_poly(lam, n: int, family, order: int) -> KoornwinderPoly:
    """``K_lam`` in ``n`` variables with coefficients exact to ``O(q^{order+1})``."""
    lam = Partition(lam)
    family = as_family(family)
    if len(lam) > n:
        raise LengthExceeded(f"{lam} has more than {n} parts")
    key = KoornwinderCache.key(lam, n, family, order)
    hit = _cache.get(key)
    if hit is not None:
        return hit
    spec = DensitySpec(n, family, order)
    basis = dominated_basis(lam, n)
    gram = [[_orbit_inner(mu, nu, spec) for mu in basis] for nu in basis]
    rhs = [-_orbit_inner(lam, nu, spec) for nu in basis]
    solution = _solve(gram, rhs) if basis else []
    poly = KoornwinderPoly(lam, n, family, order, dict(zip(basis, solution)))
    _cache.put(key, poly)
    return poly


def rectangle(m: int, n: int) -> Partition:
    return Partition((m,) * n)


def bounded_polynomial(m: int, n: int, family, order: int) -> XSeries:
    """``(x_1 .. x_n)^m K_{(m^n)}`` as a polynomial with QSeries coefficients."""
    poly = koornwinder_poly(rectangle(m, n), n, family, order).to_xseries().shift((m,) * n)
    if not poly.is_polynomial():
        raise NegativeExponentRemains(f"negative exponent after multiplying by (x_1..x_n)^{m}")
    return poly


def bounded_rhs(m: int, n: int, family, order: int) -> SchurExpansion:
    """Schur expansion of ``(x_1 .. x_n)^m K_{(m^n)}``."""
    if m < 0 or n < 0:
        raise ValueError("m and n must be nonnegative")
    if n == 0 or m == 0:
        return SchurExpansion(n, {Partition(): QSeries.one(order)})
    return schur_expand(bounded_polynomial(m, n, family, order))


@dataclass
class LimitResult:
    n: int
    family: Family
    degree: int
    order: int
    stable_from: int
    series: XSeries
    product: XSeries
    history: list[XSeries] = field(default_factory=list, repr=False)

    @property
    def agrees(self) -> bool:
        return self.series == self.product


def limit_threshold(family, degree: int, order: int) -> int:
    """Smallest ``m`` from which every coefficient of x-degree ``<= d`` is final to ``O(q^{D+1})``.

    Only even degrees occur.  For ``K_halfquarters`` the ``m``-dependent
    correction in degree ``d`` starts at ``q^{2m - d + 1}``; for ``K_1m1qmq``
    the factor ``q^{m + b} / (1 + q^m)`` of the bounded summand makes it
    start at ``q^{m - d/2}``.
    """
    family = as_family(family)
    d = degree - degree % 2
    if d <= 0:
        return 0
    if family.shift == 0:
        return (order + d + 1) // 2
    return order + d // 2 + 1


def limit_stabilization(n: int, family, degree: int, order: int, max_m: int | None = None) -> LimitResult:
    """First ``m`` after which ``(x_1..x_n)^m K_{(m^n)}`` stops changing in low degree.

    The low-degree part is compared between consecutive values of ``m``;
    the stable value is returned together with the product side of the limit.
    """
    family = as_family(family)
    if max_m is None:
        max_m = limit_threshold(family, degree, order) + 3
    product_side = littlewood_q_product(n, degree, order, family.shift)
    history: list[XSeries] = []
    for m in range(0, max_m + 1):
        if m == 0:
            current = XSeries.constant(n, QSeries.one(order), degree)
        else:
            current = bounded_polynomial(m, n, family, order).truncate(degree)
        history.append(current)
        if m >= 1 and current == history[-2]:
            return LimitResult(n, family, degree, order, m - 1, current, product_side, history)
    raise NoStabilization(f"no two consecutive m <= {max_m} agree to degree {degree}")
