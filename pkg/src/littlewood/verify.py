"""End-to-end verification of the Littlewood-type identities and the partition facts behind them.

Each identity has a runner that yields labelled checks ``(label, expected,
actual)``.  For the Schur-expansion identities ``expected`` is the sum side
(partition statistics and Schur polynomials only) and ``actual`` the product
or Koornwinder side, so the two never share a code path beyond the Schur
expansion itself.  Results are gathered in instance order, which makes
reports byte-identical between serial and parallel runs.
"""
from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable, Iterator

from . import koornwinder, productsides, torus
from .errors import BudgetExceeded, NonEmptyTwoCore, UnknownIdentity
from .exactalg import LaurentPoly, QSeries, RationalFunction, XSeries, to_rational
from .partitions import (
    CoreMethod,
    Partition,
    Variant,
    b_conj_via_delta,
    b_statistic,
    b_via_delta,
    content_poly,
    enumerate_partitions,
    has_empty_two_core,
    hook_multisets,
    hook_poly,
    two_core,
)
from .pfaffian import closed_form_int1, closed_form_int2, pf_formula_P1, pf_formula_P2
from .schur import SchurExpansion, schur_expand

IDENTITIES = (
    "L1", "L2", "COR", "B1", "B2",
    "CLASSICAL_1", "CLASSICAL_2", "CLASSICAL_3", "KAWANAKA",
    "P1_EVAL", "P2_EVAL", "VANISHING",
    "LEMMA_21", "LEMMA_22", "LEMMA_23", "CONJ_SYM",
    "MLIMIT", "ZNORM", "GUSTAFSON", "PROP_COEF",
)

REPORT_SCHEMA = "littlewood-report/1"


@dataclass(frozen=True)
class Budget:
    max_n: int = 4
    max_m: int = 2
    max_degree: int = 12
    max_order: int = 20
    max_size: int = 12

    def __post_init__(self):
        for name, value in asdict(self).items():
            if value < 1:
                raise ValueError(f"budget {name} must be positive, got {value}")


@dataclass(frozen=True)
class IdentityInstance:
    """One verification task.  Unused parameters stay ``None``."""

    identity: str
    n: int | None = None
    m: int | None = None
    degree: int | None = None
    order: int | None = None
    max_size: int | None = None
    family: str | None = None

    def __post_init__(self):
        if self.identity not in IDENTITIES:
            raise UnknownIdentity(self.identity)

    def parameters(self) -> dict:
        return {k: v for k, v in asdict(self).items() if k != "identity" and v is not None}

    def check_budget(self, budget: Budget) -> None:
        limits = (
            ("n", self.n, budget.max_n),
            ("m", self.m, budget.max_m),
            ("degree", self.degree, budget.max_degree),
            ("order", self.order, budget.max_order),
            ("max_size", self.max_size, budget.max_size),
        )
        for name, value, cap in limits:
            if value is not None and value > cap:
                raise BudgetExceeded(f"{self.identity}: {name}={value} exceeds budget {cap}")

    def label(self) -> str:
        params = ", ".join(f"{k}={v}" for k, v in self.parameters().items())
        return f"{self.identity}({params})"


@dataclass
class Mismatch:
    at: str
    expected: str
    actual: str


@dataclass
class InstanceResult:
    instance: IdentityInstance
    passed: bool
    checked: int
    mismatch: Mismatch | None = None
    seconds: float | None = None

    def to_json(self) -> dict:
        out = {
            "identity": self.instance.identity,
            "parameters": self.instance.parameters(),
            "status": "pass" if self.passed else "fail",
            "checked": self.checked,
            "mismatch": asdict(self.mismatch) if self.mismatch else None,
        }
        if self.seconds is not None:
            out["seconds"] = round(self.seconds, 3)
        return out


@dataclass
class VerificationReport:
    results: list[InstanceResult] = field(default_factory=list)
    config: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def groups(self) -> list[str]:
        seen: list[str] = []
        for r in self.results:
            if r.instance.identity not in seen:
                seen.append(r.instance.identity)
        return seen

    def to_json(self) -> dict:
        failed = sum(1 for r in self.results if not r.passed)
        return {
            "schema": REPORT_SCHEMA,
            "config": self.config,
            "summary": {
                "instances": len(self.results),
                "groups": len(self.groups()),
                "passed": len(self.results) - failed,
                "failed": failed,
            },
            "results": [r.to_json() for r in self.results],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"

    def to_markdown(self) -> str:
        timed = any(r.seconds is not None for r in self.results)
        head = "| identity | parameters | status | checks | first mismatch |"
        rule = "|---|---|---|---|---|"
        if timed:
            head += " seconds |"
            rule += "---|"
        lines = ["# Verification report", "", head, rule]
        for r in self.results:
            params = ", ".join(f"{k}={v}" for k, v in r.instance.parameters().items())
            miss = ""
            if r.mismatch:
                miss = f"{r.mismatch.at}: expected {r.mismatch.expected}, got {r.mismatch.actual}"
            row = f"| {r.instance.identity} | {params} | {'pass' if r.passed else 'FAIL'} | {r.checked} | {miss} |"
            if timed:
                row += f" {r.seconds:.2f} |"
            lines.append(row)
        failed = sum(1 for r in self.results if not r.passed)
        lines += ["", f"{len(self.results) - failed} of {len(self.results)} instances passed."]
        return "\n".join(lines) + "\n"


# --- sum sides ---------------------------------------------------------------

Check = tuple[str, object, object]


def _q(k: int) -> RationalFunction:
    return RationalFunction.q(k)


def hook_ratio(lam: Partition) -> RationalFunction:
    """``prod_{h odd} (1 - q^h) / prod_{h even} (1 - q^h)``."""
    return RationalFunction(hook_poly(lam, Variant.ODD), hook_poly(lam, Variant.EVEN))


def bounded_content_ratio(lam: Partition, m: int) -> RationalFunction:
    """``C^e(q^{-2m}) H^o / (C^o(q^{-2m}) H^e)``; zero when ``lam_1 > 2m``."""
    c = RationalFunction(content_poly(lam, -2 * m, Variant.EVEN), content_poly(lam, -2 * m, Variant.ODD))
    return c * hook_ratio(lam)


def sum_coefficient(identity: str, lam: Partition, m: int | None = None):
    """Coefficient of ``s_lam`` on the sum side (a RationalFunction or Rational)."""
    if identity in ("L1", "L2", "COR", "B1", "B2") and two_core(lam):
        return 0
    if identity == "L1":
        return _q(b_statistic(lam)) * hook_ratio(lam)
    if identity == "L2":
        return _q(b_statistic(lam.conjugate())) * hook_ratio(lam)
    if identity == "COR":
        hm = hook_multisets(lam)
        value = to_rational(1)
        for h, k in hm.odd.items():
            value *= h**k
        for h, k in hm.even.items():
            value /= h**k
        return value
    if identity == "B1":
        return _q(b_statistic(lam.conjugate())) * bounded_content_ratio(lam, m)
    if identity == "B2":
        b, bc = b_statistic(lam), b_statistic(lam.conjugate())
        head = (_q(2 * bc - b) + _q(m + b)) / RationalFunction(LaurentPoly({0: 1, m: 1}))
        return head * bounded_content_ratio(lam, m)
    if identity == "CLASSICAL_1":
        return 1
    if identity == "CLASSICAL_2":
        return 1 if lam.is_even() else 0
    if identity == "CLASSICAL_3":
        return 1 if lam.conjugate().is_even() else 0
    if identity == "KAWANAKA":
        value = RationalFunction(1)
        for h, k in hook_multisets(lam).all.items():
            value = value * RationalFunction(LaurentPoly({0: 1, h: 1}), LaurentPoly.one_minus(h)) ** k
        return value
    raise UnknownIdentity(identity)


def _as_coefficient(value, order: int | None):
    if isinstance(value, RationalFunction):
        return value.to_series(order) if order is not None else value
    return to_rational(value)


def lhs_sum(identity: str, n: int, degree: int, order: int | None = None, m: int | None = None) -> SchurExpansion:
    """Sum side as a Schur expansion over ``l(lam) <= n``, ``|lam| <= degree``.

    For the bounded identities the sum is further restricted to ``lam_1 <= 2m``.
    """
    max_part = 2 * m if identity in ("B1", "B2") else None
    coeffs = {}
    for lam in enumerate_partitions(degree, max_length=n, max_part=max_part):
        c = sum_coefficient(identity, lam, m)
        if c:
            c = _as_coefficient(c, order)
            if c:
                coeffs[lam] = c
    return SchurExpansion(n, coeffs)


def rhs_product(identity: str, n: int, degree: int, order: int | None = None) -> XSeries:
    """Product side expanded to x-degree ``degree`` (and q-order ``order``)."""
    if identity == "L1":
        return productsides.littlewood_q_product(n, degree, order, 0)
    if identity == "L2":
        return productsides.littlewood_q_product(n, degree, order, 1)
    if identity == "COR":
        return productsides.sqrt_product(n, degree)
    if identity == "CLASSICAL_1":
        return productsides.single_geometric(n, degree, 1) * productsides.cross_geometric(n, degree)
    if identity == "CLASSICAL_2":
        return productsides.single_geometric(n, degree, 2) * productsides.cross_geometric(n, degree)
    if identity == "CLASSICAL_3":
        return productsides.cross_geometric(n, degree)
    if identity == "KAWANAKA":
        return productsides.kawanaka_product(n, degree, order)
    raise UnknownIdentity(f"{identity} has no product side")


def _equal(a, b) -> bool:
    if isinstance(a, QSeries) or isinstance(b, QSeries):
        if not isinstance(a, QSeries):
            a, b = b, a
        return a == b
    return a == b


def _compare_expansions(expected: SchurExpansion, actual: SchurExpansion, tag: str = "") -> Iterator[Check]:
    keys = set(expected.coefficients) | set(actual.coefficients)
    for lam in sorted(keys, key=lambda p: (p.size(), tuple(-x for x in p))):
        yield f"{tag}[s{lam}]", expected[lam], actual[lam]


# --- runners -----------------------------------------------------------------


def _run_schur_identity(inst: IdentityInstance) -> Iterator[Check]:
    lhs = lhs_sum(inst.identity, inst.n, inst.degree, inst.order)
    rhs = schur_expand(rhs_product(inst.identity, inst.n, inst.degree, inst.order))
    yield from _compare_expansions(lhs, rhs)
    if inst.identity in ("L1", "L2"):
        yield from _q_zero_degeneration(inst.identity, inst.max_size or inst.degree)


def _q_zero_degeneration(identity: str, max_size: int) -> Iterator[Check]:
    """At ``q = 0`` the coefficients become the even-row (L1) or even-column (L2) indicator."""
    for lam in enumerate_partitions(max_size):
        c = sum_coefficient(identity, lam)
        at_zero = c.evaluate(0) if isinstance(c, RationalFunction) else to_rational(c)
        target = lam if identity == "L1" else lam.conjugate()
        yield f"q=0 at {lam}", to_rational(1 if target.is_even() else 0), at_zero


def _run_bounded(inst: IdentityInstance) -> Iterator[Check]:
    family = "K_halfquarters" if inst.identity == "B1" else "K_1m1qmq"
    lhs = lhs_sum(inst.identity, inst.n, 2 * inst.m * inst.n, inst.order, m=inst.m)
    rhs = koornwinder.bounded_rhs(inst.m, inst.n, family, inst.order)
    yield from _compare_expansions(lhs, rhs)


def _empty_core(max_size: int, max_length: int | None = None) -> Iterator[Partition]:
    return enumerate_partitions(max_size, predicate=lambda p: not two_core(p), max_length=max_length)


def _run_pf_eval(inst: IdentityInstance) -> Iterator[Check]:
    pf, closed = (pf_formula_P1, closed_form_int1) if inst.identity == "P1_EVAL" else (pf_formula_P2, closed_form_int2)
    for n in range(1, inst.n + 1):
        for lam in _empty_core(inst.max_size, 2 * n):
            yield f"n={n} {lam}", closed(lam, n), pf(lam, n)


def _run_vanishing(inst: IdentityInstance) -> Iterator[Check]:
    order = inst.order
    for n in range(1, inst.n + 1):
        for family, closed in (("I_qq", closed_form_int1), ("I_1q2", closed_form_int2)):
            spec = torus.DensitySpec(n, family, order)
            for lam in enumerate_partitions(inst.max_size, max_length=2 * n):
                value = torus.integral_I(lam, spec).value
                expected = QSeries.zero(order) if two_core(lam) else closed(lam, n).to_series(order)
                yield f"{family} n={n} {lam}", expected, value


def _run_lemma21(inst: IdentityInstance) -> Iterator[Check]:
    for lam in enumerate_partitions(inst.max_size):
        truth = has_empty_two_core(lam, CoreMethod.ABACUS)
        yield f"hook count {lam}", truth, has_empty_two_core(lam, CoreMethod.HOOK_COUNT)
        smallest = (len(lam) + 1) // 2
        for m in range(smallest, smallest + 3):
            yield f"beta parity m={m} {lam}", truth, has_empty_two_core(lam, CoreMethod.BETA_PARITY, m)


def _run_lemma22(inst: IdentityInstance) -> Iterator[Check]:
    for lam in _empty_core(inst.max_size):
        b = b_statistic(lam)
        yield f"b >= 0 at {lam}", True, b >= 0
        yield f"b = 0 iff even at {lam}", lam.is_even(), b == 0


def _run_lemma23(inst: IdentityInstance) -> Iterator[Check]:
    for n in range(1, inst.n + 1):
        for lam in enumerate_partitions(inst.max_size, max_length=2 * n):
            yield f"b n={n} {lam}", b_statistic(lam), b_via_delta(lam, n)
            if not two_core(lam):
                yield f"b' n={n} {lam}", b_statistic(lam.conjugate()), b_conj_via_delta(lam, n)


def conjugation_sides(lam: Partition, m: int) -> tuple[RationalFunction, RationalFunction]:
    """Both sides of the conjugation identity for the bounded summand."""
    lc = lam.conjugate()
    left = RationalFunction(content_poly(lc, 2 * m, Variant.EVEN), content_poly(lc, 2 * m, Variant.ODD))
    left = _q(b_statistic(lam)) * left * hook_ratio(lc)
    right = _q(b_statistic(lc)) * bounded_content_ratio(lam, m)
    return left, right


def _run_conj_sym(inst: IdentityInstance) -> Iterator[Check]:
    for m in range(0, inst.m + 1):
        for lam in _empty_core(inst.max_size):
            left, right = conjugation_sides(lam, m)
            yield f"m={m} {lam}", left, right


def _run_mlimit(inst: IdentityInstance) -> Iterator[Check]:
    result = koornwinder.limit_stabilization(inst.n, inst.family, inst.degree, inst.order)
    yield "stabilizing m", koornwinder.limit_threshold(inst.family, inst.degree, inst.order), result.stable_from
    for e in sorted(set(result.product.terms) | set(result.series.terms)):
        zero = QSeries.zero(inst.order)
        yield f"[x^{e}]", result.product.terms.get(e, zero), result.series.terms.get(e, zero)


def _run_znorm(inst: IdentityInstance) -> Iterator[Check]:
    for n in range(1, inst.n + 1):
        for family in torus.Family:
            spec = torus.DensitySpec(n, family, inst.order)
            yield f"{family.value} n={n}", torus.z_n_closed(spec), torus.z_n_computed(spec)


def _run_gustafson(inst: IdentityInstance) -> Iterator[Check]:
    for n in range(1, inst.n + 1):
        for family in (torus.Family.K_HALFQUARTERS, torus.Family.K_1M1QMQ):
            spec = torus.DensitySpec(n, family, inst.order)
            one = XSeries.constant(n, 1)
            yield f"{family.value} n={n}", torus.gustafson_norm(n, family, inst.order), torus.inner_product(one, one, spec)


def _run_prop_coef(inst: IdentityInstance) -> Iterator[Check]:
    order = inst.order
    for family, i_family in (("K_halfquarters", "I_qq"), ("K_1m1qmq", "I_1q2")):
        for m in range(1, inst.m + 1):
            spec = torus.DensitySpec(m, i_family, order)
            for n in range(1, inst.n + 1):
                expansion = koornwinder.bounded_rhs(m, n, family, order)
                for lam in enumerate_partitions(2 * m * n, max_part=2 * m, max_length=n):
                    value = torus.integral_I(lam.conjugate(), spec).value
                    if lam.size() % 2:
                        value = -value
                    yield f"{family} m={m} n={n} {lam}", value, expansion[lam] or QSeries.zero(order)


RUNNERS: dict[str, Callable[[IdentityInstance], Iterable[Check]]] = {
    "L1": _run_schur_identity,
    "L2": _run_schur_identity,
    "COR": _run_schur_identity,
    "CLASSICAL_1": _run_schur_identity,
    "CLASSICAL_2": _run_schur_identity,
    "CLASSICAL_3": _run_schur_identity,
    "KAWANAKA": _run_schur_identity,
    "B1": _run_bounded,
    "B2": _run_bounded,
    "P1_EVAL": _run_pf_eval,
    "P2_EVAL": _run_pf_eval,
    "VANISHING": _run_vanishing,
    "LEMMA_21": _run_lemma21,
    "LEMMA_22": _run_lemma22,
    "LEMMA_23": _run_lemma23,
    "CONJ_SYM": _run_conj_sym,
    "MLIMIT": _run_mlimit,
    "ZNORM": _run_znorm,
    "GUSTAFSON": _run_gustafson,
    "PROP_COEF": _run_prop_coef,
}

# parameters each identity needs
REQUIRED = {
    "L1": ("n", "degree", "order"),
    "L2": ("n", "degree", "order"),
    "COR": ("n", "degree"),
    "CLASSICAL_1": ("n", "degree"),
    "CLASSICAL_2": ("n", "degree"),
    "CLASSICAL_3": ("n", "degree"),
    "KAWANAKA": ("n", "degree", "order"),
    "B1": ("n", "m", "order"),
    "B2": ("n", "m", "order"),
    "P1_EVAL": ("n", "max_size"),
    "P2_EVAL": ("n", "max_size"),
    "VANISHING": ("n", "max_size", "order"),
    "LEMMA_21": ("max_size",),
    "LEMMA_22": ("max_size",),
    "LEMMA_23": ("n", "max_size"),
    "CONJ_SYM": ("m", "max_size"),
    "MLIMIT": ("n", "degree", "order", "family"),
    "ZNORM": ("n", "order"),
    "GUSTAFSON": ("n", "order"),
    "PROP_COEF": ("n", "m", "order"),
}


def verify_identity(inst: IdentityInstance, timings: bool = False) -> InstanceResult:
    """Run every check of one instance; a mismatch is recorded, not raised."""
    missing = [p for p in REQUIRED[inst.identity] if getattr(inst, p) is None]
    if missing:
        raise ValueError(f"{inst.identity} needs parameters {missing}")
    start = time.perf_counter()
    checked = 0
    mismatch = None
    for label, expected, actual in RUNNERS[inst.identity](inst):
        checked += 1
        if not _equal(expected, actual):
            mismatch = Mismatch(label, str(expected), str(actual))
            break
    seconds = time.perf_counter() - start if timings else None
    return InstanceResult(inst, mismatch is None, checked, mismatch, seconds)


def default_suite(budget: Budget, identities: Iterable[str] | None = None) -> list[IdentityInstance]:
    """Desk-scale instances for every identity, clipped to the budget."""
    b = budget
    size = b.max_size
    deg = min(b.max_degree, size)
    order = min(b.max_order, 16)
    small_order = min(b.max_order, 12)
    suite: list[IdentityInstance] = []
    for ident in ("L1", "L2"):
        suite += [IdentityInstance(ident, n=n, degree=deg, order=order, max_size=min(size, 10))
                  for n in range(min(2, b.max_n), b.max_n + 1)]
    suite.append(IdentityInstance("COR", n=b.max_n, degree=deg))
    for m in range(1, b.max_m + 1):
        for n in range(1, min(2, b.max_n) + 1):
            suite.append(IdentityInstance("B1", n=n, m=m, order=small_order))
            suite.append(IdentityInstance("B2", n=n, m=m, order=small_order))
    for ident in ("CLASSICAL_1", "CLASSICAL_2", "CLASSICAL_3"):
        suite.append(IdentityInstance(ident, n=min(3, b.max_n), degree=min(8, deg)))
    suite.append(IdentityInstance("KAWANAKA", n=min(3, b.max_n), degree=min(8, deg), order=small_order))
    suite.append(IdentityInstance("P1_EVAL", n=min(3, b.max_n), max_size=min(10, size)))
    suite.append(IdentityInstance("P2_EVAL", n=min(3, b.max_n), max_size=min(10, size)))
    suite.append(IdentityInstance("VANISHING", n=min(2, b.max_n), max_size=min(8, size), order=small_order))
    suite.append(IdentityInstance("LEMMA_21", max_size=size))
    suite.append(IdentityInstance("LEMMA_22", max_size=size))
    suite.append(IdentityInstance("LEMMA_23", n=min(6, b.max_n), max_size=size))
    suite.append(IdentityInstance("CONJ_SYM", m=b.max_m, max_size=min(10, size)))
    for family in ("K_halfquarters", "K_1m1qmq"):
        for n in range(1, min(2, b.max_n) + 1):
            suite.append(IdentityInstance("MLIMIT", n=n, degree=min(4, deg), order=min(b.max_order, 6), family=family))
    suite.append(IdentityInstance("ZNORM", n=min(2, b.max_n), order=small_order))
    suite.append(IdentityInstance("GUSTAFSON", n=min(2, b.max_n), order=small_order))
    suite.append(IdentityInstance("PROP_COEF", n=min(2, b.max_n), m=min(2, b.max_m), order=small_order))
    if identities is not None:
        wanted = set(identities)
        unknown = wanted - set(IDENTITIES)
        if unknown:
            raise UnknownIdentity(", ".join(sorted(unknown)))
        suite = [s for s in suite if s.identity in wanted]
    return suite


def _worker(args: tuple[IdentityInstance, bool, str | None]) -> InstanceResult:
    inst, timings, cache_dir = args
    if cache_dir is not None:
        koornwinder.set_cache_dir(cache_dir)
    return verify_identity(inst, timings)


def run_suite(
    instances: list[IdentityInstance],
    budget: Budget | None = None,
    jobs: int = 1,
    timings: bool = False,
    config: dict | None = None,
) -> VerificationReport:
    """Verify every instance (in parallel when ``jobs > 1``); order is preserved."""
    budget = budget or Budget()
    for inst in instances:
        inst.check_budget(budget)
    cache_dir = koornwinder.get_cache().directory
    args = [(inst, timings, str(cache_dir) if cache_dir else None) for inst in instances]
    if jobs > 1 and len(instances) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_worker, args))
    else:
        results = [verify_identity(inst, timings) for inst in instances]
    return VerificationReport(results, dict(config or {}))


__all__ = [
    "Budget",
    "IDENTITIES",
    "IdentityInstance",
    "InstanceResult",
    "Mismatch",
    "NonEmptyTwoCore",
    "VerificationReport",
    "default_suite",
    "lhs_sum",
    "rhs_product",
    "run_suite",
    "sum_coefficient",
    "verify_identity",
]
