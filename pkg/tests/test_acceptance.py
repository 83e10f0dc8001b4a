"""Acceptance criteria 1 to 11, each at its stated scale and tolerance.

Every test records one pass/fail line which the terminal summary prints
after the run (see ``conftest.py``).
"""
import time
from contextlib import contextmanager
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

import conftest
from littlewood import koornwinder
from littlewood.exactalg import QSeries, Rational, RationalFunction
from littlewood.koornwinder import bounded_polynomial, limit_stabilization, limit_threshold
from littlewood.partitions import enumerate_partitions
from littlewood.pfaffian import determinant, pfaffian
from littlewood.productsides import littlewood_q_product
from littlewood.schur import schur
from littlewood.torus import Family
from littlewood.verify import IdentityInstance, verify_identity

from oracles import alternant, det_leibniz, pfaffian_by_matchings


@pytest.fixture(scope="module", autouse=True)
def private_cache(tmp_path_factory):
    previous = koornwinder.get_cache()
    koornwinder.set_cache_dir(tmp_path_factory.mktemp("kcache"))
    yield
    koornwinder._cache = previous


@contextmanager
def criterion(number, description):
    start = time.perf_counter()
    state = {"detail": ""}
    try:
        yield state
    except BaseException:
        conftest.ACCEPTANCE_LINES[number] = f"criterion {number:>2}: FAIL  {description}"
        raise
    seconds = time.perf_counter() - start
    detail = f" [{state['detail']}]" if state["detail"] else ""
    conftest.ACCEPTANCE_LINES[number] = f"criterion {number:>2}: PASS  {description}{detail} ({seconds:.1f}s)"


def run_all(instances):
    checks = 0
    for inst in instances:
        res = verify_identity(inst)
        assert res.passed, f"{inst.label()}: {res.mismatch}"
        checks += res.checked
    return checks


def test_criterion_01_littlewood_q_identities():
    with criterion(1, "L1/L2 Schur coefficients, n=2..4, d=10, D=16") as c:
        start = time.perf_counter()
        checks = run_all(
            IdentityInstance(ident, n=n, degree=10, order=16, max_size=10)
            for ident in ("L1", "L2")
            for n in (2, 3, 4)
        )
        assert time.perf_counter() - start < 300
        c["detail"] = f"{checks} checks"


def test_criterion_02_square_root_identity():
    with criterion(2, "square-root identity, exact rationals, n<=4, d=12") as c:
        c["detail"] = f"{run_all(IdentityInstance('COR', n=n, degree=12) for n in range(1, 5))} checks"


def test_criterion_03_pfaffian_evaluations():
    with criterion(3, "Pfaffian formulas equal closed forms, |lam|<=10, n<=3") as c:
        c["detail"] = f"{run_all(IdentityInstance(i, n=3, max_size=10) for i in ('P1_EVAL', 'P2_EVAL'))} checks"


def test_criterion_04_vanishing_and_evaluation():
    with criterion(4, "torus integrals vanish or match closed forms, |lam|<=8, n<=2, D=12") as c:
        c["detail"] = f"{run_all([IdentityInstance('VANISHING', n=2, max_size=8, order=12)])} checks"


def test_criterion_05_norms():
    with criterion(5, "Z_n and Gustafson norm closed forms, n<=2, D=12") as c:
        checks = run_all([IdentityInstance("ZNORM", n=2, order=12), IdentityInstance("GUSTAFSON", n=2, order=12)])
        c["detail"] = f"{checks} checks"


def test_criterion_06_bounded_identities():
    with criterion(6, "bounded identities against Gram-Schmidt, (m,n) in {1,2}^2, D=12") as c:
        checks = run_all(
            IdentityInstance(ident, n=n, m=m, order=12)
            for ident in ("B1", "B2")
            for (m, n) in ((1, 1), (2, 1), (1, 2), (2, 2))
        )
        got = koornwinder.bounded_rhs(1, 2, "K_halfquarters", 12)[(1, 1)]
        q = RationalFunction.q()
        assert got == (q * (1 - q) / (1 - q**3)).to_series(12)
        c["detail"] = f"{checks + 1} checks"


LIMIT_CASES = [(n, fam, d) for n in (1, 2) for fam in (Family.K_HALFQUARTERS, Family.K_1M1QMQ) for d in (2, 4, 6)]


def test_criterion_07_limit():
    with criterion(7, "m->infinity limit equals L1/L2 products, n<=2, d<=6, D=10") as c:
        thresholds = []
        for n, fam, d in LIMIT_CASES:
            res = limit_stabilization(n, fam, d, 10)
            assert res.stable_from == limit_threshold(fam, d, 10)
            assert res.series == littlewood_q_product(n, d, 10, fam.shift)
            thresholds.append(res.stable_from)
        c["detail"] = f"stable from m={min(thresholds)}..{max(thresholds)}, not m>=d"


@pytest.mark.xfail(strict=True, reason="q-adic convergence needs m beyond d; see limit_threshold")
def test_criterion_07_literal_m_at_least_d():
    # the coefficients at m = d are not yet the limit to order 10
    for n, fam, d in LIMIT_CASES:
        assert bounded_polynomial(d, n, fam, 10).truncate(d) == littlewood_q_product(n, d, 10, fam.shift)


def test_criterion_08_coefficients_as_integrals():
    with criterion(8, "bounded coefficients equal signed torus integrals, m,n<=2, D=12") as c:
        c["detail"] = f"{run_all([IdentityInstance('PROP_COEF', n=2, m=2, order=12)])} checks"


def test_criterion_09_partition_statistics():
    with criterion(9, "2-core tests, b statistic, delta formulas, conjugation identity") as c:
        checks = run_all(
            [
                IdentityInstance("LEMMA_21", max_size=14),
                IdentityInstance("LEMMA_22", max_size=14),
                IdentityInstance("LEMMA_23", n=6, max_size=12),
                IdentityInstance("CONJ_SYM", m=5, max_size=10),
            ]
        )
        c["detail"] = f"{checks} checks"


def test_criterion_10_classical_and_kawanaka():
    with criterion(10, "classical and Kawanaka identities n<=3, d=8, D=12; q=0 limits |lam|<=10") as c:
        instances = [
            IdentityInstance(ident, n=n, degree=8)
            for ident in ("CLASSICAL_1", "CLASSICAL_2", "CLASSICAL_3")
            for n in (1, 2, 3)
        ]
        instances += [IdentityInstance("KAWANAKA", n=n, degree=8, order=12) for n in (1, 2, 3)]
        # q=0 degeneration is part of every L1/L2 run; d=2 keeps the series part small
        instances += [IdentityInstance(ident, n=2, degree=2, order=4, max_size=10) for ident in ("L1", "L2")]
        c["detail"] = f"{run_all(instances)} checks"


@st.composite
def skew_matrices(draw):
    size = 2 * draw(st.integers(1, 3))
    rows = [[Fraction(0)] * size for _ in range(size)]
    for i in range(size):
        for j in range(i + 1, size):
            v = draw(st.fractions(min_value=-6, max_value=6, max_denominator=7))
            rows[i][j], rows[j][i] = v, -v
    return rows


series7 = st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=5), min_size=8, max_size=8).map(
    lambda c: QSeries(c, 7)
)


@settings(max_examples=150, deadline=None)
@given(skew_matrices())
def _pf_squared(rows):
    a = [[Rational(v.numerator, v.denominator) for v in r] for r in rows]
    pf = pfaffian(a)
    as_fraction = Fraction(int(pf.numerator), int(pf.denominator))
    assert as_fraction == pfaffian_by_matchings(rows)
    assert pf * pf == determinant(a)
    assert as_fraction**2 == det_leibniz(rows)


@settings(max_examples=150, deadline=None)
@given(series7, series7, series7)
def _qseries_ring(a, b, c):
    assert a + b == b + a and a * b == b * a
    assert (a + b) + c == a + (b + c) and (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0 and a * QSeries.one(7) == a
    if a.is_unit():
        assert a * a.inverse() == 1


def test_criterion_11_kernels():
    with criterion(11, "pf^2=det, Schur bialternant oracle, QSeries ring axioms") as c:
        _pf_squared()
        _qseries_ring()
        count = 0
        for n in range(1, 5):
            delta = [n - 1 - j for j in range(n)]
            a_delta = alternant(delta, n)
            for lam in enumerate_partitions(8, max_length=n):
                shifted = [p + d for p, d in zip(lam.padded(n), delta)]
                assert schur(lam, n) * a_delta == alternant(shifted, n)
                count += 1
        c["detail"] = f"{count} Schur polynomials, 150 random matrices, 150 series triples"
