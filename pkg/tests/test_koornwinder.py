import json

import pytest

from littlewood import koornwinder
from littlewood.errors import LengthExceeded, NoStabilization
from littlewood.exactalg import LaurentPoly, QSeries, RationalFunction, XSeries
from littlewood.koornwinder import (
    CACHE_VERSION,
    KoornwinderCache,
    KoornwinderPoly,
    bc_orbit_sum,
    bounded_rhs,
    dominance_leq,
    dominated_basis,
    koornwinder_poly,
    limit_stabilization,
    limit_threshold,
)
from littlewood.partitions import Partition, enumerate_partitions
from littlewood.productsides import littlewood_q_product
from littlewood.torus import DensitySpec, Family, inner_product

K_FAMILIES = [Family.K_HALFQUARTERS, Family.K_1M1QMQ]


@pytest.fixture
def fresh_cache(tmp_path):
    previous = koornwinder.get_cache()
    cache = koornwinder.set_cache_dir(tmp_path)
    yield cache
    koornwinder._cache = previous


def series(expr_num, expr_den, order):
    return RationalFunction(LaurentPoly(expr_num), LaurentPoly(expr_den)).to_series(order)


class TestDominance:
    def test_examples(self):
        assert dominance_leq((1, 1), (2,))
        assert not dominance_leq((2,), (1, 1, 1))
        assert not dominance_leq((1, 1, 1), (2,))
        assert dominance_leq((3, 1), (3, 1))

    def test_extended_order_allows_smaller_size(self):
        assert dominance_leq((1,), (2,))
        assert dominance_leq((), (1, 1))

    def test_partial_order_on_small_sizes(self):
        parts = list(enumerate_partitions(5))
        for a in parts:
            for b in parts:
                if dominance_leq(a, b) and dominance_leq(b, a):
                    assert a == b
                for c in parts:
                    if dominance_leq(a, b) and dominance_leq(b, c):
                        assert dominance_leq(a, c)

    def test_basis(self):
        assert dominated_basis(Partition([2]), 1) == [(), (1,)]
        basis = dominated_basis(Partition([1, 1]), 2)
        assert basis == [(), (1,)]


class TestOrbitSums:
    def test_examples(self):
        assert bc_orbit_sum((1,), 1) == XSeries(1, {(1,): 1, (-1,): 1})
        assert bc_orbit_sum((1, 1), 2) == XSeries(2, {(1, 1): 1, (1, -1): 1, (-1, 1): 1, (-1, -1): 1})
        assert bc_orbit_sum((), 3) == XSeries.constant(3, 1)

    def test_orbit_sizes_and_symmetry(self):
        f = bc_orbit_sum((2, 1), 3)
        assert len(f) == 24
        assert f.is_bc_symmetric() and f.is_symmetric()

    def test_length(self):
        with pytest.raises(LengthExceeded):
            bc_orbit_sum((1, 1), 1)


class TestPolynomials:
    @pytest.mark.parametrize("family", K_FAMILIES)
    def test_k0_and_k1(self, family, fresh_cache):
        assert koornwinder_poly((), 1, family, 6).to_xseries() == XSeries.constant(1, QSeries.one(6))
        k1 = koornwinder_poly((1,), 1, family, 6)
        assert k1[()] == 0 and k1[(1,)] == 1
        assert k1.to_xseries() == bc_orbit_sum((1,), 1).scale(QSeries.one(6))

    @pytest.mark.parametrize("family", K_FAMILIES)
    def test_orthogonality(self, family, fresh_cache):
        spec = DensitySpec(2, family, 6)
        lams = [lam for lam in enumerate_partitions(4, max_part=2, max_length=2)]
        polys = {lam: koornwinder_poly(lam, 2, family, 6).to_xseries() for lam in lams}
        for a in lams:
            for b in lams:
                if a != b:
                    assert inner_product(polys[a], polys[b], spec) == 0, (a, b)
            assert inner_product(polys[a], polys[a], spec).is_unit()

    def test_triangular(self, fresh_cache):
        k = koornwinder_poly((2, 1), 2, Family.K_1M1QMQ, 4)
        assert all(dominance_leq(mu, (2, 1)) and mu != (2, 1) for mu in k.coefficients)

    def test_length(self):
        with pytest.raises(LengthExceeded):
            koornwinder_poly((1, 1), 1, Family.K_HALFQUARTERS, 2)


class TestBounded:
    def test_m1_n1(self, fresh_cache):
        got = bounded_rhs(1, 1, Family.K_HALFQUARTERS, 8)
        assert dict(got.coefficients) == {(): 1, (2,): 1}

    def test_m0(self):
        assert dict(bounded_rhs(0, 3, Family.K_1M1QMQ, 4).coefficients) == {(): 1}

    def test_m1_n2(self, fresh_cache):
        got = bounded_rhs(1, 2, Family.K_HALFQUARTERS, 12)
        assert set(got.coefficients) == {(), (2,), (1, 1), (2, 2)}
        assert got[()] == 1 and got[(2,)] == 1 and got[(2, 2)] == 1
        assert got[(1, 1)] == series({1: 1, 2: -1}, {0: 1, 3: -1}, 12)

    def test_parts_bounded_by_2m(self, fresh_cache):
        got = bounded_rhs(2, 1, Family.K_1M1QMQ, 6)
        assert all(len(lam) <= 1 and (not lam or lam[0] <= 4) for lam in got.coefficients)


class TestLimit:
    def test_single_variable_degree_two(self, fresh_cache):
        res = limit_stabilization(1, Family.K_HALFQUARTERS, 2, 4)
        assert res.series[(2,)] == QSeries([1, -1, 1, -1, 1], 4)
        assert res.agrees

    @pytest.mark.parametrize("family", K_FAMILIES)
    def test_cross_coefficient(self, family, fresh_cache):
        res = limit_stabilization(2, family, 2, 3)
        assert res.series[(1, 1)] == 1
        assert res.agrees

    @pytest.mark.parametrize("family", K_FAMILIES)
    def test_degree_zero(self, family, fresh_cache):
        res = limit_stabilization(2, family, 0, 4)
        assert res.stable_from == 0 and res.series == XSeries.constant(2, QSeries.one(4))

    @pytest.mark.parametrize("family", K_FAMILIES)
    @pytest.mark.parametrize("d, order", [(2, 2), (2, 4), (4, 4), (4, 2)])
    def test_threshold_is_exact(self, family, d, order, fresh_cache):
        res = limit_stabilization(1, family, d, order)
        assert res.stable_from == limit_threshold(family, d, order)
        assert res.series == littlewood_q_product(1, d, order, family.shift)
        # the value just before the threshold is different
        if res.stable_from:
            assert res.history[res.stable_from - 1] != res.series

    def test_threshold_formulas(self):
        assert limit_threshold(Family.K_HALFQUARTERS, 6, 10) == 8
        assert limit_threshold(Family.K_1M1QMQ, 6, 10) == 14
        assert limit_threshold(Family.K_1M1QMQ, 5, 10) == 13
        assert limit_threshold("K_halfquarters", 1, 10) == 0

    def test_budget_exhausted(self, fresh_cache):
        with pytest.raises(NoStabilization):
            limit_stabilization(1, Family.K_1M1QMQ, 2, 4, max_m=2)


class TestCache:
    def test_disk_round_trip(self, tmp_path):
        cache = KoornwinderCache(tmp_path)
        k = KoornwinderPoly(Partition([1, 1]), 2, Family.K_1M1QMQ, 3, {Partition(): QSeries([1, 2], 3)})
        key = KoornwinderCache.key(k.lam, 2, k.family, 3)
        cache.put(key, k)
        files = list(tmp_path.glob("K_v*.json"))
        assert [f.name for f in files] == [f"K_v{CACHE_VERSION}_K_1m1qmq_n2_D3_1-1.json"]
        reread = KoornwinderCache(tmp_path).get(key)
        assert reread == k

    def test_version_mismatch_is_a_miss(self, tmp_path):
        cache = KoornwinderCache(tmp_path)
        k = KoornwinderPoly(Partition(), 1, Family.K_HALFQUARTERS, 2)
        key = KoornwinderCache.key(k.lam, 1, k.family, 2)
        cache.put(key, k)
        path = next(tmp_path.glob("K_v*.json"))
        data = json.loads(path.read_text())
        data["version"] = CACHE_VERSION + 1
        path.write_text(json.dumps(data))
        assert KoornwinderCache(tmp_path).get(key) is None

    def test_corrupt_file_is_a_miss(self, tmp_path):
        cache = KoornwinderCache(tmp_path)
        key = KoornwinderCache.key(Partition(), 1, Family.K_HALFQUARTERS, 2)
        cache.put(key, KoornwinderPoly(Partition(), 1, Family.K_HALFQUARTERS, 2))
        next(tmp_path.glob("K_v*.json")).write_text("{not json")
        assert KoornwinderCache(tmp_path).get(key) is None

    def test_clear(self, tmp_path):
        cache = KoornwinderCache(tmp_path)
        for order in range(3):
            key = KoornwinderCache.key(Partition(), 1, Family.K_HALFQUARTERS, order)
            cache.put(key, KoornwinderPoly(Partition(), 1, Family.K_HALFQUARTERS, order))
        assert cache.clear(disk=True) == 3
        assert not list(tmp_path.glob("*.json"))

    def test_solver_results_are_cached(self, fresh_cache, tmp_path):
        first = koornwinder_poly((2,), 1, Family.K_HALFQUARTERS, 5)
        assert list(tmp_path.glob("K_v*.json"))
        fresh_cache.clear()
        assert koornwinder_poly((2,), 1, Family.K_HALFQUARTERS, 5) == first
