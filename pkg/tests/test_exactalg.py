from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given, strategies as st

from littlewood.errors import DivisionByNonUnit, NonconvergentProduct, NotAPowerSeries, SubstitutionError
from littlewood.exactalg import (
    LaurentPoly,
    QSeries,
    Rational,
    RationalFunction,
    XSeries,
    constant_term,
    doubled,
    geometric,
    pairing,
    pochhammer_trunc,
    qpoch_scalar,
    substitute,
)

from oracles import poly_coeffs, series_coeffs

SQ = sympy.Symbol("q")

small = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def qseries(order):
    return st.lists(small, min_size=order + 1, max_size=order + 1).map(lambda c: QSeries(c, order))


laurent = st.dictionaries(st.integers(-4, 6), small, max_size=5).map(LaurentPoly)
polys = st.dictionaries(st.integers(0, 5), small, min_size=1, max_size=4).map(LaurentPoly).filter(lambda p: not p.is_zero())


def fr(values):
    return [Fraction(int(v.numerator), int(v.denominator)) for v in values]


class TestRational:
    def test_canonical(self):
        r = Rational(6, -4)
        assert (r.numerator, r.denominator) == (-3, 2)


class TestLaurent:
    def test_difference_of_squares(self):
        assert LaurentPoly.one_minus(1) * LaurentPoly({0: 1, 1: 1}) == LaurentPoly.one_minus(2)

    def test_no_zero_coefficients(self):
        p = LaurentPoly({0: 1, 2: 0, -1: 3}) + LaurentPoly({-1: -3})
        assert dict(p.coeffs) == {0: 1}

    def test_degree_valuation(self):
        p = LaurentPoly({-2: 1, 3: 5})
        assert (p.valuation, p.degree) == (-2, 3)
        assert p.shift(2).is_polynomial()
        assert p.subs_power(2) == LaurentPoly({-4: 1, 6: 5})

    @given(laurent, laurent, laurent)
    def test_ring_axioms(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == 0

    @given(laurent, st.integers(-3, 3))
    def test_evaluate_is_homomorphism(self, a, v):
        assume(v != 0)
        assert (a * a).evaluate(v) == a.evaluate(v) ** 2


class TestQSeries:
    def test_geometric(self):
        assert (QSeries.one(3) / QSeries([1, -1], 3)).coeffs == (1, 1, 1, 1)

    def test_mixed_orders_truncate(self):
        a = QSeries([1, 1, 1, 1, 1], 4)
        b = QSeries([1, 2], 2)
        assert (a + b).order == 2
        assert (a * b).coeffs == (1, 3, 3)

    def test_scalars(self):
        s = QSeries([2, 1], 3)
        assert Rational(1, 2) + s == QSeries([Rational(5, 2), 1], 3)
        assert 3 * s == QSeries([6, 3], 3)
        assert QSeries.scalar(4, 2) == 4
        assert not QSeries.zero(5)

    def test_non_unit(self):
        with pytest.raises(DivisionByNonUnit):
            QSeries([0, 1], 3).inverse()
        with pytest.raises(NotAPowerSeries):
            QSeries.monomial(-1, 3)
        with pytest.raises(IndexError):
            QSeries.one(2)[3]

    def test_json_round_trip(self):
        s = QSeries([Rational(1, 3), 0, -2], 4)
        assert QSeries.from_json(s.to_json()) == s

    @given(qseries(6), qseries(6), qseries(6))
    def test_ring_axioms(self, a, b, c):
        assert a + b == b + a
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + QSeries.zero(6) == a and a * QSeries.one(6) == a
        assert a + (-a) == 0

    @given(qseries(6))
    def test_inverse(self, a):
        assume(a.is_unit())
        assert a * a.inverse() == 1
        assert a.inverse().inverse() == a

    @given(qseries(5), st.integers(1, 3))
    def test_subs_power_is_homomorphism(self, a, k):
        assert (a * a).subs_power(k) == a.subs_power(k) * a.subs_power(k)

    def test_first_difference(self):
        a = QSeries([1, 2, 3], 4)
        assert a.first_difference(a) is None
        assert a.first_difference(QSeries([1, 2, 4], 4)) == 2


class TestRationalFunction:
    def test_normalises(self):
        r = RationalFunction(LaurentPoly.one_minus(2), LaurentPoly.one_minus(1))
        assert r == LaurentPoly({0: 1, 1: 1})
        assert r.is_laurent()

    def test_canonical_denominator(self):
        r = RationalFunction(LaurentPoly({3: 2}), LaurentPoly({1: 4, 2: 2}))
        # q^2 moves to the numerator and the denominator is made monic
        assert r.num == LaurentPoly({2: 1}) and r.den == LaurentPoly({0: 2, 1: 1})

    def test_zero(self):
        assert RationalFunction() == 0
        with pytest.raises(DivisionByNonUnit):
            RationalFunction(1, 0)
        with pytest.raises(DivisionByNonUnit):
            RationalFunction(1) / 0

    @given(polys, polys, polys, polys)
    def test_field_axioms_and_uniqueness(self, a, b, c, d):
        x = RationalFunction(a, b) if not b.is_zero() else RationalFunction(a)
        y = RationalFunction(c, d) if not d.is_zero() else RationalFunction(c)
        assert x + y == y + x
        assert x * y == y * x
        assert (x + y) - y == x
        if y:
            assert (x * y) / y == x
        # scaling numerator and denominator by a common factor changes nothing
        assert RationalFunction(x.num * c, x.den * c) == x

    def test_series_against_sympy(self):
        r = RationalFunction(LaurentPoly({1: 1, 2: -1}), LaurentPoly.one_minus(3))
        assert fr(r.to_series(10).coeffs) == series_coeffs(SQ * (1 - SQ) / (1 - SQ**3), 10)

    def test_pole_at_zero(self):
        with pytest.raises(NotAPowerSeries):
            RationalFunction(LaurentPoly({-1: 1})).to_series(3)


class TestProducts:
    def test_euler_function(self):
        assert qpoch_scalar(1, 4).coeffs == (1, -1, -1, 0, 0)
        got = qpoch_scalar(1, 15).coeffs
        expected = poly_coeffs(sympy.prod([1 - SQ**i for i in range(1, 16)]), 15)
        assert fr(got) == expected

    def test_base_q2(self):
        assert qpoch_scalar(2, 3, base=2).coeffs == (1, 0, -1, 0)
        assert pochhammer_trunc(2, base=2, order=3) == QSeries([1, 0, -1], 3)

    def test_zero_argument(self):
        assert qpoch_scalar(1, 5, coefficient=0) == 1

    def test_reciprocal_partitions(self):
        # 1/(q;q)_inf counts partitions
        got = qpoch_scalar(1, 10, inverse=True).coeffs
        assert list(got) == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]

    def test_nonconvergent(self):
        with pytest.raises(NonconvergentProduct):
            qpoch_scalar(0, 4, inverse=True)
        with pytest.raises(NonconvergentProduct):
            pochhammer_trunc((0, (1,)), order=3, inverse=True)

    def test_x_product_telescopes(self):
        # (q x; q)_inf / (x; q)_inf = 1 / (1 - x)
        got = pochhammer_trunc((1, (1,)), order=5, degree_bound=3) * pochhammer_trunc(
            (0, (1,)), order=5, inverse=True, degree_bound=3
        )
        assert got == geometric((1,), 3).map_coefficients(lambda c: QSeries.scalar(c, 5))


class TestXSeries:
    def test_constant_term_examples(self):
        x = XSeries.variable(1, 0)
        xi = XSeries.variable(1, 0, -1)
        assert constant_term(x + XSeries.constant(1, 2) + xi) == 2
        assert constant_term(XSeries(2, {(1, 1): 1, (-1, -1): 1})) == 0
        assert constant_term((x + xi) ** 2) == 2

    def test_pairing(self):
        f = XSeries(2, {(1, 0): 2, (0, -1): 3})
        g = XSeries(2, {(-1, 0): 5, (0, 1): 7, (1, 1): 1})
        assert pairing(f, g) == constant_term(f * g) == 31

    def test_truncation_respected(self):
        g = geometric((1, 0), 4) * geometric((0, 1), 4)
        assert g.max_total_degree() == 4
        assert len(g) == 15

    def test_substitute_monomial(self):
        f = XSeries(2, {(1, 1): 1})
        images = [XSeries.variable(1, 0), XSeries.variable(1, 0, -1)]
        assert substitute(f, images) == XSeries.constant(1, 1)

    def test_substitute_q_power(self):
        f = XSeries.constant(1, QSeries.from_laurent(LaurentPoly.one_minus(1), 4))
        assert substitute(f, q_power=2) == XSeries.constant(1, QSeries([1, 0, -1], 4))

    def test_substitute_inverse_on_sum(self):
        f = XSeries(1, {(-1,): 1})
        with pytest.raises(SubstitutionError):
            substitute(f, [XSeries(1, {(1,): 1, (0,): 1})])

    def test_doubling(self):
        s1 = XSeries(4, {(1, 0, 0, 0): 1, (0, 1, 0, 0): 1, (0, 0, 1, 0): 1, (0, 0, 0, 1): 1})
        assert doubled(s1) == XSeries(2, {(1, 0): 1, (-1, 0): 1, (0, 1): 1, (0, -1): 1})

    @given(
        st.dictionaries(st.tuples(st.integers(-2, 2), st.integers(-2, 2)), small, max_size=6),
        st.dictionaries(st.tuples(st.integers(-2, 2), st.integers(-2, 2)), small, max_size=6),
    )
    def test_ring_axioms_and_symmetry_ops(self, a, b):
        f, g = XSeries(2, a), XSeries(2, b)
        assert f * g == g * f
        assert (f + g) * g == f * g + g * g
        assert (f * g).invert_variables() == f.invert_variables() * g.invert_variables()
        assert (f * g).permute((1, 0)) == f.permute((1, 0)) * g.permute((1, 0))
        assert pairing(f, g) == constant_term(f * g)

    def test_bc_symmetry(self):
        f = XSeries(2, {(1, 0): 1, (-1, 0): 1, (0, 1): 1, (0, -1): 1})
        assert f.is_bc_symmetric()
        assert not XSeries(2, {(1, 0): 1, (0, 1): 1}).is_bc_symmetric()
