import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from revstack.polynomials import IntPoly
from revstack.roots import (
    InterlacingReport,
    check_interlacing,
    count_roots_between,
    format_decimal,
    interlacing_pair_report,
    real_roots,
    sturm_chain,
)


def poly_from_roots(roots):
    p = IntPoly.from_coeffs([1])
    for r in roots:
        p = p * IntPoly.from_coeffs([-r, 1])
    return p


class TestReferenceExamples:
    def test_cubic(self):
        rep = real_roots(IntPoly.from_coeffs([0, 1, 4, 1]))
        assert rep.all_real and rep.nonpositive
        assert rep.approx_values() == ["-3.73205", "-0.26795", "0.00000"]

    def test_linear(self):
        rep = real_roots(IntPoly.from_coeffs([0, 1]))
        assert rep.all_real and rep.nonpositive
        assert len(rep.roots) == 1
        assert rep.roots[0].exact and rep.roots[0].lo == 0

    def test_quartic_with_rational_root(self):
        rep = real_roots(IntPoly.from_coeffs([0, 1, 10, 10, 1]))
        assert rep.all_real and rep.nonpositive
        vals = [float(v) for v in rep.approx_values()]
        for got, want in zip(vals, [-8.88748, -1.0, -0.11252, 0.0]):
            assert abs(got - want) < 1e-4
        # -1 is bracketed by its interval; 0 is stripped out exactly
        assert any(r.lo <= -1 <= r.hi for r in rep.roots)
        assert any(r.exact and r.lo == 0 for r in rep.roots)

    def test_zero_poly_rejected(self):
        with pytest.raises(ValueError):
            real_roots(IntPoly.zero())


class TestMultiplicityAndRealness:
    def test_multiple_root(self):
        # x (x+1)^2
        p = IntPoly.from_coeffs([0, 1, 2, 1])
        rep = real_roots(p)
        assert rep.all_real and rep.nonpositive
        mults = {(r.lo, r.multiplicity) for r in rep.roots if r.exact}
        assert (Fraction(-1), 2) in mults
        assert (Fraction(0), 1) in mults

    def test_complex_pair_detected(self):
        # x (x^2 + 1)
        rep = real_roots(IntPoly.from_coeffs([0, 1, 0, 1]))
        assert not rep.all_real
        assert rep.nonpositive

    def test_positive_root_detected(self):
        rep = real_roots(IntPoly.from_coeffs([-2, 0, 1]))  # x^2 - 2
        assert rep.all_real
        assert not rep.nonpositive

    def test_triple_root(self):
        p = poly_from_roots([-2, -2, -2, 0])
        rep = real_roots(p)
        assert rep.all_real and rep.nonpositive
        assert any(r.lo <= -2 <= r.hi and r.multiplicity == 3 for r in rep.roots)

    def test_constant_polynomial(self):
        rep = real_roots(IntPoly.from_coeffs([5]))
        assert rep.all_real and rep.nonpositive and rep.roots == ()


class TestWidthAndFormatting:
    def test_width_honoured(self):
        width = Fraction(1, 1000)
        rep = real_roots(IntPoly.from_coeffs([0, 1, 4, 1]), width)
        for r in rep.roots:
            assert r.hi - r.lo <= width

    def test_format_decimal(self):
        assert format_decimal(Fraction(-1)) == "-1.00000"
        assert format_decimal(Fraction(1, 3)) == "0.33333"
        # round-half-even at the boundary digit
        assert format_decimal(Fraction(25, 10**6)) == "0.00002"
        assert format_decimal(Fraction(35, 10**6)) == "0.00004"

    def test_report_json_shape(self):
        rep = real_roots(IntPoly.from_coeffs([0, 1]))
        blob = rep.to_json()
        assert set(blob) == {"all_real", "nonpositive", "roots"}
        assert set(blob["roots"][0]) == {"lo", "hi", "approx", "mult"}


class TestSturmAdditivity:
    @given(st.data())
    @settings(deadline=None, max_examples=40)
    def test_product_counts_add(self, data):
        pool = list(range(-8, 9))
        random.shuffle(pool)
        ra = data.draw(st.lists(st.sampled_from(pool), max_size=3, unique=True))
        rb = data.draw(
            st.lists(
                st.sampled_from([v for v in pool if v not in ra]),
                min_size=1, max_size=3, unique=True,
            )
        )
        p, q = poly_from_roots(ra), poly_from_roots(rb)
        rep_p = real_roots(p) if p.degree > 0 else None
        na = len(real_roots(p).roots) if p.degree > 0 else 0
        nb = len(real_roots(q).roots)
        nprod = len(real_roots(p * q).roots)
        assert nprod == na + nb

    def test_count_roots_between(self):
        f = [Fraction(c) for c in (0, 1, 4, 1)]  # x^3 + 4x^2 + x
        chain = sturm_chain(f)
        assert count_roots_between(chain, Fraction(-100), Fraction(100)) == 3
        assert count_roots_between(chain, Fraction(-1), Fraction(100)) == 2
        assert count_roots_between(chain, Fraction(1), Fraction(100)) == 0


class TestInterlacing:
    def test_reference_range(self):
        for n in range(2, 10):
            report = check_interlacing(n)
            assert report.ok, (n, report.detail)

    def test_reports_are_typed(self):
        assert isinstance(check_interlacing(4), InterlacingReport)

    def test_rejects_small(self):
        with pytest.raises(ValueError):
            check_interlacing(1)

    def test_failure_non_real(self):
        p = IntPoly.from_coeffs([0, 1, 0, 1])  # x(x^2+1)
        q = poly_from_roots([0, -1, -3])
        report = interlacing_pair_report(p, q, 0)
        assert not report.ok
        assert "non-real" in report.detail

    def test_failure_wrong_ordering(self):
        p = poly_from_roots([0, -1, -3])
        q = poly_from_roots([0, -2, -4, -6])
        report = interlacing_pair_report(p, q, 0)
        assert not report.ok
        assert "ordering violated" in report.detail

    def test_failure_shared_root(self):
        p = poly_from_roots([0, -1, -2])
        q = poly_from_roots([0, -1, -3, -5])
        report = interlacing_pair_report(p, q, 0)
        assert not report.ok
        assert "separate" in report.detail

    def test_failure_wrong_count(self):
        p = poly_from_roots([0, -1])
        q = poly_from_roots([0, -2, -3, -4])
        report = interlacing_pair_report(p, q, 0)
        assert not report.ok
        assert "expected" in report.detail

    def test_good_pair(self):
        p = poly_from_roots([0, -2, -4])
        q = poly_from_roots([0, -1, -3, -5])
        assert interlacing_pair_report(p, q, 0).ok
