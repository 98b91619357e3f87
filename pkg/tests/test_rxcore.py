import cmath
import math

import pytest
from hypothesis import given, settings, strategies as st

from torsiongen.errors import PoleHit, ZeroInput
from torsiongen.polyalg import IntPoly, classify_roots
from torsiongen.rxcore import (
    log_abs_F, rational_form, rx_expansion_at_one, rx_invert_decompose,
    rx_laurent_at_one_rootofunity, rx_root_of_unity, rx_series,
)

LOG2 = math.log(2)


class TestRxSeries:
    def test_x_equals_one_is_zero(self):
        r = rx_series(1.0, 0.37, 500, exact_order=1)
        assert r.value == 0 and r.terms_used == 0

    def test_x_minus_one_geometric(self):
        # only odd powers survive: log 2 * z/(1 - z^2)
        r = rx_series(-1.0, 0.5, 400, exact_order=2)
        assert abs(r.value - LOG2 * 0.5 / 0.75) < 1e-13

    def test_rejects_zero(self):
        with pytest.raises(ZeroInput):
            rx_series(0.0, 0.5, 10)

    def test_tail_bound_inside(self):
        r = rx_series(0.4, 0.5, 30)
        full = rx_series(0.4, 0.5, 4000)
        assert abs(r.value - full.value) <= r.tail_bound

    def test_tail_bound_outside_x(self):
        r = rx_series(2.0, 0.3, 40)
        full = rx_series(2.0, 0.3, 4000)
        assert abs(r.value - full.value) <= r.tail_bound

    def test_conjugation_real_z(self):
        # coefficients log|1-x^r| are real, so conjugating x changes nothing
        x = 0.3 + 0.2j
        a = rx_series(x, 0.55, 300).value
        b = rx_series(x.conjugate(), 0.55, 300).value
        assert abs(a - b) < 1e-14

    def test_conjugation_complex_z(self):
        x, z = 0.3 + 0.2j, 0.4 + 0.1j
        a = rx_series(x.conjugate(), z.conjugate(), 300).value
        b = rx_series(x, z, 300).value.conjugate()
        assert abs(a - b) < 1e-14

    def test_unimodular_log_growth_witness(self, lehmer):
        # |log|1 - x^r|| <= C log r for the algebraic unimodular inputs
        prof = classify_roots(lehmer)
        u = [r.value for r in prof.roots if r.kind == "diophantine"][0]
        C = 10.0
        worst = 0.0
        xr = 1 + 0j
        for r in range(1, 10 ** 4 + 1):
            xr *= u
            if r % 64 == 0:
                xr /= abs(xr)
            worst = max(worst, abs(math.log(abs(1 - xr))) / math.log(r + 1))
        assert worst <= C


class TestRootOfUnityForm:
    def test_order_one_zero_function(self):
        assert rx_root_of_unity(1, 1, 0.9).value == 0

    def test_m2_matches_series(self):
        a = rx_root_of_unity(2, 1, 0.5).value
        b = rx_series(-1.0, 0.5, 600, exact_order=2).value
        assert abs(a - b) < 1e-12
        assert abs(a - (2 / 3) * LOG2) < 1e-13

    def test_pole_hit(self):
        with pytest.raises(PoleHit):
            rx_root_of_unity(6, 1, cmath.exp(2j * math.pi / 6))
        with pytest.raises(PoleHit):
            rx_root_of_unity(2, 1, 1.0)

    def test_rational_form_coefficients_match_series(self):
        # (1 - z^m) * R_x expanded: coefficient of z^l is log|1 - x^l|
        for m, k in ((6, 1), (5, 2), (12, 5)):
            form = rational_form(m, k)
            x = cmath.exp(2j * math.pi * k / m)
            xl = 1 + 0j
            for l in range(1, m):
                xl *= x
                assert abs(form.numerator_coeffs[l - 1] - math.log(abs(1 - xl))) < 1e-14

    def test_rational_form_poles(self):
        assert len(rational_form(6, 1).poles()) == 6
        assert rational_form(1, 1).poles() == []

    def test_non_primitive_rejected(self):
        with pytest.raises(ValueError):
            rational_form(6, 2)


class TestLaurentAtOne:
    def test_m2_instantiation(self):
        # log|1 - zeta_2| = log 2, so the closed forms collapse to
        # residue -(log 2)/2 and constant -(log 2)/4
        res, const = rx_laurent_at_one_rootofunity(2)
        assert abs(res + LOG2 / 2) < 1e-15
        assert abs(const + LOG2 / 4) < 1e-15

    def test_m6_residue(self):
        res, _ = rx_laurent_at_one_rootofunity(6)
        assert abs(res - math.log(1 / 6) / 6) < 1e-15

    def test_m1_rejected(self):
        with pytest.raises(ValueError):
            rx_laurent_at_one_rootofunity(1)

    def test_residue_against_numeric_limit(self):
        # (z-1) R(z) -> residue along z -> 1
        res, _ = rx_laurent_at_one_rootofunity(6)
        for eps in (1e-5, 1e-6):
            v = rx_root_of_unity(6, 1, 1 + eps).value * eps
            assert abs(v - res) < 1e-3


class TestInversion:
    def test_decompose_values(self):
        assert rx_invert_decompose(2.0) == (0.5, LOG2)
        xi, w = rx_invert_decompose(1.5)
        assert abs(xi - 2 / 3) < 1e-15 and abs(w - math.log(1.5)) < 1e-15

    def test_identity_at_point(self):
        # R_x(z) = R_{1/x}(z) + log|x| z/(z-1)^2 at x=2, z=0.3
        z = 0.3
        lhs = rx_series(2.0, z, 3000).value
        xi, w = rx_invert_decompose(2.0)
        rhs = rx_series(xi, z, 3000).value + w * z / (z - 1) ** 2
        assert abs(lhs - rhs) < 1e-8

    def test_needs_outside(self):
        with pytest.raises(ValueError):
            rx_invert_decompose(0.5)


class TestPartitionFunction:
    def test_zero(self):
        assert log_abs_F(0.0) == 0.0

    def test_product_oracle(self):
        x = 0.5
        prod = 1.0
        for n in range(1, 300):
            prod *= abs(1 - x ** n)
        assert abs(log_abs_F(x) - math.log(1 / prod)) < 1e-10

    def test_conjugate_symmetry(self):
        x = 0.3 + 0.2j
        assert log_abs_F(x) == log_abs_F(x.conjugate())

    def test_needs_inside(self):
        with pytest.raises(ValueError):
            log_abs_F(1.2)


class TestExpansionAtOne:
    def test_c0_is_minus_log_F(self):
        cs = rx_expansion_at_one(0.5, 2)
        assert abs(cs[0] + log_abs_F(0.5)) < 1e-14

    def test_taylor_matches_series_inside(self):
        # partial Taylor sum at z near 1 (inside the disc) vs direct series
        cs = rx_expansion_at_one(0.5, 8)
        z = 0.995
        taylor = sum(c * (z - 1) ** l for l, c in enumerate(cs))
        direct = rx_series(0.5, z, 6000).value.real
        assert abs(taylor - direct) < 1e-5

    def test_c1_finite_difference_oracle(self):
        cs = rx_expansion_at_one(0.5, 1)
        h = 1e-5
        z0 = 1 - 1e-7  # derivative at (essentially) z = 1 from inside
        fd = (
            rx_series(0.5, z0, 8000).value.real
            - rx_series(0.5, z0 - h, 8000).value.real
        ) / h
        assert abs(cs[1] - fd) < 1e-3

    @settings(max_examples=15, deadline=None)
    @given(st.floats(-0.7, 0.7), st.floats(-0.6, 0.6))
    def test_real_coefficients_always(self, re, im):
        x = complex(re, im)
        if abs(x) < 1e-3 or abs(x) > 0.85:
            return
        for c in rx_expansion_at_one(x, 3):
            assert isinstance(c, float)
