import math
import cmath
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from torsiongen.errors import PrecisionExhausted, ZeroInput
from torsiongen.polyalg import (
    DIOPHANTINE, INSIDE, OUTSIDE, ROOT_OF_UNITY,
    ApproximabilityVerdict, IntPoly, badly_approximable_witness,
    classify_roots, continued_fraction, cyclotomic, divide_exact,
    power_minus_one, resultant_exact, roots, squarefree_decomposition,
)

PHI = (1 + math.sqrt(5)) / 2


class TestIntPoly:
    def test_parse_ascending_convention(self):
        p = IntPoly.parse("6,-13,6")
        assert p.coeffs == (6, -13, 6)
        assert p(1) == -1           # 6 - 13 + 6
        assert p(2) == 6 - 26 + 24  # index = power

    def test_parse_json(self):
        p = IntPoly.parse('{"coeffs": [1, -3, 1]}')
        assert p.coeffs == (1, -3, 1)

    def test_trailing_zeros_stripped(self):
        assert IntPoly([1, 2, 0, 0]).degree == 1

    def test_zero_polynomial(self):
        z = IntPoly([])
        assert z.is_zero() and z.degree == -1

    def test_reciprocal(self):
        assert IntPoly([1, -3, 1]).is_reciprocal()
        assert IntPoly([1, -1, 1]).is_reciprocal()
        assert not IntPoly([-2, 1]).is_reciprocal()
        assert IntPoly([-1, 0, 1]).is_reciprocal()  # anti-palindromic

    def test_shift_out_zero_roots(self):
        k, g = IntPoly([0, 0, 3, 1]).shift_out_zero_roots()
        assert k == 2 and g.coeffs == (3, 1)


class TestRoots:
    def test_quadratic_formula_oracle(self, figure_eight):
        # independent oracle: the quadratic formula
        expect = sorted([(3 + math.sqrt(5)) / 2, (3 - math.sqrt(5)) / 2])
        got = sorted(z.real for z, _ in roots(figure_eight))
        assert all(abs(a - b) < 1e-12 for a, b in zip(expect, got))

    def test_sixth_roots_of_unity(self, trefoil):
        for z, m in roots(trefoil):
            assert m == 1
            assert abs(z ** 6 - 1) < 1e-12
            assert abs(z ** 3 + 1) < 1e-12  # primitive: zeta^3 = -1

    def test_repeated_factor(self):
        rs = roots(IntPoly([4, -4, 1]))  # (t-2)^2
        assert len(rs) == 1
        z, m = rs[0]
        assert m == 2 and abs(z - 2) < 1e-12

    def test_zero_roots_factored(self):
        rs = dict(roots(IntPoly([0, 0, -2, 1])))  # t^2 (t - 2)
        assert rs[0j] == 2

    def test_rejects_constant(self):
        with pytest.raises(ZeroInput):
            roots(IntPoly([5]))

    def test_reconstruction_residual(self, lehmer):
        # lc * prod (t - beta_i) reproduces the coefficients
        rs = roots(lehmer)
        coeffs = [1.0 + 0j]
        for z, m in rs:
            for _ in range(m):
                coeffs = [0j] + coeffs
                for i in range(len(coeffs) - 1):
                    coeffs[i] -= z * coeffs[i + 1]
        scale = max(abs(c) for c in lehmer.coeffs)
        err = max(abs(a - b) for a, b in zip(coeffs, lehmer.coeffs))
        assert err < 1e-8 * scale


class TestSquarefree:
    def test_yun(self):
        f = IntPoly([-4, 8, -5, 1])  # (t-1)(t-2)^2
        parts = dict((m, g.coeffs) for g, m in squarefree_decomposition(f))
        assert parts[1] == (-1, 1)
        assert parts[2] == (-2, 1)

    def test_squarefree_passthrough(self, figure_eight):
        [(g, m)] = squarefree_decomposition(figure_eight)
        assert m == 1 and g.coeffs == figure_eight.coeffs


class TestResultants:
    def test_evaluation_at_one(self, figure_eight):
        assert abs(resultant_exact(figure_eight, IntPoly([-1, 1]))) == 1

    def test_fig8_cube_oracle(self, figure_eight):
        # hand check: Delta(w) = -4w for w a primitive cube root, so
        # |Res| = |Delta(1)| * |Delta(w)|^2 = 1 * 16
        assert abs(resultant_exact(figure_eight, power_minus_one(3))) == 16

    def test_shared_root_vanishes(self, trefoil):
        assert resultant_exact(trefoil, power_minus_one(6)) == 0

    def test_constant_cases(self):
        assert resultant_exact(IntPoly([3]), power_minus_one(2)) == 9

    @settings(max_examples=40, deadline=None)
    @given(
        coeffs=st.lists(st.integers(-5, 5), min_size=2, max_size=7),
        r=st.integers(1, 12),
    )
    def test_product_formula_property(self, coeffs, r):
        # |Res(f, t^r - 1)| = |lc|^r prod |1 - beta^r| (translate-the-root)
        f = IntPoly(coeffs)
        if f.degree < 1:
            return
        res = abs(resultant_exact(f, power_minus_one(r)))
        if res == 0:
            return  # root-of-unity hit: the float product is unstable there
        k, g = f.shift_out_zero_roots()
        prod = math.log(abs(g.lead)) * r
        for z, m in roots(g) if g.degree >= 1 else []:
            prod += m * math.log(abs(1 - z ** r))
        assert abs(math.log(res) - prod) < 1e-9 * max(1.0, abs(math.log(res)))


class TestCyclotomic:
    def test_small_orders(self):
        assert cyclotomic(1).coeffs == (-1, 1)
        assert cyclotomic(6).coeffs == (1, -1, 1)

    def test_order_12_by_division_oracle(self):
        # independent route: divide t^12 - 1 by the lower-order factors
        q = power_minus_one(12)
        for d in (1, 2, 3, 4, 6):
            q = divide_exact(q, cyclotomic(d))
        assert q.coeffs == cyclotomic(12).coeffs == (1, 0, -1, 0, 1)

    def test_products_recompose(self):
        for d in (8, 9, 10, 15):
            prod = IntPoly([1])
            for e in range(1, d + 1):
                if d % e == 0:
                    prod = prod.mul(cyclotomic(e))
            assert prod.coeffs == power_minus_one(d).coeffs


class TestClassify:
    def test_cyclotomic_input(self, trefoil):
        prof = classify_roots(trefoil)
        assert all(r.kind == ROOT_OF_UNITY and r.order == 6 for r in prof.roots)
        assert prof.mahler == 1.0
        assert all(r.provenance == "exact-cyclotomic" for r in prof.roots)

    def test_k8_example(self, k8_256):
        prof = classify_roots(k8_256)
        kinds = sorted((r.kind, round(abs(r.value), 6)) for r in prof.roots)
        assert kinds == [(INSIDE, round(2 / 3, 6)), (OUTSIDE, 1.5)]
        assert abs(prof.mahler - 9.0) < 1e-9  # 6 * (3/2)

    def test_lehmer_classification(self, lehmer):
        prof = classify_roots(lehmer)
        counts = Counter(r.kind for r in prof.roots)
        assert counts[DIOPHANTINE] == 8
        assert counts[INSIDE] == 1
        assert counts[OUTSIDE] == 1
        assert all(r.provenance == "numeric" for r in prof.roots)
        assert abs(prof.mahler - 1.17628081825991) < 1e-8

    def test_multiplicities_sum_to_degree(self, lehmer):
        prof = classify_roots(lehmer)
        assert prof.degree == sum(r.multiplicity for r in prof.roots) == 10

    def test_conjugation_closure(self, lehmer):
        prof = classify_roots(lehmer)
        values = [r.value for r in prof.roots]
        for v in values:
            assert any(abs(v.conjugate() - w) < 1e-9 for w in values)

    def test_mahler_at_least_one(self):
        for coeffs in ([1, -1, 1], [1, -3, 1], [6, -13, 6], [-2, 1], [2, 1]):
            assert classify_roots(IntPoly(coeffs)).mahler >= 1 - 1e-12

    def test_mahler_cyclotomic_invariant(self, figure_eight):
        # mahler(Phi_d * f) = mahler(f)
        m0 = classify_roots(figure_eight).mahler
        for d in (1, 4, 6):
            m1 = classify_roots(figure_eight.mul(cyclotomic(d))).mahler
            assert abs(m1 - m0) < 1e-9


class TestContinuedFraction:
    def test_golden_ratio(self):
        cf = continued_fraction((math.sqrt(5) - 1) / 2, 12)
        assert cf.partial_quotients == [1] * 12

    def test_silver_ratio(self):
        cf = continued_fraction(math.sqrt(2) - 1, 12)
        assert cf.partial_quotients == [2] * 12

    def test_terminating_rational(self):
        cf = continued_fraction(Fraction(5, 13), 10)
        assert cf.partial_quotients == [2, 1, 1, 2]
        assert cf.terminated

    def test_convergent_recurrences_exact(self):
        cf = continued_fraction(Fraction(355, 1130), 10)  # pi-ish rational
        p_prev, q_prev = 1, 0
        p_cur, q_cur = 0, 1
        for a, (p, q) in zip(cf.partial_quotients, cf.convergents):
            p_prev, p_cur = p_cur, a * p_cur + p_prev
            q_prev, q_cur = q_cur, a * q_cur + q_prev
            assert (p, q) == (p_cur, q_cur)
            assert math.gcd(p, q) == 1

    def test_convergent_quality(self):
        theta = (math.sqrt(5) - 1) / 2
        cf = continued_fraction(theta, 15)
        for (p1, q1), (p2, q2) in zip(cf.convergents, cf.convergents[1:]):
            assert abs(theta - p1 / q1) < 1 / (q1 * q2)

    def test_precision_exhaustion(self):
        # a double carries ~50 bits of quotients; the golden ratio burns
        # ~log2(phi) + 1 bits per term, so 80 terms cannot be reliable
        with pytest.raises(PrecisionExhausted) as exc:
            continued_fraction((math.sqrt(5) - 1) / 2, 80)
        assert 25 <= exc.value.reliable_terms < 80
        assert exc.value.partial.partial_quotients[:5] == [1] * 5

    def test_witness_bounded(self):
        cf = continued_fraction(math.sqrt(2) - 1, 15)
        v = badly_approximable_witness(cf, 3)
        assert v.bounded and v.kind == "BoundedByPrefix"

    def test_witness_exceeds(self):
        cf = continued_fraction(math.pi - 3, 5)
        v = badly_approximable_witness(cf, 3)
        assert not v.bounded
        assert v.index in (1, 2)  # the [7, 15, ...] head

    def test_witness_rational(self):
        cf = continued_fraction(Fraction(5, 13), 10)
        assert badly_approximable_witness(cf, 3).bounded
