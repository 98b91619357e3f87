import cmath
import math
import random
import warnings

import pytest

from torsiongen import torsion as T
from torsiongen.errors import (NaturalBoundary, NotAPole, PoleHit,
                               RootOfUnityCollision)
from torsiongen.polyalg import IntPoly, classify_roots, cyclotomic
from torsiongen.rxcore import rational_form, rx_root_of_unity

PHI2 = (3 + math.sqrt(5)) / 2  # the outside figure-eight root


class TestFoxTorsion:
    def test_trefoil_values(self, trefoil):
        # |Delta(1)| = 1, |Delta(1) Delta(-1)| = 3
        assert T.fox_torsion(trefoil, 1) == 1
        assert T.fox_torsion(trefoil, 2) == 3
        assert T.fox_torsion(trefoil, 6) == 0  # zeta_6 is a root

    def test_figure_eight_r3(self, figure_eight):
        assert T.fox_torsion(figure_eight, 3) == 16

    def test_e_series_heads(self, trefoil, figure_eight):
        assert [(r, round(math.exp(v))) for r, v in T.e_series(trefoil, 6)] == [
            (1, 1), (2, 3), (3, 4), (4, 3), (5, 1)]  # r=6 omitted
        assert [(r, round(math.exp(v))) for r, v in T.e_series(figure_eight, 4)] == [
            (1, 1), (2, 5), (3, 16), (4, 45)]

    def test_delta_one_unit_head(self):
        # any Delta with Delta(1) = +-1 starts at log 1 = 0
        for coeffs in ([1, -1, 1], [1, -3, 1], [2, -3, 2]):
            (r1, v1) = T.e_series(IntPoly(coeffs), 1)[0]
            assert r1 == 1 and v1 == 0.0

    def test_fox_oracle_random_reciprocal(self):
        # exact resultant log vs float product log, 1e-9 relative
        rng = random.Random(11)
        count = 0
        while count < 10:
            a, b = rng.randint(-3, 3), rng.randint(-3, 3)
            if a == 0:
                continue
            c = 1 - 2 * (a + b)
            delta = IntPoly([a, b, c, b, a])
            if delta.degree != 4:
                continue
            count += 1
            prof = T.profile_of(delta)
            for r in range(1, 31):
                v = T.fox_torsion(delta, r)
                if v == 0:
                    continue
                fl = T._float_log_torsion(prof, r)
                assert abs(math.log(v) - fl) < 1e-9 * max(1.0, abs(math.log(v)))

    def test_warning_on_non_alexander(self):
        with pytest.warns(UserWarning):
            warnings.simplefilter("always")
            T.e_series(IntPoly([-2, 1]), 3)


class TestEContinued:
    def test_fig8_vs_series(self, figure_eight):
        z = 0.5
        partial = sum(v * z ** r for r, v in T.e_series(figure_eight, 3000))
        assert abs(T.e_continued(figure_eight, z).value - partial) < 1e-6

    def test_trefoil_rational_closed_form(self, trefoil):
        # E = 2 * (average of the two primitive rational forms); both
        # primitive 6th roots have identical |1 - x^l| streams
        z = 0.3
        v = T.e_continued(trefoil, z).value
        w = rx_root_of_unity(6, 1, z).value + rx_root_of_unity(6, 5, z).value
        assert abs(v - w) < 1e-12

    def test_lehmer_natural_boundary(self, lehmer):
        with pytest.raises(NaturalBoundary) as exc:
            T.e_continued(lehmer, 0.5)
        assert len(exc.value.diophantine_roots) == 8

    def test_multiplicity_weighting(self, figure_eight):
        sq = figure_eight.mul(figure_eight)
        z = 0.4
        assert abs(
            T.e_continued(sq, z).value - 2 * T.e_continued(figure_eight, z).value
        ) < 1e-9


class TestPoleSet:
    def test_k8_paper_positions(self, k8_256):
        reports = T.pole_set(k8_256, 4.0)
        locs = sorted((round(p.location.real, 6), p.order) for p in reports)
        assert locs == [(1.0, 2), (1.5, 1), (2.25, 1), (3.375, 1)]

    def test_trefoil_orbit(self, trefoil):
        reports = T.pole_set(trefoil, 2.0)
        assert len(reports) == 6
        assert all(p.order == 1 for p in reports)
        for p in reports:
            assert abs(p.location ** 6 - 1) < 1e-9

    def test_figure_eight_powers(self, figure_eight):
        reports = T.pole_set(figure_eight, 8.0)
        locs = sorted(round(abs(p.location), 4) for p in reports)
        assert locs == [1.0, round(PHI2, 4), round(PHI2 ** 2, 4)]
        assert [p.order for p in sorted(reports, key=lambda q: abs(q.location))][0] == 2

    def test_pole_set_grows_with_radius(self, figure_eight):
        few = T.pole_set(figure_eight, 3.0, compute_residues=False)
        more = T.pole_set(figure_eight, 50.0, compute_residues=False)
        assert len(more) > len(few)

    def test_diophantine_refused(self, lehmer):
        with pytest.raises(NaturalBoundary):
            T.pole_set(lehmer, 4.0)


class TestResidues:
    def test_trefoil_closed_form_at_minus_one(self, trefoil):
        # sum of rational-form residues: -(q/m) sum_l c_l q^l at q = -1
        num = T.residue_at(trefoil, -1.0)
        closed = 0j
        for k in (1, 5):
            form = rational_form(6, k)
            s = sum(c * (-1.0) ** l for l, c in
                    enumerate(form.numerator_coeffs, start=1))
            closed += -(-1.0 / 6) * s
        assert abs(num - closed) < 1e-9

    def test_multiplicity_linearity(self):
        d = IntPoly([-2, 1])
        r1 = T.residue_at(d, 2.0)
        r2 = T.residue_at(d.mul(d), 2.0)
        assert abs(r2 / r1 - 2) < 1e-3

    def test_order_two_detected_not_notapole(self, figure_eight):
        # at z=1 the pole has order 2: never NotAPole; the order-1 residue
        # machinery refuses with PoleHit and laurent_at_one carries the data
        with pytest.raises(PoleHit):
            T.residue_at(figure_eight, 1.0)

    def test_regular_point_is_notapole(self, figure_eight):
        with pytest.raises(NotAPole):
            T.residue_at(figure_eight, 1.7)


class TestLaurent:
    def test_figure_eight_c2(self, figure_eight):
        lau = T.laurent_at_one(figure_eight)
        assert abs(lau.c_minus2 - math.log(PHI2)) < 1e-12
        assert abs(lau.c_minus2 - 0.9624236501192069) < 1e-12

    def test_trefoil_closed_form(self, trefoil):
        lau = T.laurent_at_one(trefoil)
        assert lau.c_minus2 == 0.0
        assert abs(lau.c_minus1 - 2 * (1 / 6) * math.log(1 / 6)) < 1e-12

    def test_k8_c2(self, k8_256):
        assert abs(T.laurent_at_one(k8_256).c_minus2 - math.log(9)) < 1e-12

    def test_numeric_matches_closed(self, figure_eight, trefoil, k8_256):
        for poly in (figure_eight, trefoil, k8_256):
            lau = T.laurent_at_one(poly)
            num = T.laurent_numeric(poly, 0)
            assert abs(num[-2].real - lau.c_minus2) < 1e-4
            assert abs(num[-1].real - lau.c_minus1) < 1e-4

    def test_numeric_c0_from_partition_function(self, figure_eight):
        from torsiongen.rxcore import log_abs_F

        num = T.laurent_numeric(figure_eight, 0)
        expect = -2 * log_abs_F(1 / PHI2)
        assert abs(num[0].real - expect) < 1e-4

    def test_mahler_invariant(self, figure_eight, k8_256):
        for poly in (figure_eight, k8_256):
            assert T.laurent_at_one(poly).c_minus2 >= 0


class TestSlopeAndGordon:
    def test_figure_eight_slope(self, figure_eight):
        slope, ref = T.silver_williams_slope(figure_eight, 60)
        assert abs(ref - math.log(PHI2)) < 1e-12
        assert abs(slope - ref) < 0.01 * ref

    def test_trefoil_slope_exactly_zero(self, trefoil):
        slope, ref = T.silver_williams_slope(trefoil, 60)
        assert slope == 0.0 and ref == 0.0

    def test_k8_slope(self, k8_256):
        slope, ref = T.silver_williams_slope(k8_256, 40)
        assert abs(slope - math.log(9)) < 0.01 * math.log(9)

    def test_gordon_trefoil(self, trefoil):
        v = T.gordon_classify(trefoil)
        assert v.periodic and v.period == 6 and v.evidence == ((6, 1),)

    def test_gordon_figure_eight(self, figure_eight):
        assert not T.gordon_classify(figure_eight).periodic

    def test_gordon_phi12(self):
        v = T.gordon_classify(cyclotomic(12))
        assert v.periodic and v.period == 12

    def test_gordon_equivalence_periodic_direction(self, trefoil):
        # exact table is m-periodic over r = 1..6m, and E is a rational
        # function with denominator (1 - z^m): fit and check at random z
        v = T.gordon_classify(trefoil)
        m = v.period
        table = T.torsion_table(trefoil, 6 * m)
        for r in range(1, 5 * m + 1):
            a = table.entries.get(r)
            b = table.entries.get(r + m)
            assert a == b or (r in table.omitted and (r + m) in table.omitted)
        # numerator from the rational form: N(z) = E(z) (1 - z^m)
        coeffs = [0.0] * m
        for r, val in T.e_series(trefoil, m):
            coeffs[r % m] = val
        rng = random.Random(3)
        for _ in range(10):
            z = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
            if abs(abs(z) - 1) < 0.1:
                continue
            rational = sum(
                c * z ** l for l, c in enumerate(coeffs)
            ) / (1 - z ** m)
            assert abs(T.e_continued(trefoil, z).value - rational) < 1e-9

    def test_gordon_equivalence_nonperiodic_direction(self, figure_eight):
        table = T.torsion_table(figure_eight, 36)
        periodic_for_some_m = False
        for m in range(1, 13):
            if all(table.entries[r] == table.entries[r + m]
                   for r in range(1, 36 - m + 1)):
                periodic_for_some_m = True
        assert not periodic_for_some_m


class TestPeriodicPart:
    def test_trefoil_exact_periodicity(self, trefoil):
        m, a, bound = T.periodic_part_and_bound(trefoil)
        assert m == 6
        assert bound(5) == 0.0  # all roots unimodular: empty bound
        assert [round(v, 4) for v in a] == [
            0.0, 0.0, round(math.log(3), 4), round(math.log(4), 4),
            round(math.log(3), 4), 0.0]

    def test_figure_eight_bound(self, figure_eight):
        m, a, bound = T.periodic_part_and_bound(figure_eight)
        assert m == 1 and a == [0.0]
        rho = 1 / PHI2
        assert abs(bound(10) - 2 * rho ** 10 / (1 - rho ** 10)) < 1e-12

    def test_random_reciprocal_inequality(self):
        # verification runs inside periodic_part_and_bound (raises on failure)
        rng = random.Random(23)
        done = 0
        while done < 5:
            a, b = rng.randint(-3, 3), rng.randint(-3, 3)
            if a == 0:
                continue
            delta = IntPoly([a, b, 1 - 2 * (a + b), b, a])
            if delta.degree != 4 or T.profile_of(delta).diophantine:
                continue
            T.periodic_part_and_bound(delta, r_verify=60)
            done += 1


class TestFried:
    @pytest.mark.parametrize("coeffs", [
        [1, -3, 1], [6, -13, 6], [1, -1, 1], [1, 0, -1, 0, 1],
    ])
    def test_round_trip(self, coeffs):
        delta = IntPoly(coeffs)
        rec = T.fried_reconstruct(T.pole_set(delta, 8.0))
        pairs_expect, rou_expect = T.pair_signature(T.profile_of(delta))
        assert rec.rou == rou_expect
        assert len(rec.pairs) == len(pairs_expect)
        for (p, m), (q, mm) in zip(rec.pairs, pairs_expect):
            assert abs(p - q) < 1e-6 and m == mm

    def test_round_trip_mixed(self, trefoil, figure_eight):
        delta = trefoil.mul(figure_eight)
        rec = T.fried_reconstruct(T.pole_set(delta, 8.0))
        assert rec.rou == [(6, 1)]
        assert len(rec.pairs) == 1
        assert abs(rec.pairs[0][0] - PHI2) < 1e-6 and rec.pairs[0][1] == 2

    def test_round_trip_square(self, figure_eight):
        delta = figure_eight.mul(figure_eight)
        rec = T.fried_reconstruct(T.pole_set(delta, 8.0))
        assert rec.pairs[0][1] == 4

    def test_root_multiset_reciprocal_closed(self, figure_eight):
        rec = T.fried_reconstruct(T.pole_set(figure_eight, 8.0))
        values = [v for v, _ in rec.root_multiset()]
        for v in values:
            assert any(abs(1 / v - w) < 1e-6 for w in values)


class TestOrderOneFactors:
    """Roots at t = 1 (Phi_1 factors) contribute the zero function R_1."""

    def _mixed(self, trefoil, figure_eight):
        return (IntPoly([0, 0, 1]).mul(cyclotomic(6)).mul(figure_eight)
                .mul(cyclotomic(1)))

    def test_laurent_skips_order_one(self, trefoil, figure_eight):
        mixed = self._mixed(trefoil, figure_eight)
        lau = T.laurent_at_one(mixed)
        assert abs(lau.c_minus2 - math.log(PHI2)) < 1e-12

    def test_assembly_matches_per_root_series(self, trefoil, figure_eight):
        mixed = self._mixed(trefoil, figure_eight)
        prof = T.profile_of(mixed.shift_out_zero_roots()[1])
        z = 0.4
        s = 0.0
        for r in range(1, 2000):
            term = 0.0
            for rec in prof.roots:
                if rec.kind == "root_of_unity":
                    if r % rec.order == 0:
                        continue  # per-root prime rule
                    term += rec.multiplicity * math.log(abs(1 - rec.value ** r))
                elif rec.kind == "outside":
                    term += rec.multiplicity * (
                        r * math.log(abs(rec.value))
                        + math.log(abs(1 - rec.value ** (-r)))
                    )
                else:
                    term += rec.multiplicity * math.log(abs(1 - rec.value ** r))
            s += term * z ** r
        assert abs(T.e_continued(mixed, z).value - s) < 1e-9

    def test_pure_phi1_is_zero_function(self):
        phi1 = cyclotomic(1)
        assert T.e_continued(phi1, 0.5).value == 0
        assert T.pole_set(phi1, 4.0) == []
        lau = T.laurent_at_one(phi1)
        assert lau.c_minus2 == lau.c_minus1 == lau.c_0 == 0.0

    def test_fried_cannot_see_phi1(self, trefoil, figure_eight):
        # Phi_1 factors are invisible in E (Fried needs no mu_infty roots);
        # everything else round-trips
        mixed = self._mixed(trefoil, figure_eight)
        rec = T.fried_reconstruct(T.pole_set(mixed, 8.0))
        assert rec.rou == [(6, 1)]
        assert len(rec.pairs) == 1 and rec.pairs[0][1] == 2

    def test_trefoil_numeric_c2_tight(self, trefoil):
        # the spec example pins the trefoil numeric c_-2 at 1e-6
        num = T.laurent_numeric(trefoil, 0)
        assert abs(num[-2]) <= 1e-6


class TestReidemeister:
    def test_single_delta(self, figure_eight):
        assert T.reidemeister_tau([figure_eight], 3) == 16

    def test_alternating_cancellation(self, figure_eight):
        assert T.reidemeister_tau([figure_eight, figure_eight], 5) == 1

    def test_mixed_fraction(self, figure_eight):
        from fractions import Fraction

        tau = T.reidemeister_tau([figure_eight, IntPoly([-2, 1])], 3)
        assert tau == Fraction(16, 7)

    def test_collision(self, trefoil):
        with pytest.raises(RootOfUnityCollision):
            T.reidemeister_tau([trefoil], 6)

    def test_j_continued_alternates(self, figure_eight, trefoil):
        z = 0.3
        j = T.reidemeister_j_continued([figure_eight, trefoil], z).value
        a = T.e_continued(figure_eight, z).value
        b = T.e_continued(trefoil, z).value
        assert abs(j - (a - b)) < 1e-10
