from fractions import Fraction

import pytest

from quadralab.errors import DegenerateParameters, PreconditionViolated
from quadralab.geometry import (
    MINOR_PAIRS,
    CurveContext,
    ProjectivePoint,
    curve_relations_certificate,
    eight_points,
    matrix_m,
    matrix_m_prime,
    minor_factorization_report,
    minor_g,
    minor_h,
    minors_vanish_on_common_quadric_locus,
    point_table,
    quadric_determinant,
    quadrics,
    sigma_matrix,
    sigma_point,
    verify_gamma,
    verify_matrix_consistency,
    x_ring,
)
from quadralab.poly import PolyRing, ideal_slice_membership
from quadralab.scalars import QI_I, QQi, gaussian


class TestMatrices:
    def test_first_row_entries(self):
        ring = x_ring()
        m = matrix_m(4, 9, 25, ring)
        x0, x1, x2, x3 = ring.gens()
        assert m[0] == [-x1, x0, -x3.scale(gaussian(4)), -x2.scale(gaussian(4))]

    def test_first_column_of_transpose_matrix(self):
        ring = x_ring()
        mp = matrix_m_prime(4, 9, 25, ring)
        x0, x1, x2, x3 = ring.gens()
        col = [mp[r][0] for r in range(4)]
        assert col == [-x1, x0, x3.scale(gaussian(4)), x2.scale(gaussian(4))]

    def test_rows_are_signed_relations(self):
        report = verify_matrix_consistency(4, 9, 25)
        assert report["m_matches"] == [
            ("c1", 1), ("c2", 1), ("c3", 1), ("a3", -1), ("a1", -1), ("a2", -1),
        ]
        assert len(report["m_prime_matches"]) == 6


class TestQuadrics:
    def test_q2_at_worked_values(self):
        _, _, q2, _ = quadrics(4, 9, 25)
        ring = x_ring()
        x0, x1, x2, x3 = ring.gens()
        expected = (x0 * x0 + (x1 * x1).scale(gaussian(25))
                    - (x2 * x2).scale(gaussian(100)) - (x3 * x3).scale(gaussian(4)))
        assert q2 == expected

    def test_determinant_values(self):
        assert quadric_determinant(4, 9, 25) == gaussian(-879844)
        assert not quadric_determinant(2, -3, Fraction(-1, 5))

    def test_determinant_identity_symbolic(self):
        ring = PolyRing(("alpha", "beta", "gamma"))
        al, be, ga = ring.gens()
        sp = al + be + ga + al * be * ga
        assert quadric_determinant(al, be, ga) == -(sp * sp)


class TestMinors:
    def test_symbolic_factorizations(self):
        report = minor_factorization_report(symbolic=True)
        assert set(report) == set(MINOR_PAIRS)
        for entry in report.values():
            assert entry["scalar"].num
            assert entry["mirror_scalar"].num

    def test_square_type_minors_have_matching_forms(self):
        report = minor_factorization_report(symbolic=True)
        for pair in ((3, 4), (2, 6), (1, 5)):
            assert report[pair]["q_form_matches"]

    def test_numeric_factorizations(self):
        report = minor_factorization_report(symbolic=False, alpha=4, beta=9,
                                            gamma=25)
        assert len(report) == 15
        assert report[(2, 3)]["scalar"].num.constant_term() == gaussian(2)

    def test_minors_vanish_on_quadric_locus_at_sklyanin_point(self):
        out = minors_vanish_on_common_quadric_locus(2, -3, Fraction(-1, 5))
        assert all(out.values())

    def test_minor_membership_in_single_quadric_ideal(self):
        # h23 = (x0x1 - alpha x2x3) * q up to scalar, so it lies in (q)
        ring = x_ring()
        q, _, _, _ = quadrics(4, 9, 25, ring)
        h = minor_h(matrix_m(4, 9, 25, ring), 2, 3)
        ok, _ = ideal_slice_membership(h, [q], 4)
        assert ok


class TestPointTable:
    def test_twenty_distinct_points(self):
        table = point_table(2, 3, 5)
        assert len(table.points()) == 20 and table.all_distinct()

    def test_top_points(self):
        table = point_table(2, 3, 5)
        assert table.strata["0"][0] == ProjectivePoint((30, 2, 3, 5))
        assert table.strata["1"][0] == ProjectivePoint((2, gaussian(0, -2), -QI_I, -1))

    def test_theta_on_strata(self):
        table = point_table(2, 3, 5)
        e0 = ProjectivePoint((1, 0, 0, 0))
        assert table.theta(e0) == e0
        top = ProjectivePoint((30, 2, 3, 5))
        assert table.theta(top) == ProjectivePoint((-30, 2, 3, 5))

    def test_strata_are_sign_orbits(self):
        table = point_table(2, 3, 5)
        for label in ("0", "1", "2", "3"):
            top = table.strata[label][0]
            assert table.strata[label][1:] == [
                top.sign_flip((2, 3)), top.sign_flip((1, 3)), top.sign_flip((1, 2))
            ]

    def test_zero_root_rejected(self):
        with pytest.raises(DegenerateParameters):
            point_table(0, 1, 1)

    def test_distinct_even_at_sklyanin_parameters(self):
        # roots (1, i, 1) give parameters (1, -1, 1) with zero parameter sum
        table = point_table(1, QI_I, 1)
        assert table.all_distinct()

    def test_nonzero_strata_lie_on_the_curve_quadrics_at_a_sklyanin_point(self):
        # roots (1, i, 1) give parameters (1, -1, 1) with zero parameter
        # sum; the sixteen non-coordinate points must satisfy q and q1
        table = point_table(1, QI_I, 1)
        q, q1, _, _ = quadrics(1, -1, 1)
        for label in ("0", "1", "2", "3"):
            for p in table.strata[label]:
                assert not p.evaluate(q)
                assert not p.evaluate(q1)

    def test_nonzero_strata_miss_the_quadrics_off_the_sklyanin_locus(self):
        table = point_table(2, 3, 5)
        q, _, _, _ = quadrics(4, 9, 25)
        assert any(p.evaluate(q) for p in table.strata["0"])


class TestVerifyGamma:
    def test_worked_fixture(self):
        report = verify_gamma(4, 9, 25, 2, 3, 5)
        assert report.all_pass()
        assert report.kernel_dimension == 6

    def test_gaussian_root_fixture(self):
        # beta = (3i)^2 = -9 exercises the imaginary arithmetic throughout
        report = verify_gamma(4, -9, 25, 2, gaussian(0, 3), 5)
        assert report.all_pass()

    def test_random_fixtures(self):
        import random
        rng = random.Random(19)
        done = 0
        while done < 4:
            a = Fraction(rng.randint(1, 5), rng.randint(1, 3))
            b = Fraction(rng.randint(1, 5), rng.randint(1, 3))
            c = Fraction(rng.randint(1, 5), rng.randint(1, 3))
            al, be, ga = a * a, b * b, c * c
            if not al * be * ga or not al + be + ga + al * be * ga:
                continue
            assert verify_gamma(al, be, ga, a, b, c).all_pass()
            done += 1

    def test_sklyanin_point_refused(self):
        with pytest.raises(PreconditionViolated):
            verify_gamma(2, -3, Fraction(-1, 5), 1, 1, 1)

    def test_wrong_roots_refused(self):
        with pytest.raises(PreconditionViolated):
            verify_gamma(4, 9, 25, 2, 3, 4)


class TestEightPoints:
    def test_unit_parameters(self):
        pts = eight_points(1, 1, 1)
        assert ProjectivePoint((1, 1, 1, 1)) in pts
        assert ProjectivePoint((1, -1, -1, 1)) in pts
        for j in range(4):
            coords = [0] * 4
            coords[j] = 1
            assert ProjectivePoint(coords) in pts

    def test_degenerate_rejected(self):
        with pytest.raises(DegenerateParameters):
            eight_points(0, 1, 1)


class TestCurve:
    def test_membership_and_order_four(self):
        curve = CurveContext(Fraction(-1, 4))
        p = ProjectivePoint((1, QI_I, 2, gaussian(0, 2)))
        assert curve.contains(p)
        q = sigma_point(p)
        assert q == ProjectivePoint((QI_I, 1, gaussian(0, 2), -2))
        assert curve.contains(q)
        assert sigma_point(sigma_point(sigma_point(sigma_point(p)))) == p

    def test_symbolic_certificates(self):
        certs = curve_relations_certificate(symbolic=True)
        assert len(certs) == 6
        # four of the six entries vanish identically, two are curve quadrics
        sizes = sorted(len(c) for c in certs)
        assert sizes == [0, 0, 0, 0, 1, 1]

    def test_numeric_certificates(self):
        certs = curve_relations_certificate(symbolic=False, alpha=Fraction(-1, 4))
        assert len(certs) == 6

    def test_bad_alpha_rejected(self):
        with pytest.raises(PreconditionViolated):
            CurveContext(1)
