import random
from fractions import Fraction

import pytest

from quadralab.errors import PreconditionViolated
from quadralab.freealg import generators
from quadralab.geometry import ProjectivePoint, point_table
from quadralab.linalg import identity_matrix, mats_equal, proportional_matrices
from quadralab.poly import FunctionField, PolyRing
from quadralab.presentations import sklyanin_relations
from quadralab.scalars import QI_I, QQi, gaussian
from quadralab.symmetry import (
    ChlPsi,
    LinearAutomorphism,
    chl_rho_values,
    contragredient_table,
    gamma_maps,
    heisenberg_checks,
    orbits,
    permutation_type_map,
    point_action_is_faithful,
    preserves_relations,
    psi_maps,
    sklyanin_criterion,
)
from quadralab.presentations import CHLParams


@pytest.fixture(scope="module")
def psis():
    return psi_maps(2, 3, 5)


@pytest.fixture(scope="module")
def table():
    return point_table(2, 3, 5)


class TestPreservation:
    def test_psi_maps_preserve(self, psis):
        space = sklyanin_relations(4, 9, 25)
        for psi in psis:
            assert preserves_relations(psi, space)

    def test_sign_maps_preserve_any_parameters(self):
        space = sklyanin_relations(2, 3, 5)
        for g in gamma_maps():
            assert preserves_relations(g, space)

    def test_plain_swap_fails(self):
        space = sklyanin_relations(2, 3, 5)
        swap = LinearAutomorphism(QQi, [
            [0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
        assert not preserves_relations(swap, space)

    def test_closed_under_composition_and_inverse(self, psis):
        space = sklyanin_relations(4, 9, 25)
        assert preserves_relations(psis[0].compose(psis[1]), space)
        assert preserves_relations(psis[2].inverse(), space)


class TestCriterion:
    def test_psi_columns_satisfy_it(self):
        a, b, c = gaussian(2), gaussian(3), gaussian(5)
        i = QI_I
        assert sklyanin_criterion((b * c, -i, -i * b, -c), (4, 9, 25), (1, 2, 3))

    def test_all_ones_fails(self):
        assert not sklyanin_criterion((1, 1, 1, 1), (4, 9, 25), (1, 2, 3))

    def test_matches_preservation_on_random_scalars(self):
        rng = random.Random(7)
        space = sklyanin_relations(4, 9, 25)
        checked = 0
        for _ in range(40):
            lams = [gaussian(Fraction(rng.randint(-5, 5), rng.randint(1, 4)),
                             Fraction(rng.randint(-5, 5), rng.randint(1, 4)))
                    for _ in range(4)]
            if not all(lams):
                continue
            phi = permutation_type_map(lams, (1, 2, 3))
            assert sklyanin_criterion(lams, (4, 9, 25), (1, 2, 3)) == \
                preserves_relations(phi, space)
            checked += 1
        assert checked > 25


class TestGroupStructure:
    def test_full_report(self):
        report = heisenberg_checks(2, 3, 5)
        failing = [k for k, v in report.as_dict().items() if not v]
        assert not failing

    def test_square_scalar(self, psis):
        # psi1^2 is -i * (second root) * (third root) times the involution
        g1 = gamma_maps()[0]
        scal = proportional_matrices(QQi, psis[0].compose(psis[0]).matrix, g1.matrix)
        assert scal == gaussian(0, -15)

    def test_group_commutator_is_i(self, psis):
        comm = (psis[0].compose(psis[1])
                .compose(psis[0].inverse()).compose(psis[1].inverse()))
        assert comm.is_scalar() == QI_I

    def test_dual_tables_are_inverses(self, psis):
        stated = contragredient_table(2, 3, 5)
        for t in range(3):
            assert mats_equal(stated[t], psis[t].inverse().matrix)


class TestPointAction:
    def test_displayed_images(self, psis):
        top = ProjectivePoint((30, 2, 3, 5))
        assert psis[0].on_point(top) == ProjectivePoint((2, gaussian(0, -2), QI_I, 1))
        assert psis[1].on_point(top) == ProjectivePoint((3, 1, gaussian(0, -3), QI_I))
        assert psis[2].on_point(top) == ProjectivePoint((5, QI_I, 1, gaussian(0, -5)))

    def test_twenty_point_set_preserved(self, psis, table):
        pts = set(table.points())
        for psi in psis:
            assert {psi.on_point(p) for p in pts} == pts

    def test_orbit_partition(self, psis, table):
        non_coord = [p for label in ("0", "1", "2", "3") for p in table.strata[label]]
        parts = orbits(non_coord, list(psis))
        assert len(parts) == 1 and len(parts[0]) == 16
        fixed = orbits(table.strata["inf"], list(gamma_maps()))
        assert [len(o) for o in fixed] == [1, 1, 1, 1]
        one_stratum = orbits(table.strata["1"], list(gamma_maps()))
        assert len(one_stratum) == 1 and len(one_stratum[0]) == 4

    def test_faithful_and_sign_maps_fix_nothing(self, psis, table):
        non_coord = [p for label in ("0", "1", "2", "3") for p in table.strata[label]]
        assert point_action_is_faithful(non_coord, psis[0], psis[1])
        for g in gamma_maps():
            for p in non_coord:
                assert g.on_point(p) != p


class TestChlPsi:
    def test_rho_values(self):
        params = CHLParams(gaussian(1), gaussian(2), gaussian(-4), gaussian(2))
        rho2, rho3 = chl_rho_values(params)
        assert rho2 == gaussian(9)
        # rho3 = -da/(bc); the sign makes the map an automorphism
        assert rho3 == gaussian(Fraction(1, 4))

    def test_numeric_fixture(self):
        psi = ChlPsi(1, 2, -4, 2)
        results = psi.verify()
        failing = [k for k, v in results.items() if not v]
        assert not failing
        assert psi.preserves_z_relations()

    def test_symbolic(self):
        ring = PolyRing(("a", "b", "c", "d"))
        F = FunctionField(ring)
        a, b, c, d = F.gens()
        psi = ChlPsi(a, b, c, d, field=F)
        results = psi.verify()
        failing = [k for k, v in results.items() if not v]
        assert not failing

    def test_vanishing_denominator_reported(self):
        with pytest.raises(PreconditionViolated):
            ChlPsi(1, 0, 1, 0)  # bc = 0 kills the second ratio

    def test_order_four_on_the_nose(self):
        psi = ChlPsi(1, 2, -4, 2)
        assert mats_equal(psi.map.power(4).matrix, identity_matrix(psi.field))
        assert psi.map.compose(psi.map).matrix[0][0] == psi.field.coerce(-1)

    def test_rho3_sign_is_forced(self):
        # with q3^4 = +da/(bc) the image of the third commutator relation
        # escapes the relation row space, so the map fails to extend
        from quadralab.extension import adjoin_fourth_root
        from quadralab.freealg import FreeElement
        from quadralab.linalg import SparseEchelon
        from quadralab.presentations import chl_z_relations
        from quadralab.scalars import QQi

        a, b, c, d = (gaussian(v) for v in (1, 2, -4, 2))
        rho2 = ((a + b - c + d) * (-a + b - c - d)
                / ((-a + b + c + d) * (a + b + c - d)))
        rho3_unsignd = (d * a) / (b * c)
        tower = adjoin_fourth_root(QQi, "q2", rho2)
        tower = adjoin_fourth_root(tower, "q3", rho3_unsignd)
        q2 = tower.coerce(tower.base.root())
        q3 = tower.root()
        taus = (-(q2 * q3), (q2 * q3).inverse(), q2 / q3, q3 / q2)
        zero = tower.zero()
        m = [[zero] * 4 for _ in range(4)]
        m[1][0], m[0][1], m[3][2], m[2][3] = taus
        bad = LinearAutomorphism(tower, m)
        space = chl_z_relations(1, 2, -4, 2, verify=False)
        lifted = [FreeElement({w: tower.coerce(v) for w, v in e.terms.items()})
                  for e in space.elements]
        ech = SparseEchelon(tower)
        for e in lifted:
            ech.insert(e.coefficient_vector(2))
        c3 = lifted[4]
        assert ech.reduce(bad(c3).coefficient_vector(2))
