import os
from fractions import Fraction

import pytest

from quadralab.errors import DegreeCapExceeded
from quadralab.freealg import generators
from quadralab.graded import GradedQuotient, degree_cap, verify_certificate
from quadralab.presentations import chl_relations, sklyanin_relations
from quadralab.scalars import gaussian


@pytest.fixture(scope="module")
def generic():
    return GradedQuotient(sklyanin_relations(2, 3, 5))


@pytest.fixture(scope="module")
def sklyanin():
    return GradedQuotient(sklyanin_relations(2, -3, Fraction(-1, 5)))


class TestSliceRanks:
    def test_degree_two_is_the_relations(self, generic):
        assert generic.exact.rank(2) == 6

    def test_degree_three_generic(self, generic):
        assert generic.exact.rank(3) == 48  # dim A_3 = 64 - 48 = 16

    def test_degree_three_polynomial_ring(self):
        quotient = GradedQuotient(chl_relations(1, -1, 0, 0))
        assert quotient.exact.rank(3) == 44  # dim 20 = C(6,3)


class TestHilbert:
    def test_sklyanin_matches_polynomial_ring(self, sklyanin):
        assert sklyanin.hilbert_function(4, backend="exact").dims == [1, 4, 10, 20, 35]

    def test_generic_prefix(self, generic):
        prof = generic.hilbert_function(6, backend="modular")
        assert prof.dims == [1, 4, 10, 16, 19, 20, 20]
        assert prof.sqrt_minus_one == 256

    def test_backends_agree_to_degree_four(self, generic, sklyanin):
        for quotient in (generic, sklyanin,
                         GradedQuotient(chl_relations(1, 2, -4, 2))):
            exact = quotient.hilbert_function(4, backend="exact").dims
            modular = quotient.hilbert_function(4, backend="modular").dims
            assert exact == modular

    def test_degree_two_dimension_is_always_ten(self):
        import random
        rng = random.Random(53)
        for _ in range(10):
            params = [gaussian(rng.randint(-5, 5), rng.randint(-2, 2))
                      for _ in range(3)]
            quotient = GradedQuotient(sklyanin_relations(*params))
            assert quotient.dimension(2, backend="exact") == 10

    def test_always_one_four_ten(self):
        quotient = GradedQuotient(chl_relations(1, 2, -4, 2))
        assert quotient.hilbert_function(2, backend="exact").dims == [1, 4, 10]

    def test_auto_backend_tags(self, generic):
        prof = generic.hilbert_function(5, backend="auto")
        assert prof.backends[4] == "exact" and prof.backends[5] == "modular"
        assert "modular" in prof.backend

    @pytest.mark.parametrize("params", [(0, 0, 0), (0, 3, -3)])
    def test_degenerate_parameter_sum_zero_points_grow_like_polynomials(self, params):
        # both have vanishing parameter sum, so polynomial-type growth
        quotient = GradedQuotient(sklyanin_relations(*params))
        assert quotient.hilbert_function(4, backend="exact").dims == [1, 4, 10, 20, 35]

    def test_exact_confirms_the_sequence_through_degree_six(self, generic):
        # upgrades the modular evidence to an exact computation: the
        # recursive slice construction keeps degree 6 cheap
        prof = generic.hilbert_function(6, backend="exact")
        assert prof.dims == [1, 4, 10, 16, 19, 20, 20]
        assert prof.all_exact()


class TestBackendGuards:
    def test_modular_refuses_function_field_relations(self):
        from quadralab.errors import PreconditionViolated
        from quadralab.poly import FunctionField, PolyRing

        from quadralab.presentations import chl_z_relations

        F = FunctionField(PolyRing(("a", "b", "c", "d")))
        a, b, c, d = F.gens()
        quotient = GradedQuotient(chl_z_relations(a, b, c, d, field=F, verify=False))
        with pytest.raises(PreconditionViolated):
            quotient.dimension(3, backend="modular")

    def test_degree_zero_and_one_profiles(self, generic):
        prof = generic.hilbert_function(1, backend="auto")
        assert prof.dims == [1, 4]
        assert prof.backend == "exact"


class TestDegreeCap:
    def test_cap_enforced(self, generic):
        cap = degree_cap()
        with pytest.raises(DegreeCapExceeded):
            generic.hilbert_function(cap + 1)

    def test_env_override(self, generic, monkeypatch):
        monkeypatch.setenv("QUADRALAB_DEGREE_CAP", "3")
        with pytest.raises(DegreeCapExceeded):
            generic.exact.slice(4)
        monkeypatch.delenv("QUADRALAB_DEGREE_CAP")


class TestNormalForm:
    def test_relation_reduces_to_zero(self, generic):
        for e in generic.space.elements:
            assert generic.normal_form(e).is_zero()

    def test_idempotent_and_difference_in_ideal(self, generic):
        x = generators()
        f = x[1] * x[0]
        nf = generic.normal_form(f)
        assert generic.normal_form(nf) == nf
        assert generic.contains(f - nf)

    def test_linear(self, generic):
        x = generators()
        f, g = x[1] * x[0], x[2] * x[3]
        lhs = generic.normal_form(f + g)
        rhs = generic.normal_form(f) + generic.normal_form(g)
        assert lhs == rhs

    def test_power_of_first_generator_is_reduced(self, generic):
        x = generators()
        f = x[0] * x[0] * x[0]
        assert generic.normal_form(f) == f


class TestCentrality:
    def test_squares_central_generic(self, generic):
        x = generators()
        for g in range(4):
            ok, failing = generic.is_central(x[g] * x[g])
            assert ok and failing is None

    def test_square_not_central_at_sklyanin_point(self, sklyanin):
        x = generators()
        ok, failing = sklyanin.is_central(x[0] * x[0])
        assert not ok and failing is not None

    def test_central_pair_at_sklyanin_point(self, sklyanin):
        x = generators()
        sq = [g * g for g in x]
        omega0 = -sq[0] + sq[1] + sq[2] + sq[3]
        omega1 = (sq[0] + sq[1].scale(gaussian(Fraction(3, 5)))
                  - sq[2].scale(gaussian(Fraction(-1, 5)))
                  + sq[3].scale(gaussian(-3)))
        assert sklyanin.is_central(omega0)[0]
        assert sklyanin.is_central(omega1)[0]


class TestCertificates:
    def test_roundtrip(self, generic):
        x = generators()
        f = x[1] * x[0]
        diff = f - generic.normal_form(f)
        cert = generic.membership_certificate(diff)
        assert cert is not None
        assert verify_certificate(generic.space, cert, diff)

    def test_non_member(self, generic):
        x = generators()
        assert generic.membership_certificate(x[0] * x[0]) is None
