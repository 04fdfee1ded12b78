import random
from fractions import Fraction as F

import pytest

from conftest import (gallery_vectors, principal_member, rational,
                      rational_rotation, rotate_vector, villarceau_member,
                      villarceau_udata)
from dupin import (CircleFamilyVector, InvalidVector, NonRationalSolution,
                   NoRealSolution, Verdict, classify, degenerate_test,
                   family_polynomial, principal_test,
                   representative_principal_torus,
                   representative_villarceau_torus, villarceau_complete,
                   villarceau_test)

V = CircleFamilyVector


class TestVillarceauTest:
    def test_villarceau_gallery_member(self):
        w = villarceau_test(gallery_vectors()["f"][0])
        assert (w.r1, w.r2, w.r3, w.r4) == (0, 0, 0, 0)
        assert w.gap == F(25, 169) and w.is_member

    def test_principal_representative_fails_second_equation(self):
        R = F(3, 2)
        w = villarceau_test(representative_principal_torus(1, R))
        assert w.r2 == -2 * R**2 + 4 * R**2 - 2 == F(5, 2)
        assert not w.is_member

    def test_gap_zero_boundary_routes_to_degenerate(self):
        vec = V(1, 1, 0, 0, 0, 0, 2, 0, 0, 0)
        w = villarceau_test(vec)
        assert w.equalities_hold and w.gap == 0 and w.is_horn_boundary
        assert classify(vec).verdict is Verdict.CIRCLE


class TestPrincipalTest:
    def test_representative_second_column_zero(self):
        vec = representative_principal_torus(1, F(3, 2))
        rows_second = [b for _, b in principal_matrix_rows(vec)]
        assert all(entry == 0 for entry in rows_second)
        assert principal_test(vec).is_member

    def test_cone_gallery_vector_minors(self):
        vec = gallery_vectors()["a"][1]
        w = principal_test(vec)
        assert w.is_member
        # hand-checked cross of rows 4 and 6: 2*(-837/16) - (-93/8)*9 = 0
        rows = principal_matrix_rows(vec)
        assert rows[3] == (2, 9)
        assert rows[5] == (F(-93, 8), F(-837, 16))

    def test_crossing_spheres_minor(self):
        beta = F(1)
        vec = V(1, 1, beta, 0, 0, 0, 0, 0, 0, 0)
        w = principal_test(vec)
        assert w.minorsM[(4, 5)] == 4 * beta**3
        assert not w.is_member


def principal_matrix_rows(vec):
    from dupin.components import principal_matrix

    return principal_matrix(vec)


class TestDegenerateTest:
    def test_double_sphere_membership_via_expansion_oracle(self):
        # (x^2+y^2+z^2 - r^2 + 2 beta x)^2 expands to the claimed vector
        from dupin.poly import poly_from_terms

        beta, r = F(2, 3), F(1)
        sphere = poly_from_terms([((2, 0, 0), 1), ((0, 2, 0), 1), ((0, 0, 2), 1),
                                  ((0, 0, 0), -r * r), ((1, 0, 0), 2 * beta)])
        vec = V(r, 1, 2 * beta, 0, 0, 0, 2 * beta**2, 0, 0, 0)
        assert family_polynomial(vec) == sphere * sphere
        w = degenerate_test(vec)
        assert w.rankL <= 1 and w.touchResidual == 0

    def test_circle_flags(self):
        w = degenerate_test(V(1, 1, 0, 0, 0, 0, 2, 0, 0, 0))
        assert w.rankL == 0 and all(w.circleFlags) and w.is_circle

    def test_cone_gallery_vector_is_nondegenerate(self):
        w = degenerate_test(gallery_vectors()["a"][1])
        assert w.rankL == 2


class TestClassify:
    def test_gallery_villarceau_verdict(self):
        assert classify(gallery_vectors()["f"][0]).verdict is Verdict.VILLARCEAU_DUPIN

    def test_gallery_cylinder_pair_principal(self):
        first, second = gallery_vectors()["d"]
        assert classify(first).verdict is Verdict.PRINCIPAL_DUPIN
        assert classify(second).verdict is Verdict.PRINCIPAL_DUPIN

    def test_crossing_spheres_outside(self):
        assert classify(V(1, 1, 1, 0, 0, 0, 0, 0, 0, 0)).verdict is Verdict.OUTSIDE

    def test_degenerate_taxonomy(self):
        assert classify(V(1, 1, 0, 3, 4, 5, 0, 0, 0, 0)).verdict is Verdict.TOUCHING_SPHERES
        assert classify(V(1, 1, 2, 0, 0, 0, 2, 0, 0, 0)).verdict is Verdict.DOUBLE_SPHERE
        assert classify(V(1, 1, 0, 0, 0, 0, 0, 0, 0, 0)).verdict is Verdict.DOUBLE_SPHERE
        assert classify(V(1, 1, 0, 0, 0, 0, 2, 0, 0, 0)).verdict is Verdict.CIRCLE

    def test_horn_boundary(self):
        horn = V(1, 1, 0, -2, 0, 2, -2, 0, 0, 0)
        outcome = classify(horn)
        assert outcome.verdict is Verdict.HORN_BOUNDARY
        assert outcome.principal.is_member  # horn points satisfy the rank conditions

    def test_projective_invariance(self):
        rng = random.Random(41)
        from conftest import random_vector

        for _ in range(60):
            vec = random_vector(rng)
            s = rational(rng)
            if s == 0:
                continue
            assert classify(vec.scaled(s)).verdict is classify(vec).verdict

    def test_rotation_invariance(self):
        rng = random.Random(42)
        from conftest import random_vector

        samples = [random_vector(rng) for _ in range(25)]
        samples += [villarceau_member(rng) for _ in range(10)]
        samples += [principal_member(rng) for _ in range(10)]
        for vec in samples:
            p, q = rational_rotation(rng)
            rotated = rotate_vector(vec, p, q)
            assert classify(rotated).verdict is classify(vec).verdict
            assert degenerate_test(rotated).rankL == degenerate_test(vec).rankL
            assert (principal_test(rotated).is_member
                    == principal_test(vec).is_member)

    def test_villarceau_members_fail_principal_test(self):
        rng = random.Random(43)
        for _ in range(40):
            vec = villarceau_member(rng)
            w = villarceau_test(vec)
            if w.gap > 0:
                assert not principal_test(vec).is_member


class TestVillarceauComplete:
    def test_gallery_completion(self):
        sols = villarceau_complete(1, 1, 0, 1, 0, F(12, 13))
        assert [s.v() for s in sols] == [
            (F(2, 13), 0, F(10, 13), 0), (F(2, 13), 0, F(-10, 13), 0)]
        assert sols[1] == gallery_vectors()["f"][0]

    def test_axis_symmetric_completion(self):
        sols = villarceau_complete(1, 1, 0, 0, 1, 0)
        assert sorted(s.v2 for s in sols) == [-2, 2]
        assert all(s.v1 == 2 and s.v3 == 0 and s.v4 == 0 for s in sols)

    def test_no_real_solution(self):
        with pytest.raises(NoRealSolution):
            villarceau_complete(1, 1, 0, 1, 0, 2)

    def test_non_rational_solution_reports_discriminant(self):
        # gap = 1 - 1/4 = 3/4, U0 = 1, disc = 3: irrational
        with pytest.raises(NonRationalSolution) as err:
            villarceau_complete(1, 1, 0, 1, 0, F(1, 2))
        assert err.value.detail["discriminant"] == "3"

    def test_requires_u2_u3(self):
        with pytest.raises(InvalidVector):
            villarceau_complete(1, 1, 1, 0, 0, 0)

    def test_outputs_pass_villarceau_test(self):
        rng = random.Random(44)
        for _ in range(50):
            r, u0, u1, u2, u3, u4 = villarceau_udata(rng)
            for sol in villarceau_complete(r, u0, u1, u2, u3, u4):
                w = villarceau_test(sol)
                assert w.equalities_hold and w.gap >= 0


class TestRepresentatives:
    def test_principal_display(self):
        rep = representative_principal_torus(1, F(3, 2))
        assert rep.coords() == (1, 0, -3, 0, F(9, 2), F(-9, 2), 0, 0, 0)

    def test_villarceau_corrected_family(self):
        rep = representative_villarceau_torus(13, 12)
        assert rep.coords() == (1, 0, -24, 0, 288, -238, 0, -240, 0)
        w = villarceau_test(rep)
        assert w.equalities_hold and w.gap > 0

    def test_villarceau_preconditions(self):
        with pytest.raises(InvalidVector):
            representative_villarceau_torus(1, 1)
        with pytest.raises(NonRationalSolution) as err:
            representative_villarceau_torus(2, 1)  # w^2 = 3
        assert err.value.detail["w_squared"] == "3"

    def test_principal_preconditions(self):
        with pytest.raises(InvalidVector):
            representative_principal_torus(F(3, 2), 1)
