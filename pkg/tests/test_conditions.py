import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import (cubic_cone_member, nonzero_rational, principal_member,
                      rational, villarceau_member)
from dupin import (DarbouxQuartic, IntermediateDarboux, InvalidVector,
                   NotACubicCyclide, aggregates, cubic_dupin_conditions, expand,
                   quartic_dupin_conditions, to_intermediate)

small_fracs = st.fractions(min_value=-4, max_value=4, max_denominator=5)


def intermediate_strategy():
    return st.tuples(*([small_fracs] * 10)).map(lambda t: IntermediateDarboux(*t))


class TestAggregates:
    def test_double_sphere(self):
        s = F(3, 2)
        q = IntermediateDarboux(-2 * s, -2 * s, -2 * s, 0, 0, 0, 0, 0, 0, s * s)
        a = aggregates(q)
        assert a.C0 == -6 * s
        assert a.W1 == 12 * s * s
        assert a.W2 == -8 * s**3
        assert a.E0 == 0 and a.W4 == 0

    def test_all_zero(self):
        a = aggregates(IntermediateDarboux(0, 0, 0, 0, 0, 0, 0, 0, 0, 0))
        assert (a.B0, a.C0, a.E0, a.W1, a.W2, a.W3, a.W4) == (0,) * 7

    def test_torus_intermediate(self):
        q = to_intermediate_of_torus()
        a = aggregates(q)
        assert a.C0 == F(-21, 2)
        # c1c2 + (c1+c2)c3 = 169/4 - 13*(5/2)
        assert a.W1 == F(169, 4) - 13 * F(5, 2)
        assert a.W1 == F(39, 4)


def to_intermediate_of_torus():
    from dupin import CircleFamilyVector

    return to_intermediate(CircleFamilyVector(1, 1, 0, -3, 0, F(9, 2),
                                              F(-9, 2), 0, 0, 0))


class TestQuarticConditions:
    def test_double_sphere_admitted(self):
        q = IntermediateDarboux(-2, -2, -2, 0, 0, 0, 0, 0, 0, 1)
        assert quartic_dupin_conditions(q).all_vanish

    def test_torus_intermediate_vanishes(self):
        assert quartic_dupin_conditions(to_intermediate_of_torus()).all_vanish

    def test_nonmember_has_nonzero_N1(self):
        rep = quartic_dupin_conditions(
            IntermediateDarboux(1, 2, 0, 0, 0, 0, 0, 0, 0, 0))
        assert rep.N1 == -2
        assert not rep.all_vanish

    @given(intermediate_strategy())
    @settings(max_examples=80)
    def test_swap12_permutes_the_report(self, q):
        swapped = IntermediateDarboux(q.c2, q.c1, q.c3, q.d2, q.d1, q.d3,
                                      q.e2, q.e1, q.e3, q.f0)
        a, b = quartic_dupin_conditions(q), quartic_dupin_conditions(swapped)
        assert (b.K1, b.K2) == (a.K2, a.K1)
        assert (b.L1, b.L2, b.L3) == (a.L2, a.L1, a.L3)
        assert (b.M1, b.M2, b.M3) == (a.M2, a.M1, a.M3)
        assert (b.N1, b.N2, b.N3) == (a.N1, a.N2, a.N3)
        # the third K picks up a sign: the base polynomial is antisymmetric
        # under the 2<->3 index swap
        assert b.K3 == -a.K3

    @given(intermediate_strategy(),
           small_fracs.filter(lambda s: s != 0))
    @settings(max_examples=60)
    def test_coordinate_scaling_preserves_all_vanish(self, q, s):
        scaled = IntermediateDarboux(
            s**2 * q.c1, s**2 * q.c2, s**2 * q.c3,
            s**2 * q.d1, s**2 * q.d2, s**2 * q.d3,
            s**3 * q.e1, s**3 * q.e2, s**3 * q.e3, s**4 * q.f0)
        assert (quartic_dupin_conditions(q).all_vanish
                == quartic_dupin_conditions(scaled).all_vanish)

    def test_component_members_all_vanish(self):
        rng = random.Random(21)
        for _ in range(40):
            vec = villarceau_member(rng) if rng.random() < 0.5 else principal_member(rng)
            if vec.u0 == 0:
                continue
            assert quartic_dupin_conditions(to_intermediate(vec)).all_vanish, vec


class TestCubicConditions:
    def test_u0_zero_villarceau_member_vanishes(self):
        rng = random.Random(31)
        seen = 0
        while seen < 25:
            vec = villarceau_member(rng, u0=0)
            report = cubic_dupin_conditions(expand(vec))
            assert report.all_vanish, vec
            seen += 1

    def test_u0_zero_principal_member_vanishes(self):
        rng = random.Random(32)
        for _ in range(25):
            vec = cubic_cone_member(rng)
            assert cubic_dupin_conditions(expand(vec)).all_vanish, vec

    def test_plane_pair_degenerate_admitted(self):
        q = DarbouxQuartic(0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0)
        assert cubic_dupin_conditions(q).all_vanish

    def test_rejects_quartic_input(self):
        q = DarbouxQuartic(1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0)
        with pytest.raises(InvalidVector):
            cubic_dupin_conditions(q)

    def test_rejects_no_cubic_terms(self):
        q = DarbouxQuartic(0, 0, 0, 0, 1, 1, 1, 0, 0, 0, 0, 0, 0, -1)
        with pytest.raises(NotACubicCyclide):
            cubic_dupin_conditions(q)

    def test_detects_non_dupin_cubic(self):
        rng = random.Random(33)
        hits = 0
        for _ in range(40):
            q = DarbouxQuartic(0, nonzero_rational(rng), rational(rng), rational(rng),
                               *[rational(rng) for _ in range(10)])
            if not cubic_dupin_conditions(q).all_vanish:
                hits += 1
        assert hits > 30  # random cubics are overwhelmingly not Dupin
