import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from psl2cd.arithmetic import divisors
from psl2cd.groups import (
    GroupDescriptor,
    OuterExpressionError,
    OuterKind,
    OuterSubgroup,
    PrimePower,
    character_degrees,
    degree_families,
    enumerate_outer_subgroups,
    epsilon,
    group_name,
    parse_outer,
    pgl_descriptor,
    white_parameters,
)

U, WD, T = OuterKind.UNTWISTED, OuterKind.WITH_DIAGONAL, OuterKind.TWISTED


def desc(q: int, kind: OuterKind, d: int) -> GroupDescriptor:
    return GroupDescriptor(PrimePower.from_value(q), OuterSubgroup(kind, d))


class TestPrimePower:
    def test_construction(self):
        pp = PrimePower(3, 2)
        assert (pp.p, pp.f, pp.q) == (3, 2, 9)
        assert PrimePower(3, 2, 9) == pp
        assert PrimePower.from_value(8) == PrimePower(2, 3)

    def test_validation(self):
        with pytest.raises(ValueError):
            PrimePower(4, 2)
        with pytest.raises(ValueError):
            PrimePower(3, 2, 10)
        with pytest.raises(ValueError):
            PrimePower(3, 1)  # q = 3 < 4
        with pytest.raises(ValueError):
            PrimePower.from_value(12)


class TestDescriptors:
    def test_validation(self):
        with pytest.raises(ValueError):
            desc(8, WD, 1)  # no diagonal automorphism at p = 2
        with pytest.raises(ValueError):
            OuterSubgroup(T, 3)  # twisted needs even d
        with pytest.raises(ValueError):
            desc(9, U, 3)  # 3 does not divide f = 2

    def test_trivial(self):
        assert desc(9, U, 1).is_trivial
        assert not desc(9, WD, 1).is_trivial


class TestEpsilon:
    def test_examples(self):
        assert epsilon(PrimePower.from_value(9)) == 1
        assert epsilon(PrimePower.from_value(7)) == -1
        assert epsilon(PrimePower.from_value(13)) == 1

    def test_characteristic_two(self):
        with pytest.raises(ValueError):
            epsilon(PrimePower.from_value(8))


class TestEnumerate:
    def test_q8(self):
        pp = PrimePower.from_value(8)
        assert enumerate_outer_subgroups(pp, True) == [
            OuterSubgroup(U, 1),
            OuterSubgroup(U, 3),
        ]

    def test_q9_proper(self):
        pp = PrimePower.from_value(9)
        assert enumerate_outer_subgroups(pp, False) == [
            OuterSubgroup(U, 2),
            OuterSubgroup(WD, 1),
            OuterSubgroup(WD, 2),
            OuterSubgroup(T, 2),
        ]

    def test_q7_proper(self):
        pp = PrimePower.from_value(7)
        assert enumerate_outer_subgroups(pp, False) == [OuterSubgroup(WD, 1)]

    @settings(deadline=None)
    @given(st.sampled_from([2, 3, 5, 7, 11]), st.integers(min_value=1, max_value=10))
    def test_subgroup_count(self, p, f):
        if p**f < 4 or p**f > 2**40:
            return
        pp = PrimePower(p, f)
        subs = enumerate_outer_subgroups(pp, True)
        tau = len(divisors(f))
        tau_even = sum(1 for d in divisors(f) if d % 2 == 0)
        expected = tau if p == 2 else 2 * tau + tau_even
        assert len(subs) == expected
        assert len(set(subs)) == len(subs)
        assert len(enumerate_outer_subgroups(pp, False)) == expected - 1


class TestWhiteParameters:
    def test_examples(self):
        w = white_parameters(desc(9, WD, 2))
        assert (w.gamma_is_pgl, w.d, w.a, w.m) == (True, 2, 1, 1)
        w = white_parameters(desc(9, T, 2))
        assert (w.gamma_is_pgl, w.d, w.a, w.m) == (False, 2, 1, 1)
        w = white_parameters(desc(64, U, 6))
        assert (w.gamma_is_pgl, w.d, w.a, w.m) == (False, 6, 1, 3)

    def test_two_a_m_decomposition(self):
        pp = PrimePower(3, 12)
        for d in divisors(12):
            for kind in (U, WD):
                w = white_parameters(GroupDescriptor(pp, OuterSubgroup(kind, d)))
                assert w.d == d == 2**w.a * w.m
                assert w.m % 2 == 1
                assert w.gamma_is_pgl == (kind is WD)


KNOWN_DEGREE_SETS = {
    (9, U, 2): [1, 5, 9, 10, 16],  # Sym(6)
    (9, T, 2): [1, 9, 10, 16],  # M10
    (7, WD, 1): [1, 6, 7, 8],  # PGL(2,7)
    (8, U, 3): [1, 7, 8, 21, 27],
    (11, U, 1): [1, 5, 10, 11, 12],
    (16, U, 4): [1, 16, 17, 34, 60, 68],
    (7, U, 1): [1, 3, 6, 7, 8],
    (8, U, 1): [1, 7, 8, 9],
    (9, WD, 1): [1, 8, 9, 10],  # PGL(2,9)
    (9, WD, 2): [1, 9, 10, 16, 20],  # full automorphism group of PSL(2,9)
    (11, WD, 1): [1, 10, 11, 12],
    (27, U, 3): [1, 13, 27, 78, 84],
    (27, WD, 3): [1, 26, 27, 78, 84],
    (32, U, 5): [1, 31, 32, 155, 165],
}


class TestCharacterDegrees:
    @pytest.mark.parametrize("key,expected", list(KNOWN_DEGREE_SETS.items()))
    def test_known_sets(self, key, expected):
        assert character_degrees(desc(*key)) == expected

    def test_classical_psl_pgl_shapes(self):
        for q in (7, 9, 11, 13, 25, 27, 49, 81, 121, 125):
            pp = PrimePower.from_value(q)
            eps = epsilon(pp)
            psl = character_degrees(GroupDescriptor(pp, OuterSubgroup(U, 1)))
            assert psl == sorted({1, (q + eps) // 2, q - 1, q, q + 1})
            pgl = character_degrees(pgl_descriptor(pp))
            assert pgl == sorted({1, q - 1, q, q + 1})
        for q in (8, 16, 32, 64):
            pp = PrimePower.from_value(q)
            assert character_degrees(pgl_descriptor(pp)) == [1, q - 1, q, q + 1]

    def test_invariants_across_descriptors(self):
        for q in (7, 8, 9, 16, 25, 27, 64, 81, 128, 729):
            pp = PrimePower.from_value(q)
            for outer in enumerate_outer_subgroups(pp, True):
                g = GroupDescriptor(pp, outer)
                cd = character_degrees(g)
                assert 1 in cd and q in cd
                assert cd == sorted(set(cd))
                assert max(cd) <= (q + 1) * outer.d

    def test_half_degree_only_for_untwisted_odd(self):
        # (q+eps)/2 < q-1 <= every product-family degree for q > 3, so its
        # presence always comes from the core family
        for q in (9, 25, 27, 49, 81, 625, 729):
            pp = PrimePower.from_value(q)
            half = (q + epsilon(pp)) // 2
            for outer in enumerate_outer_subgroups(pp, True):
                g = GroupDescriptor(pp, outer)
                assert (half in character_degrees(g)) == (outer.kind is U)
        for q in (8, 16, 64):
            pp = PrimePower.from_value(q)
            for outer in enumerate_outer_subgroups(pp, True):
                cd = character_degrees(GroupDescriptor(pp, outer))
                assert (q + 1) // 2 not in cd and (q - 1) // 2 not in cd

    def test_untwisted_chain_divisibility(self):
        for q in (2**12, 3**12):
            pp = PrimePower.from_value(q)
            for d in divisors(pp.f):
                for d_small in divisors(d):
                    _, minus_small, plus_small = degree_families(
                        GroupDescriptor(pp, OuterSubgroup(U, d_small))
                    )
                    _, minus_big, plus_big = degree_families(
                        GroupDescriptor(pp, OuterSubgroup(U, d))
                    )
                    for value in minus_small:
                        assert any(big % value == 0 for big in minus_big)
                    for value in plus_small:
                        assert any(big % value == 0 for big in plus_big)

    def test_s5_sanity(self):
        # PSL(2,4).<phi> is Sym(5) with degrees {1, 4, 5, 6}
        assert character_degrees(desc(4, U, 2)) == [1, 4, 5, 6]


class TestParser:
    def test_canonical_forms(self):
        pp9 = PrimePower.from_value(9)
        assert parse_outer("phi^1", pp9) == OuterSubgroup(U, 2)
        assert parse_outer("delta", pp9) == OuterSubgroup(WD, 1)
        assert parse_outer("delta*phi^1", pp9) == OuterSubgroup(T, 2)
        assert parse_outer("delta,phi^1", pp9) == OuterSubgroup(WD, 2)
        assert parse_outer("", pp9) == OuterSubgroup(U, 1)
        assert parse_outer("phi^2", pp9) == OuterSubgroup(U, 1)  # identity power

    def test_canonicalization_collapses(self):
        pp81 = PrimePower.from_value(81)
        assert parse_outer("delta*phi^1", pp81) == parse_outer("delta*phi^3", pp81)
        assert parse_outer("delta*phi^2,phi^1", pp81) == OuterSubgroup(WD, 4)
        # odd-d twisted generator collapses to the diagonal subgroup
        pp729 = PrimePower.from_value(729)
        assert parse_outer("delta*phi^2", pp729) == OuterSubgroup(WD, 3)

    def test_whole_lattice_reachable(self):
        pp = PrimePower.from_value(81)
        reachable = {
            parse_outer(expr, pp)
            for expr in (
                "", "phi^1", "phi^2", "delta", "delta,phi^1", "delta,phi^2",
                "delta*phi^1", "delta*phi^2", "delta,phi^4",
            )
        }
        assert reachable == set(enumerate_outer_subgroups(pp, True))

    def test_errors_carry_positions(self):
        pp9 = PrimePower.from_value(9)
        with pytest.raises(OuterExpressionError) as err:
            parse_outer("phi^0", pp9)
        assert err.value.position == 0
        with pytest.raises(OuterExpressionError) as err:
            parse_outer("phi^1, banana", pp9)
        assert err.value.position == 7
        with pytest.raises(OuterExpressionError) as err:
            parse_outer("phi^1,, phi^2", pp9)
        assert err.value.position == 6

    def test_delta_rejected_in_characteristic_two(self):
        pp8 = PrimePower.from_value(8)
        with pytest.raises(OuterExpressionError):
            parse_outer("delta", pp8)
        with pytest.raises(OuterExpressionError):
            parse_outer("delta*phi^1", pp8)

    def test_exponent_range(self):
        pp8 = PrimePower.from_value(8)
        assert parse_outer("phi^3", pp8) == OuterSubgroup(U, 1)
        with pytest.raises(OuterExpressionError):
            parse_outer("phi^4", pp8)


class TestNames:
    def test_group_names(self):
        assert group_name(desc(9, U, 1)) == "PSL(2,9)"
        assert group_name(desc(9, U, 2)) == "PSL(2,9).<phi^1>"
        assert group_name(desc(9, WD, 1)) == "PGL(2,9)"
        assert group_name(desc(9, T, 2)) == "PSL(2,9).<delta*phi^1>"
        assert group_name(desc(64, U, 3)) == "PSL(2,64).<phi^2>"
