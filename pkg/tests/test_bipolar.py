"""Bipolar frameworks: derived conflicts, reduction and graph augmentation."""

import random

import pytest

import oracles
from arglab import (
    ALL_KINDS,
    ArgumentFramework,
    AttackKind,
    BipolarFramework,
    DomainError,
    FlowOrder,
    Semantics,
    TripolarGraph,
    augment_bipolar,
    augment_prudent,
    enumerate_extensions,
    indirect_attacks,
    support_reachable,
    to_dung,
)
from arglab.tripolar import from_framework


def pairs(*specs):
    return frozenset(tuple(s) for s in specs)


class TestConstruction:
    def test_attack_support_overlap_rejected(self):
        with pytest.raises(DomainError):
            BipolarFramework("AB", [("A", "B")], [("A", "B")])

    def test_endpoints_checked(self):
        with pytest.raises(DomainError):
            BipolarFramework("AB", [], [("A", "C")])

    def test_all_kinds_is_the_closed_enumeration(self):
        assert ALL_KINDS == frozenset(AttackKind)
        assert len(AttackKind) == 6


class TestSupportChains:
    def test_chain_of_length_two(self):
        baf = BipolarFramework("ABC", [], [("A", "B"), ("B", "C")])
        assert support_reachable(baf, "A", "B")
        assert support_reachable(baf, "A", "C")
        assert not support_reachable(baf, "C", "A")

    def test_chains_need_at_least_one_edge(self):
        baf = BipolarFramework("AB", [], [("A", "B")])
        assert not support_reachable(baf, "A", "A")
        assert not support_reachable(baf, "B", "B")

    def test_support_cycle_reaches_itself(self):
        baf = BipolarFramework("AB", [], [("A", "B"), ("B", "A")])
        assert support_reachable(baf, "A", "A")


class TestDerivationKinds:
    def test_supported(self):
        baf = BipolarFramework("ABC", [("B", "C")], [("A", "B")])
        assert indirect_attacks(baf, [AttackKind.SUPPORTED]) == {
            (AttackKind.SUPPORTED, ("A", "C"))
        }

    def test_secondary(self):
        baf = BipolarFramework("ABC", [("A", "B")], [("B", "C")])
        assert indirect_attacks(baf, [AttackKind.SECONDARY]) == {
            (AttackKind.SECONDARY, ("A", "C"))
        }

    def test_extended(self):
        baf = BipolarFramework("ABC", [("C", "B")], [("C", "A")])
        assert indirect_attacks(baf, [AttackKind.EXTENDED]) == {
            (AttackKind.EXTENDED, ("A", "B"))
        }

    def test_mediated(self):
        baf = BipolarFramework("ABC", [("A", "C")], [("B", "C")])
        assert indirect_attacks(baf, [AttackKind.MEDIATED]) == {
            (AttackKind.MEDIATED, ("A", "B"))
        }

    def test_super_mediated_adds_supported_attack_case(self):
        baf = BipolarFramework("ABCX", [("X", "C")], [("A", "X"), ("B", "C")])
        assert indirect_attacks(baf, [AttackKind.MEDIATED]) == {
            (AttackKind.MEDIATED, ("X", "B"))
        }
        assert indirect_attacks(baf, [AttackKind.SUPER_MEDIATED]) == {
            (AttackKind.SUPER_MEDIATED, ("X", "B")),
            (AttackKind.SUPER_MEDIATED, ("A", "B")),
        }

    def test_super_extended_adds_secondary_attack_case(self):
        baf = BipolarFramework("ABCY", [("C", "Y")], [("C", "A"), ("Y", "B")])
        assert indirect_attacks(baf, [AttackKind.EXTENDED]) == {
            (AttackKind.EXTENDED, ("A", "Y"))
        }
        assert indirect_attacks(baf, [AttackKind.SUPER_EXTENDED]) == {
            (AttackKind.SUPER_EXTENDED, ("A", "Y")),
            (AttackKind.SUPER_EXTENDED, ("A", "B")),
        }

    def test_super_subsumes_plain_when_both_requested(self):
        baf = BipolarFramework("ABCX", [("X", "C")], [("A", "X"), ("B", "C")])
        both = indirect_attacks(baf, [AttackKind.MEDIATED, AttackKind.SUPER_MEDIATED])
        assert both == indirect_attacks(baf, [AttackKind.SUPER_MEDIATED])

    def test_matches_brute_force_on_random_frameworks(self):
        rng = random.Random(11)
        for _ in range(120):
            args, atts = oracles.random_af(rng, 5, 0.3)
            sups = {(x, y) for x in args for y in args if rng.random() < 0.25} - atts
            baf = BipolarFramework(args, atts, sups)
            want = oracles.derived_attacks(args, atts, sups)
            for kind in AttackKind:
                got = {p for k, p in indirect_attacks(baf, [kind])}
                assert got == want[kind.value], kind


SAMPLE_BAF = dict(
    arguments="ABCDE",
    attacks=[("C", "B"), ("C", "D"), ("D", "C"), ("E", "E")],
    supports=[("A", "B"), ("D", "E")],
)


class TestSampleBipolar:
    def baf(self):
        return BipolarFramework(**SAMPLE_BAF)

    def test_all_kind_derivations(self):
        assert indirect_attacks(self.baf()) == {
            (AttackKind.SUPPORTED, ("D", "E")),
            (AttackKind.SECONDARY, ("C", "E")),
            (AttackKind.SUPER_MEDIATED, ("E", "D")),
            (AttackKind.SUPER_MEDIATED, ("D", "D")),
            (AttackKind.SUPER_MEDIATED, ("C", "A")),
            (AttackKind.SUPER_EXTENDED, ("E", "C")),
        }

    def test_reduction_with_every_kind(self):
        af = to_dung(self.baf())
        assert af.arguments == tuple("ABCDE")
        assert af.attacks == pairs(
            ("C", "B"), ("C", "D"), ("D", "C"), ("E", "E"),
            ("C", "A"), ("C", "E"), ("D", "D"), ("D", "E"), ("E", "C"), ("E", "D"),
        )
        assert enumerate_extensions(af, Semantics.AD) == (frozenset(), frozenset("C"))
        assert enumerate_extensions(af, Semantics.CO) == (frozenset(), frozenset("C"))
        assert enumerate_extensions(af, Semantics.GR) == (frozenset(),)
        assert enumerate_extensions(af, Semantics.PR) == (frozenset("C"),)
        assert enumerate_extensions(af, Semantics.ST) == (frozenset("C"),)

    def test_reduction_with_secondary_and_super_extended(self):
        af = to_dung(self.baf(), [AttackKind.SECONDARY, AttackKind.SUPER_EXTENDED])
        assert af.attacks == pairs(
            ("C", "B"), ("C", "D"), ("D", "C"), ("E", "E"), ("C", "E"), ("E", "C")
        )
        assert set(enumerate_extensions(af, Semantics.AD)) == {
            frozenset(s) for s in ("", "A", "C", "D", "AC", "AD", "BD", "ABD")
        }
        assert set(enumerate_extensions(af, Semantics.CO)) == {
            frozenset(s) for s in ("A", "AC", "ABD")
        }
        assert enumerate_extensions(af, Semantics.GR) == (frozenset("A"),)
        assert set(enumerate_extensions(af, Semantics.PR)) == {
            frozenset("AC"), frozenset("ABD")
        }
        assert enumerate_extensions(af, Semantics.ST) == (frozenset("AC"),)


class TestFlowOrder:
    def test_entries_sorted_by_position(self):
        flow = FlowOrder([("B", 1, 2), ("A", 1, 1), ("C", 2, 1)])
        assert flow.entries == (("A", 1, 1), ("B", 1, 2), ("C", 2, 1))

    def test_precedes(self):
        flow = FlowOrder({"A": (1, 1), "B": (1, 2)})
        assert flow.precedes("A", "B")
        assert not flow.precedes("B", "A")

    def test_duplicate_argument_rejected(self):
        with pytest.raises(DomainError):
            FlowOrder([("A", 1, 1), ("A", 2, 1)])

    def test_duplicate_position_rejected(self):
        with pytest.raises(DomainError):
            FlowOrder([("A", 1, 1), ("B", 1, 1)])

    def test_positions_must_be_positive(self):
        with pytest.raises(DomainError):
            FlowOrder([("A", 0, 1)])

    def test_unknown_argument(self):
        with pytest.raises(DomainError):
            FlowOrder([("A", 1, 1)]).position("B")


def chain_flow(names):
    return FlowOrder([(a, i + 1, 1) for i, a in enumerate(names)])


class TestAugmentPrudent:
    def test_attack_chain_gains_one_attack_and_two_supports(self):
        af = ArgumentFramework("ABCD", [("B", "A"), ("C", "B"), ("D", "C")])
        got = augment_prudent(af, chain_flow("ABCD"))
        assert got.attacks == pairs(("B", "A"), ("C", "B"), ("D", "C"), ("D", "A"))
        assert got.supports == pairs(("C", "A"), ("D", "B"))
        assert not got.dependencies

    def test_two_cycle_adds_nothing(self):
        af = ArgumentFramework("CD", [("C", "D"), ("D", "C")])
        got = augment_prudent(af, chain_flow("CD"))
        assert got.attacks == af.attacks
        assert not got.supports

    def test_earlier_sources_are_filtered(self):
        af = ArgumentFramework("ABC", [("A", "B"), ("B", "C")])
        got = augment_prudent(af, chain_flow("ABC"))
        assert got.attacks == af.attacks
        assert not got.supports
        reversed_flow = FlowOrder([("C", 1, 1), ("B", 2, 1), ("A", 3, 1)])
        again = augment_prudent(af, reversed_flow)
        assert again.supports == pairs(("A", "C"))

    def test_flow_must_cover_all_arguments(self):
        af = ArgumentFramework("AB", [("A", "B")])
        with pytest.raises(DomainError):
            augment_prudent(af, FlowOrder([("A", 1, 1)]))


D1_STEP4 = TripolarGraph(
    "ABCDE", [("B", "A"), ("C", "B"), ("D", "C"), ("E", "B")]
)
D1_KINDS = (AttackKind.SUPPORTED, AttackKind.SECONDARY, AttackKind.SUPER_MEDIATED)
D1_FLOW = FlowOrder([("A", 1, 1), ("B", 1, 2), ("C", 2, 1), ("D", 3, 1), ("E", 4, 1)])


class TestAugmentBipolar:
    def test_single_pass(self):
        got = augment_bipolar(D1_STEP4, D1_KINDS, D1_FLOW, 1)
        assert got.attacks == D1_STEP4.attacks | pairs(("D", "A"), ("E", "D"))
        assert got.supports == pairs(("C", "A"), ("D", "B"), ("E", "A"))

    def test_second_pass_adds_a_support(self):
        got = augment_bipolar(D1_STEP4, D1_KINDS, D1_FLOW, 2)
        assert got.attacks == D1_STEP4.attacks | pairs(("D", "A"), ("E", "D"))
        assert got.supports == pairs(("C", "A"), ("D", "B"), ("E", "A"), ("E", "C"))

    def test_reaches_a_fixpoint(self):
        two = augment_bipolar(D1_STEP4, D1_KINDS, D1_FLOW, 2)
        ten = augment_bipolar(D1_STEP4, D1_KINDS, D1_FLOW, 10)
        assert (two.attacks, two.supports) == (ten.attacks, ten.supports)

    def test_zero_passes_only_adds_walk_supports(self):
        got = augment_bipolar(D1_STEP4, D1_KINDS, D1_FLOW, 0)
        assert (got.attacks, got.supports) == (D1_STEP4.attacks, D1_STEP4.supports)

    def test_never_reclassifies_existing_edges(self):
        got = augment_bipolar(D1_STEP4, D1_KINDS, D1_FLOW, 5)
        assert D1_STEP4.attacks <= got.attacks
        assert not (got.attacks & got.supports)

    def test_requires_clarified_input(self):
        t = TripolarGraph("AB", [], [], [("A", "B")])
        with pytest.raises(DomainError):
            augment_bipolar(t, D1_KINDS, FlowOrder({"A": (1, 1), "B": (1, 2)}), 1)

    def test_rejects_negative_passes(self):
        with pytest.raises(DomainError):
            augment_bipolar(D1_STEP4, D1_KINDS, D1_FLOW, -1)

    def test_flow_must_cover_all_arguments(self):
        with pytest.raises(DomainError):
            augment_bipolar(D1_STEP4, D1_KINDS, FlowOrder([("A", 1, 1)]), 1)


def test_from_framework_projects_attacks():
    af = ArgumentFramework("AB", [("A", "B")])
    t = from_framework(af)
    assert t.attacks == pairs(("A", "B")) and not t.supports and not t.dependencies
