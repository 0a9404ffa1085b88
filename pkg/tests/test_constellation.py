"""Subgraph spaces, subgraph distributions and constellation probabilities."""

import random
from fractions import Fraction

import pytest

import arglab
from arglab import (
    DEFAULT_SUBGRAPH_CAP,
    ArgumentFramework,
    DomainError,
    SizeError,
    SubgraphDistribution,
    SubgraphMode,
    enumerate_subgraphs,
    estimate_prob_argument,
    is_full_subgraph,
    is_spanning_subgraph,
    parse_distribution,
    prob_argument_in,
    prob_extension,
)
from arglab.constellation import is_subgraph
from conftest import SAMPLE_ARGS, SAMPLE_ATTS
import oracles

F = Fraction

BASE = ArgumentFramework(("A", "B"), (("A", "B"),))
SUB_ATTACK = ArgumentFramework(("A", "B"), (("A", "B"),))
SUB_BOTH = ArgumentFramework(("A", "B"), ())
SUB_A = ArgumentFramework(("A",), ())
SUB_B = ArgumentFramework(("B",), ())
SUB_NONE = ArgumentFramework((), ())


def two_arg_distribution(**kw):
    return SubgraphDistribution(
        BASE,
        [
            (SUB_ATTACK, F(9, 100)),
            (SUB_BOTH, F(81, 100)),
            (SUB_A, F(1, 100)),
            (SUB_B, F(9, 100)),
            (SUB_NONE, F(0)),
        ],
        **kw,
    )


class TestSubgraphPredicates:
    def test_package_level_name_is_the_tripolar_relation(self):
        # The plain containment check stays module-qualified; the exported
        # is_subgraph is the kind-aware relation between tripolar graphs.
        import arglab.tripolar

        assert arglab.is_subgraph is arglab.tripolar.is_subgraph

    def test_subgraph_containment(self):
        assert is_subgraph(SUB_A, BASE)
        assert is_subgraph(SUB_ATTACK, BASE)
        assert is_subgraph(SUB_NONE, BASE)
        assert not is_subgraph(ArgumentFramework("ABC", ()), BASE)
        assert not is_subgraph(ArgumentFramework("AB", [("B", "A")]), BASE)

    def test_full_subgraph_keeps_induced_attacks(self):
        assert is_full_subgraph(SUB_ATTACK, BASE)
        assert is_full_subgraph(SUB_A, BASE)
        assert is_full_subgraph(SUB_NONE, BASE)
        assert not is_full_subgraph(SUB_BOTH, BASE)

    def test_spanning_subgraph_keeps_all_arguments(self):
        assert is_spanning_subgraph(SUB_BOTH, BASE)
        assert is_spanning_subgraph(SUB_ATTACK, BASE)
        assert not is_spanning_subgraph(SUB_A, BASE)


class TestEnumerateSubgraphs:
    def test_general_enumeration_of_the_two_arg_base(self):
        subs = enumerate_subgraphs(BASE)
        expected = [SUB_NONE, SUB_A, SUB_B, SUB_BOTH, SUB_ATTACK]
        assert [(s.arguments, s.attacks) for s in subs] == [
            (s.arguments, s.attacks) for s in expected
        ]

    def test_full_and_spanning_counts(self):
        af = ArgumentFramework(SAMPLE_ARGS, SAMPLE_ATTS)
        full = enumerate_subgraphs(af, SubgraphMode.FULL)
        spanning = enumerate_subgraphs(af, "spanning")
        assert len(full) == 2 ** len(af.arguments)
        assert len(spanning) == 2 ** len(af.attacks)
        assert all(is_full_subgraph(s, af) for s in full)
        assert all(is_spanning_subgraph(s, af) for s in spanning)

    def test_general_count_matches_induced_attack_counts(self):
        af = ArgumentFramework(SAMPLE_ARGS, SAMPLE_ATTS)
        subs = enumerate_subgraphs(af)
        expected = sum(
            2 ** sum(1 for x, y in SAMPLE_ATTS if x in members and y in members)
            for members in map(set, oracles.powerset(SAMPLE_ARGS))
        )
        assert len(subs) == expected
        assert len({(s.arguments, s.attacks) for s in subs}) == expected
        assert all(is_subgraph(s, af) for s in subs)

    def test_full_subgraph_restricts_attacks(self):
        af = ArgumentFramework(SAMPLE_ARGS, SAMPLE_ATTS)
        by_args = {s.arguments: s for s in enumerate_subgraphs(af, SubgraphMode.FULL)}
        assert by_args[("C", "D")].attacks == frozenset({("C", "D"), ("D", "C")})
        assert by_args[("A", "E")].attacks == frozenset({("E", "E")})

    def test_argument_cap(self):
        big = ArgumentFramework([f"a{i}" for i in range(DEFAULT_SUBGRAPH_CAP + 1)], ())
        with pytest.raises(SizeError):
            enumerate_subgraphs(big)
        with pytest.raises(SizeError):
            enumerate_subgraphs(big, SubgraphMode.FULL)
        assert len(enumerate_subgraphs(big, SubgraphMode.SPANNING)) == 1

    def test_attack_cap(self):
        args = ("W", "X", "Y", "Z")
        atts = [(x, y) for x in args for y in args][:13]
        af = ArgumentFramework(args, atts)
        with pytest.raises(SizeError):
            enumerate_subgraphs(af)
        with pytest.raises(SizeError):
            enumerate_subgraphs(af, SubgraphMode.SPANNING)
        assert len(enumerate_subgraphs(af, SubgraphMode.FULL)) == 16

    def test_custom_cap(self):
        with pytest.raises(SizeError):
            enumerate_subgraphs(BASE, cap=1)
        assert len(enumerate_subgraphs(BASE, cap=2)) == 5


class TestDistributionValidation:
    def test_zero_mass_entries_are_dropped(self):
        d = two_arg_distribution()
        assert len(d.entries) == 4
        assert all(mass > 0 for mass in d.entries.values())

    def test_duplicate_entry_rejected(self):
        with pytest.raises(DomainError):
            SubgraphDistribution(BASE, [(SUB_A, F(1, 2)), (SUB_A, F(1, 2))])

    def test_duplicates_are_detected_after_canonicalization(self):
        upside_down = ArgumentFramework(("B", "A"), ())
        with pytest.raises(DomainError):
            SubgraphDistribution(BASE, [(SUB_BOTH, F(1, 2)), (upside_down, F(1, 2))])

    def test_non_subgraph_entry_rejected(self):
        stranger = ArgumentFramework("AB", [("B", "A")])
        with pytest.raises(DomainError):
            SubgraphDistribution(BASE, [(stranger, 1)])

    def test_mass_validation(self):
        with pytest.raises(DomainError):
            SubgraphDistribution(BASE, [(SUB_A, 0.5), (SUB_B, 0.5)])
        with pytest.raises(DomainError):
            SubgraphDistribution(BASE, [(SUB_A, 2), (SUB_B, -1)])
        with pytest.raises(DomainError):
            SubgraphDistribution(BASE, [(SUB_A, F(1, 2)), (SUB_B, F(1, 4))])

    def test_mapping_entries_accepted(self):
        d = SubgraphDistribution(BASE, {SUB_A: F(1, 2), SUB_B: F(1, 2)})
        assert len(d.entries) == 2

    def test_full_mode_rejects_partial_restrictions(self):
        with pytest.raises(DomainError):
            SubgraphDistribution(BASE, [(SUB_BOTH, 1)], mode="full")
        d = SubgraphDistribution(BASE, [(SUB_ATTACK, 1), (SUB_BOTH, 0)], mode="full")
        assert d.mode is SubgraphMode.FULL and len(d.entries) == 1

    def test_spanning_mode_rejects_missing_arguments(self):
        with pytest.raises(DomainError):
            SubgraphDistribution(BASE, [(SUB_A, 1)], mode=SubgraphMode.SPANNING)
        d = SubgraphDistribution(BASE, [(SUB_BOTH, F(1, 2)), (SUB_ATTACK, F(1, 2))], mode="spanning")
        assert len(d.entries) == 2

    def test_example_entries_split_by_mode(self):
        d = two_arg_distribution()
        full = [s for s in d.entries if is_full_subgraph(s, d.base)]
        spanning = [s for s in d.entries if is_spanning_subgraph(s, d.base)]
        assert {s.arguments for s in full} == {("A", "B"), ("A",), ("B",)}
        assert len(full) == 3 and len(spanning) == 2


class TestTwoArgExample:
    def test_extension_probabilities_under_grounded(self):
        d = two_arg_distribution()
        assert prob_extension(d, ("A", "B"), "gr") == F(81, 100)
        assert prob_extension(d, ("A",), "gr") == F(1, 10)
        assert prob_extension(d, ("B",), "gr") == F(9, 100)
        assert prob_extension(d, (), "gr") == 0

    def test_argument_probabilities_under_grounded(self):
        d = two_arg_distribution()
        assert prob_argument_in(d, "A", "gr") == F(91, 100)
        assert prob_argument_in(d, "B", "gr") == F(9, 10)

    def test_other_semantics_reuse_the_same_mass(self):
        d = two_arg_distribution()
        assert prob_extension(d, ("B",), "cf") == F(99, 100)
        assert prob_extension(d, ("A",), "st") == F(1, 10)

    def test_unknown_argument_is_rejected(self):
        d = two_arg_distribution()
        with pytest.raises(DomainError):
            prob_argument_in(d, "Z", "gr")

    def test_data_file_round_trip(self, data_dir):
        text = (data_dir / "two_arg_distribution.lp").read_text()
        d = parse_distribution(text, source="two_arg_distribution.lp")
        assert d.base.arguments == ("A", "B")
        assert d.base.attacks == frozenset({("A", "B")})
        assert d.entries == two_arg_distribution().entries
        assert prob_argument_in(d, "A", "gr") == F(91, 100)


class TestPerLabeling:
    def test_per_labeling_counts_every_labeling(self):
        loose = ArgumentFramework(("A", "B"), ())
        d = SubgraphDistribution(loose, [(loose, 1)])
        assert prob_argument_in(d, "A", "cf") == 1
        assert prob_argument_in(d, "A", "cf", per_labeling=True) == 2

    def test_per_labeling_matches_single_labeling_semantics(self):
        d = two_arg_distribution()
        assert prob_argument_in(d, "A", "gr", per_labeling=True) == F(91, 100)
        assert prob_argument_in(d, "B", "gr", per_labeling=True) == F(9, 10)


def random_distribution(rng, max_args=4):
    while True:
        args, atts = oracles.random_af(rng, max_args=max_args, density=0.35)
        base = ArgumentFramework(args, atts)
        pool = enumerate_subgraphs(base)
        chosen = rng.sample(pool, k=min(len(pool), rng.randint(1, 5)))
        weights = [rng.randint(1, 9) for _ in chosen]
        total = sum(weights)
        entries = [(sub, F(w, total)) for sub, w in zip(chosen, weights)]
        return base, SubgraphDistribution(base, entries)


class TestOracleCrossCheck:
    def test_probabilities_match_brute_force(self):
        rng = random.Random(1105)
        for _ in range(60):
            base, d = random_distribution(rng)
            semantics = rng.choice(["cf", "ad", "co", "gr", "pr", "st"])
            oracle = oracles.EXTENSION_ORACLES[semantics]
            target = frozenset(
                a for a in base.arguments if rng.random() < 0.5
            )
            expected_ext = sum(
                (
                    mass
                    for sub, mass in d.entries.items()
                    if target <= set(sub.arguments)
                    and target in oracle(sub.arguments, sub.attacks)
                ),
                F(0),
            )
            assert prob_extension(d, target, semantics) == expected_ext
            for a in base.arguments:
                expected_arg = sum(
                    (
                        mass
                        for sub, mass in d.entries.items()
                        if any(
                            a in ext for ext in oracle(sub.arguments, sub.attacks)
                        )
                    ),
                    F(0),
                )
                assert prob_argument_in(d, a, semantics) == expected_arg

    def test_per_labeling_matches_brute_force(self):
        rng = random.Random(1106)
        for _ in range(40):
            base, d = random_distribution(rng, max_args=3)
            semantics = rng.choice(["cf", "ad", "co", "gr", "pr", "st"])
            for a in base.arguments:
                expected = sum(
                    (
                        mass
                        * sum(
                            1
                            for lab in oracles.labeling_oracles(
                                sub.arguments, sub.attacks, semantics
                            )
                            if lab.get(a) == oracles.IN
                        )
                        for sub, mass in d.entries.items()
                    ),
                    F(0),
                )
                assert prob_argument_in(d, a, semantics, per_labeling=True) == expected


class TestEstimate:
    def test_same_seed_same_estimate(self):
        d = two_arg_distribution()
        first = estimate_prob_argument(d, "A", "gr", samples=2000, seed=7)
        second = estimate_prob_argument(d, "A", "gr", samples=2000, seed=7)
        assert first == second

    def test_estimates_vary_with_the_seed(self):
        d = two_arg_distribution()
        values = {
            estimate_prob_argument(d, "A", "gr", samples=500, seed=s)
            for s in range(5)
        }
        assert len(values) > 1

    def test_job_count_does_not_change_the_estimate(self):
        d = two_arg_distribution()
        reference = estimate_prob_argument(d, "A", "gr", samples=999, seed=42, jobs=1)
        for jobs in (2, 3, 7, 16):
            assert estimate_prob_argument(d, "A", "gr", samples=999, seed=42, jobs=jobs) == reference

    def test_estimate_converges(self):
        d = two_arg_distribution()
        estimate = estimate_prob_argument(d, "A", "gr", samples=20000, seed=3)
        assert abs(estimate - F(91, 100)) <= F(1, 50)

    def test_estimate_argument_errors(self):
        d = two_arg_distribution()
        with pytest.raises(DomainError):
            estimate_prob_argument(d, "A", "gr", samples=0, seed=1)
        with pytest.raises(DomainError):
            estimate_prob_argument(d, "A", "gr", samples=10, seed=1, jobs=0)
        with pytest.raises(DomainError):
            estimate_prob_argument(d, "Z", "gr", samples=10, seed=1)

    def test_point_mass_estimate_is_exact(self):
        d = SubgraphDistribution(BASE, [(SUB_ATTACK, 1)])
        assert estimate_prob_argument(d, "A", "gr", samples=50, seed=0) == 1
        assert estimate_prob_argument(d, "B", "gr", samples=50, seed=0) == 0
