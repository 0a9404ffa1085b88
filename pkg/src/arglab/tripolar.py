"""Tripolar argument graphs: attacks, supports and unclassified dependencies.

Besides the graph type itself this module provides four containment relations
between graphs over a shared argument set, a clarified predicate (no
dependencies), and an edge-difference distance that is a metric.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .core import ArgumentFramework, DomainError, Pair, _as_pair, _check_endpoints

__all__ = [
    "TripolarGraph",
    "SubgraphKind",
    "is_subgraph",
    "is_clarified",
    "edge_diff",
    "distance",
    "average_distances",
    "from_framework",
]


class SubgraphKind(str, enum.Enum):
    CORRECT = "correct"
    CONFUSION = "confusion"
    PRECISION = "precision"
    LENIENT = "lenient"


@dataclass(frozen=True)
class TripolarGraph:
    """Arguments plus pairwise-disjoint attack, support and dependency relations."""

    arguments: tuple[str, ...]
    attacks: frozenset[Pair]
    supports: frozenset[Pair]
    dependencies: frozenset[Pair]

    def __init__(
        self,
        arguments: Iterable[str],
        attacks: Iterable[Iterable[str]] = (),
        supports: Iterable[Iterable[str]] = (),
        dependencies: Iterable[Iterable[str]] = (),
    ) -> None:
        args = tuple(arguments)
        seen = set()
        for a in args:
            if not isinstance(a, str) or not a:
                raise DomainError(f"invalid argument name: {a!r}")
            if a in seen:
                raise DomainError(f"duplicate argument: {a}")
            seen.add(a)
        known = frozenset(seen)
        atts = frozenset(_as_pair(p) for p in attacks)
        sups = frozenset(_as_pair(p) for p in supports)
        deps = frozenset(_as_pair(p) for p in dependencies)
        _check_endpoints(atts, known, "attack")
        _check_endpoints(sups, known, "support")
        _check_endpoints(deps, known, "dependency")
        for left, right, what in (
            (atts, sups, "attack and support"),
            (atts, deps, "attack and dependency"),
            (sups, deps, "support and dependency"),
        ):
            overlap = left & right
            if overlap:
                raise DomainError(f"edge {min(overlap)} is classified as both {what}")
        object.__setattr__(self, "arguments", args)
        object.__setattr__(self, "attacks", atts)
        object.__setattr__(self, "supports", sups)
        object.__setattr__(self, "dependencies", deps)

    @cached_property
    def _argument_set(self) -> frozenset[str]:
        return frozenset(self.arguments)

    def edge_class(self, e: Pair) -> str | None:
        """``"attack"``, ``"support"``, ``"dependency"`` or None for ``e``."""
        if e in self.attacks:
            return "attack"
        if e in self.supports:
            return "support"
        if e in self.dependencies:
            return "dependency"
        return None

    def all_edges(self) -> frozenset[Pair]:
        return self.attacks | self.supports | self.dependencies

    def __repr__(self) -> str:
        return (
            f"TripolarGraph(arguments={list(self.arguments)!r}, attacks={sorted(self.attacks)!r}, "
            f"supports={sorted(self.supports)!r}, dependencies={sorted(self.dependencies)!r})"
        )


def from_framework(af: ArgumentFramework) -> TripolarGraph:
    """View an attack-only framework as a clarified tripolar graph."""
    return TripolarGraph(af.arguments, af.attacks)


def is_subgraph(t1: TripolarGraph, t2: TripolarGraph, kind: SubgraphKind) -> bool:
    """Whether ``t1`` is contained in ``t2`` under the given relation.

    CORRECT preserves every edge class; CONFUSION lets attacks and supports of
    ``t1`` appear as dependencies in ``t2``; PRECISION lets dependencies of
    ``t1`` appear classified in ``t2``; LENIENT only compares edge sets.
    """
    kind = SubgraphKind(kind)
    if not t1._argument_set <= t2._argument_set:
        return False
    if kind is SubgraphKind.CORRECT:
        return (
            t1.attacks <= t2.attacks
            and t1.supports <= t2.supports
            and t1.dependencies <= t2.dependencies
        )
    if kind is SubgraphKind.CONFUSION:
        return (
            t1.attacks <= t2.attacks | t2.dependencies
            and t1.supports <= t2.supports | t2.dependencies
            and t1.dependencies <= t2.dependencies
        )
    if kind is SubgraphKind.PRECISION:
        return (
            t1.attacks <= t2.attacks
            and t1.supports <= t2.supports
            and t1.dependencies <= t2.dependencies | t2.attacks | t2.supports
        )
    return t1.all_edges() <= t2.all_edges()


def is_clarified(t: TripolarGraph) -> bool:
    """True iff the graph has no dependency edges."""
    return not t.dependencies


_WEIGHTS = {
    ("attack", "attack"): 0,
    ("support", "support"): 0,
    ("dependency", "dependency"): 0,
    (None, None): 0,
    ("attack", "support"): 2,
    ("support", "attack"): 2,
    ("attack", None): 2,
    (None, "attack"): 2,
    ("support", None): 2,
    (None, "support"): 2,
    ("attack", "dependency"): 1,
    ("dependency", "attack"): 1,
    ("support", "dependency"): 1,
    ("dependency", "support"): 1,
    ("dependency", None): 1,
    (None, "dependency"): 1,
}


def _check_same_arguments(t1: TripolarGraph, t2: TripolarGraph) -> None:
    if t1._argument_set != t2._argument_set:
        raise DomainError("graphs are not defined over the same argument set")


def edge_diff(t1: TripolarGraph, t2: TripolarGraph, e: Iterable[str]) -> int:
    """Disagreement weight for one edge: same class 0, dependency vs anything 1,
    attack vs support or classified vs absent 2."""
    _check_same_arguments(t1, t2)
    pair = _as_pair(e)
    return _WEIGHTS[(t1.edge_class(pair), t2.edge_class(pair))]


def distance(t1: TripolarGraph, t2: TripolarGraph) -> int:
    """Sum of edge differences over every edge present in either graph."""
    _check_same_arguments(t1, t2)
    return sum(edge_diff(t1, t2, e) for e in t1.all_edges() | t2.all_edges())


def average_distances(graphs: list[TripolarGraph]) -> list[Fraction]:
    """For each graph, the mean distance to all the others."""
    if len(graphs) < 2:
        raise DomainError("average distance requires at least two graphs")
    for g in graphs[1:]:
        _check_same_arguments(graphs[0], g)
    n = len(graphs)
    totals = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            d = distance(graphs[i], graphs[j])
            totals[i] += d
            totals[j] += d
    return [Fraction(t, n - 1) for t in totals]
