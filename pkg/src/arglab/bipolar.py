"""Bipolar frameworks: support chains, derived attacks, and graph augmentation.

Six derivations turn the interplay of supports and attacks into extra attack
edges; a bipolar framework plus a kind selection reduces to a plain attack
graph.  The augmentation operations grow a dialogue graph with walk-based
defences (as supports) and derived attacks, restricted to the dialogue flow.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from functools import cached_property

from .core import (
    ArgumentFramework,
    DomainError,
    Pair,
    _as_pair,
    _check_endpoints,
    parity_reachability,
)
from .tripolar import TripolarGraph, is_clarified

__all__ = [
    "BipolarFramework",
    "AttackKind",
    "ALL_KINDS",
    "FlowOrder",
    "support_reachable",
    "indirect_attacks",
    "to_dung",
    "augment_prudent",
    "augment_bipolar",
]


class AttackKind(str, enum.Enum):
    SUPPORTED = "supported"
    SECONDARY = "secondary"
    EXTENDED = "extended"
    MEDIATED = "mediated"
    SUPER_MEDIATED = "super-mediated"
    SUPER_EXTENDED = "super-extended"


ALL_KINDS: frozenset[AttackKind] = frozenset(AttackKind)

_KIND_ORDER = {kind: i for i, kind in enumerate(AttackKind)}


@dataclass(frozen=True)
class BipolarFramework:
    """Arguments with disjoint attack and support relations."""

    arguments: tuple[str, ...]
    attacks: frozenset[Pair]
    supports: frozenset[Pair]

    def __init__(
        self,
        arguments: Iterable[str],
        attacks: Iterable[Iterable[str]] = (),
        supports: Iterable[Iterable[str]] = (),
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
        _check_endpoints(atts, known, "attack")
        _check_endpoints(sups, known, "support")
        overlap = atts & sups
        if overlap:
            raise DomainError(f"edge {min(overlap)} is classified as both attack and support")
        object.__setattr__(self, "arguments", args)
        object.__setattr__(self, "attacks", atts)
        object.__setattr__(self, "supports", sups)

    @cached_property
    def _support_reach(self) -> dict[str, frozenset[str]]:
        succ: dict[str, list[str]] = {a: [] for a in self.arguments}
        for x, y in self.supports:
            succ[x].append(y)
        reach: dict[str, frozenset[str]] = {}
        for a in self.arguments:
            seen: set[str] = set()
            frontier = list(succ[a])
            seen.update(frontier)
            while frontier:
                nxt = []
                for v in frontier:
                    for w in succ[v]:
                        if w not in seen:
                            seen.add(w)
                            nxt.append(w)
                frontier = nxt
            reach[a] = frozenset(seen)
        return reach

    def __repr__(self) -> str:
        return (
            f"BipolarFramework(arguments={list(self.arguments)!r}, "
            f"attacks={sorted(self.attacks)!r}, supports={sorted(self.supports)!r})"
        )


@dataclass(frozen=True)
class FlowOrder:
    """Strict total order over arguments given by (step, utterance index) pairs."""

    entries: tuple[tuple[str, int, int], ...]

    def __init__(self, positions: Mapping[str, tuple[int, int]] | Iterable[tuple[str, int, int]]) -> None:
        if isinstance(positions, Mapping):
            rows = [(a, s, i) for a, (s, i) in positions.items()]
        else:
            rows = [(a, s, i) for a, s, i in positions]
        seen_args: set[str] = set()
        seen_pos: set[tuple[int, int]] = set()
        for a, step, index in rows:
            if a in seen_args:
                raise DomainError(f"duplicate flow entry for argument {a}")
            if step < 1 or index < 1:
                raise DomainError(f"flow position for {a} must use positive step and index")
            if (step, index) in seen_pos:
                raise DomainError(f"flow position ({step},{index}) assigned twice")
            seen_args.add(a)
            seen_pos.add((step, index))
        object.__setattr__(self, "entries", tuple(sorted(rows, key=lambda r: (r[1], r[2]))))

    @cached_property
    def _positions(self) -> dict[str, tuple[int, int]]:
        return {a: (s, i) for a, s, i in self.entries}

    def position(self, a: str) -> tuple[int, int]:
        try:
            return self._positions[a]
        except KeyError:
            raise DomainError(f"argument {a} has no flow position") from None

    def precedes(self, a: str, b: str) -> bool:
        return self.position(a) < self.position(b)

    def _check_total(self, arguments: Iterable[str]) -> None:
        missing = [a for a in arguments if a not in self._positions]
        if missing:
            raise DomainError(f"flow order is missing arguments: {', '.join(sorted(missing))}")


def support_reachable(baf: BipolarFramework, a: str, b: str) -> bool:
    """True iff a chain of one or more support edges leads from ``a`` to ``b``."""
    if a not in baf._support_reach:
        raise DomainError(f"unknown argument: {a}")
    if b not in baf._support_reach:
        raise DomainError(f"unknown argument: {b}")
    return b in baf._support_reach[a]


def _derived_attacks(baf: BipolarFramework) -> dict[AttackKind, frozenset[Pair]]:
    reach = baf._support_reach
    args = baf.arguments
    atts = baf.attacks
    targets: dict[str, list[str]] = {a: [] for a in args}
    attackers: dict[str, list[str]] = {a: [] for a in args}
    for x, y in atts:
        targets[x].append(y)
        attackers[y].append(x)
    supported = frozenset((a, b) for a in args for c in reach[a] for b in targets[c])
    secondary = frozenset((a, b) for (a, c) in atts for b in reach[c])
    extended = frozenset((a, b) for (c, b) in atts for a in reach[c])
    mediated = frozenset((a, b) for b in args for c in reach[b] for a in attackers[c])
    sup_attackers: dict[str, set[str]] = {a: set(attackers[a]) for a in args}
    for a, c in supported:
        sup_attackers[c].add(a)
    super_mediated = frozenset(
        (a, b) for b in args for c in reach[b] for a in sup_attackers[c]
    )
    super_extended = frozenset(
        (a, b) for (c, b) in atts | secondary for a in reach[c]
    )
    return {
        AttackKind.SUPPORTED: supported,
        AttackKind.SECONDARY: secondary,
        AttackKind.EXTENDED: extended,
        AttackKind.MEDIATED: mediated,
        AttackKind.SUPER_MEDIATED: super_mediated,
        AttackKind.SUPER_EXTENDED: super_extended,
    }


def indirect_attacks(
    baf: BipolarFramework, kinds: Iterable[AttackKind] = ALL_KINDS
) -> frozenset[tuple[AttackKind, Pair]]:
    """Derived attacks of the requested kinds.

    The plain mediated (extended) set is always contained in its super
    variant, so when both are requested only the super entries are reported.
    """
    requested = frozenset(AttackKind(k) for k in kinds)
    derived = _derived_attacks(baf)
    result: set[tuple[AttackKind, Pair]] = set()
    for kind in requested:
        if kind is AttackKind.MEDIATED and AttackKind.SUPER_MEDIATED in requested:
            continue
        if kind is AttackKind.EXTENDED and AttackKind.SUPER_EXTENDED in requested:
            continue
        result.update((kind, pair) for pair in derived[kind])
    return frozenset(result)


def to_dung(baf: BipolarFramework, kinds: Iterable[AttackKind] = ALL_KINDS) -> ArgumentFramework:
    """Reduce to a plain attack graph: direct attacks plus the requested derivations."""
    derived = _derived_attacks(baf)
    attacks = set(baf.attacks)
    for kind in frozenset(AttackKind(k) for k in kinds):
        attacks |= derived[kind]
    return ArgumentFramework(baf.arguments, attacks)


def _flow_pairs(pairs: Iterable[Pair], flow: FlowOrder) -> set[Pair]:
    """Pairs whose source comes strictly later in the dialogue; self-pairs dropped."""
    return {(x, y) for x, y in pairs if x != y and flow.precedes(y, x)}


def augment_prudent(af: ArgumentFramework, flow: FlowOrder) -> TripolarGraph:
    """Add walk-derived attacks and defences to a dialogue graph.

    Odd-length attack walks become attacks and even nonzero-length walks
    become supports, keeping only edges whose source was uttered after the
    target.  Existing attacks are always retained, and a pair derivable both
    ways becomes an attack.
    """
    flow._check_total(af.arguments)
    odd, even = parity_reachability(af)
    odd_pairs = {(x, y) for x in af.arguments for y in odd[x]}
    even_pairs = {(x, y) for x in af.arguments for y in even[x]}
    attacks = set(af.attacks) | _flow_pairs(odd_pairs, flow)
    supports = _flow_pairs(even_pairs, flow) - attacks
    return TripolarGraph(af.arguments, attacks, supports)


def augment_bipolar(
    t: TripolarGraph,
    kinds: Iterable[AttackKind],
    flow: FlowOrder,
    defense_passes: int,
) -> TripolarGraph:
    """Alternate defence-derived supports and flow-respecting derived attacks.

    Each pass first adds supports for even nonzero-length walks over the
    current attacks, then adds derived attacks of the requested kinds with the
    current supports as the support relation.  Existing edges keep their
    class; the procedure is monotone and reaches a fixpoint within
    ``len(arguments) ** 2`` passes.
    """
    if not is_clarified(t):
        raise DomainError("augmentation requires a clarified graph (no dependencies)")
    if defense_passes < 0:
        raise DomainError("defense_passes must be nonnegative")
    flow._check_total(t.arguments)
    kinds = frozenset(AttackKind(k) for k in kinds)
    attacks = set(t.attacks)
    supports = set(t.supports)
    for _ in range(defense_passes):
        changed = False
        _, even = parity_reachability(ArgumentFramework(t.arguments, attacks))
        even_pairs = {(x, y) for x in t.arguments for y in even[x]}
        for pair in _flow_pairs(even_pairs, flow):
            if pair not in attacks and pair not in supports:
                supports.add(pair)
                changed = True
        baf = BipolarFramework(t.arguments, attacks, supports)
        derived = {pair for _, pair in indirect_attacks(baf, kinds)}
        for pair in _flow_pairs(derived, flow):
            if pair not in attacks and pair not in supports:
                attacks.add(pair)
                changed = True
        if not changed:
            break
    return TripolarGraph(t.arguments, attacks, supports)
