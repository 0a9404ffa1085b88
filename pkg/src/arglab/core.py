"""Dung-style argument graphs with extension and labeling semantics.

An :class:`ArgumentFramework` is a finite set of arguments plus a directed
attack relation.  The module enumerates conflict-free, admissible, complete,
grounded, preferred and stable extensions and labelings, converts between the
two views, and classifies indirect (walk-based) attack and defence relations.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from functools import cached_property

from . import _pure
from ._kernels import COMPILED_KERNEL

__all__ = [
    "ArgLabError",
    "DomainError",
    "SizeError",
    "Label",
    "Semantics",
    "ArgumentFramework",
    "Labeling",
    "IndirectRelation",
    "attackers",
    "defends",
    "grounded_extension",
    "enumerate_extensions",
    "is_extension",
    "enumerate_labelings",
    "check_labeling",
    "extension_to_labeling",
    "indirect_relation",
    "parity_reachability",
    "is_controversial",
    "is_super_controversial",
]

Pair = tuple[str, str]

# Compiled kernels encode argument sets as machine-word bitmasks.
_KERNEL_MAX_ARGS = 63


class ArgLabError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(ArgLabError):
    """An argument, labeling or assignment does not fit the framework."""


class SizeError(ArgLabError):
    """An enumeration would exceed the configured size cap."""


class Label(str, enum.Enum):
    IN = "IN"
    OUT = "OUT"
    UNDEC = "UNDEC"


class Semantics(str, enum.Enum):
    CF = "cf"
    AD = "ad"
    CO = "co"
    GR = "gr"
    PR = "pr"
    ST = "st"


def _as_pair(value: object) -> Pair:
    pair = tuple(value)  # type: ignore[arg-type]
    if len(pair) != 2 or not all(isinstance(x, str) for x in pair):
        raise DomainError(f"not an edge pair: {value!r}")
    return pair  # type: ignore[return-value]


def _check_endpoints(pairs: frozenset[Pair], known: frozenset[str], what: str) -> None:
    for x, y in pairs:
        if x not in known or y not in known:
            raise DomainError(f"{what} ({x},{y}) mentions an unknown argument")


@dataclass(frozen=True)
class ArgumentFramework:
    """A finite argument set with a directed attack relation."""

    arguments: tuple[str, ...]
    attacks: frozenset[Pair]

    def __init__(self, arguments: Iterable[str], attacks: Iterable[Iterable[str]] = ()) -> None:
        args = tuple(arguments)
        seen = set()
        for a in args:
            if not isinstance(a, str) or not a:
                raise DomainError(f"invalid argument name: {a!r}")
            if a in seen:
                raise DomainError(f"duplicate argument: {a}")
            seen.add(a)
        atts = frozenset(_as_pair(p) for p in attacks)
        _check_endpoints(atts, frozenset(seen), "attack")
        object.__setattr__(self, "arguments", args)
        object.__setattr__(self, "attacks", atts)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {a: i for i, a in enumerate(self.arguments)}

    @cached_property
    def _attacker_masks(self) -> list[int]:
        idx = self._index
        masks = [0] * len(self.arguments)
        for x, y in self.attacks:
            masks[idx[y]] |= 1 << idx[x]
        return masks

    @cached_property
    def _target_masks(self) -> list[int]:
        idx = self._index
        masks = [0] * len(self.arguments)
        for x, y in self.attacks:
            masks[idx[x]] |= 1 << idx[y]
        return masks

    def _contains(self, a: str) -> None:
        if a not in self._index:
            raise DomainError(f"unknown argument: {a}")

    def _mask_of(self, members: Iterable[str]) -> int:
        mask = 0
        for a in members:
            self._contains(a)
            mask |= 1 << self._index[a]
        return mask

    def _set_of(self, mask: int) -> frozenset[str]:
        return frozenset(a for i, a in enumerate(self.arguments) if mask >> i & 1)

    def __repr__(self) -> str:
        atts = sorted(self.attacks)
        return f"ArgumentFramework(arguments={list(self.arguments)!r}, attacks={atts!r})"


class Labeling(Mapping):
    """A total map from arguments to IN/OUT/UNDEC."""

    __slots__ = ("_assignment", "_in", "_out", "_undec")

    def __init__(self, assignment: Mapping[str, Label] | Iterable[tuple[str, Label]]):
        pairs = assignment.items() if isinstance(assignment, Mapping) else assignment
        mapping = {str(a): Label(lab) for a, lab in pairs}
        self._assignment = mapping
        self._in = frozenset(a for a, lab in mapping.items() if lab is Label.IN)
        self._out = frozenset(a for a, lab in mapping.items() if lab is Label.OUT)
        self._undec = frozenset(a for a, lab in mapping.items() if lab is Label.UNDEC)

    def __getitem__(self, a: str) -> Label:
        return self._assignment[a]

    def __iter__(self):
        return iter(self._assignment)

    def __len__(self) -> int:
        return len(self._assignment)

    @property
    def in_set(self) -> frozenset[str]:
        return self._in

    @property
    def out_set(self) -> frozenset[str]:
        return self._out

    @property
    def undec_set(self) -> frozenset[str]:
        return self._undec

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Labeling):
            return self._assignment == other._assignment
        if isinstance(other, Mapping):
            return dict(self._assignment) == dict(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._assignment.items()))

    def __repr__(self) -> str:
        body = ", ".join(f"{a}:{lab.value}" for a, lab in sorted(self._assignment.items()))
        return f"Labeling({body})"


@dataclass(frozen=True)
class IndirectRelation:
    """Walk-based relation between two arguments: odd walks attack, even defend."""

    attacks: bool
    defends: bool


def _kernel_for(n: int):
    if COMPILED_KERNEL is not None and n <= _KERNEL_MAX_ARGS:
        return COMPILED_KERNEL
    return _pure


def attackers(af: ArgumentFramework, a: str) -> frozenset[str]:
    """All direct attackers of ``a``."""
    af._contains(a)
    return frozenset(x for x, y in af.attacks if y == a)


def defends(af: ArgumentFramework, s: Iterable[str], a: str) -> bool:
    """True iff every attacker of ``a`` is attacked by some member of ``s``."""
    af._contains(a)
    smask = af._mask_of(s)
    attacked = _pure.attacked_by(smask, af._target_masks)
    return af._attacker_masks[af._index[a]] & ~attacked == 0


def grounded_extension(af: ArgumentFramework) -> frozenset[str]:
    """The least fixpoint of the defence operator, starting from the empty set."""
    n = len(af.arguments)
    mask = _kernel_for(n).grounded_mask(n, af._attacker_masks, af._target_masks)
    return af._set_of(mask)


def _canonical_sets(af: ArgumentFramework, masks: Iterable[int]) -> tuple[frozenset[str], ...]:
    keyed = sorted(tuple(i for i in range(len(af.arguments)) if m >> i & 1) for m in masks)
    return tuple(frozenset(af.arguments[i] for i in key) for key in keyed)


def enumerate_extensions(af: ArgumentFramework, semantics: Semantics) -> tuple[frozenset[str], ...]:
    """All extensions under the given semantics, canonically ordered."""
    semantics = Semantics(semantics)
    n = len(af.arguments)
    kern = _kernel_for(n)
    att, tgt = af._attacker_masks, af._target_masks
    if semantics is Semantics.CF:
        masks = kern.cf_masks(n, att, tgt)
    elif semantics is Semantics.AD:
        masks = kern.admissible_masks(n, att, tgt)
    elif semantics is Semantics.CO:
        masks = kern.complete_masks(n, att, tgt)
    elif semantics is Semantics.GR:
        masks = [kern.grounded_mask(n, att, tgt)]
    elif semantics is Semantics.PR:
        masks = kern.preferred_masks(n, att, tgt)
    else:
        masks = kern.stable_masks(n, att, tgt)
    return _canonical_sets(af, masks)


def is_extension(af: ArgumentFramework, e: Iterable[str], semantics: Semantics) -> bool:
    """True iff ``e`` is an extension of ``af`` under the given semantics."""
    semantics = Semantics(semantics)
    mask = af._mask_of(e)
    n = len(af.arguments)
    att, tgt = af._attacker_masks, af._target_masks
    full = (1 << n) - 1
    attacked = _pure.attacked_by(mask, tgt)
    conflict_free = True
    members = mask
    while members:
        low = members & -members
        i = low.bit_length() - 1
        if tgt[i] & mask:
            conflict_free = False
            break
        members &= members - 1
    if semantics is Semantics.CF:
        return conflict_free
    if not conflict_free:
        return False
    admissible = True
    members = mask
    while members:
        low = members & -members
        i = low.bit_length() - 1
        if att[i] & ~attacked:
            admissible = False
            break
        members &= members - 1
    if semantics is Semantics.AD:
        return admissible
    if semantics is Semantics.ST:
        return mask | attacked == full
    if semantics is Semantics.GR:
        return mask == _kernel_for(n).grounded_mask(n, att, tgt)
    if not admissible:
        return False
    if semantics is Semantics.CO:
        for i in range(n):
            if not mask >> i & 1 and att[i] & ~attacked == 0:
                return False
        return True
    # Preferred: admissible with no admissible strict superset.
    return mask in _kernel_for(n).preferred_masks(n, att, tgt)


def _labeling_from_masks(af: ArgumentFramework, in_mask: int, out_mask: int) -> Labeling:
    labels = {}
    for i, a in enumerate(af.arguments):
        if in_mask >> i & 1:
            labels[a] = Label.IN
        elif out_mask >> i & 1:
            labels[a] = Label.OUT
        else:
            labels[a] = Label.UNDEC
    return Labeling(labels)


def _maximal_by_first(pairs: list[tuple[int, int]]) -> list[tuple[int, int]]:
    ordered = sorted(pairs, key=lambda p: bin(p[0]).count("1"), reverse=True)
    kept: list[tuple[int, int]] = []
    for in_mask, out_mask in ordered:
        if not any(in_mask & k_in == in_mask and in_mask != k_in for k_in, _ in kept):
            kept.append((in_mask, out_mask))
    return kept


def _minimal_by_first(pairs: list[tuple[int, int]]) -> list[tuple[int, int]]:
    ordered = sorted(pairs, key=lambda p: bin(p[0]).count("1"))
    kept: list[tuple[int, int]] = []
    for in_mask, out_mask in ordered:
        if not any(k_in & in_mask == k_in and in_mask != k_in for k_in, _ in kept):
            kept.append((in_mask, out_mask))
    return kept


def _labeling_mask_pairs(af: ArgumentFramework, semantics: Semantics) -> list[tuple[int, int]]:
    n = len(af.arguments)
    kern = _kernel_for(n)
    att, tgt = af._attacker_masks, af._target_masks
    if semantics is Semantics.CF:
        return kern.labelings(n, att, tgt, 0)
    if semantics is Semantics.AD:
        return kern.labelings(n, att, tgt, 1)
    complete = kern.labelings(n, att, tgt, 2)
    if semantics is Semantics.CO:
        return complete
    if semantics is Semantics.ST:
        full = (1 << n) - 1
        return [(i, o) for i, o in complete if i | o == full]
    if semantics is Semantics.PR:
        return _maximal_by_first(complete)
    return _minimal_by_first(complete)


def enumerate_labelings(af: ArgumentFramework, semantics: Semantics) -> tuple[Labeling, ...]:
    """All labelings satisfying the semantics, canonically ordered."""
    semantics = Semantics(semantics)
    pairs = _labeling_mask_pairs(af, semantics)
    n = len(af.arguments)

    def trits(pair: tuple[int, int]) -> tuple[int, ...]:
        in_mask, out_mask = pair
        return tuple(0 if in_mask >> i & 1 else 1 if out_mask >> i & 1 else 2 for i in range(n))

    return tuple(_labeling_from_masks(af, i, o) for i, o in sorted(pairs, key=trits))


def _labeling_masks(af: ArgumentFramework, labeling: Labeling) -> tuple[int, int]:
    if set(labeling) != set(af.arguments):
        raise DomainError("labeling domain does not match the framework's arguments")
    in_mask = af._mask_of(labeling.in_set)
    out_mask = af._mask_of(labeling.out_set)
    return in_mask, out_mask


def check_labeling(af: ArgumentFramework, labeling: Labeling, semantics: Semantics) -> bool:
    """True iff the labeling satisfies the given semantics on ``af``."""
    semantics = Semantics(semantics)
    in_mask, out_mask = _labeling_masks(af, labeling)
    n = len(af.arguments)
    att, tgt = af._attacker_masks, af._target_masks
    if semantics is Semantics.CF:
        return _pure.labeling_ok(n, att, tgt, in_mask, out_mask, 0)
    if semantics is Semantics.AD:
        return _pure.labeling_ok(n, att, tgt, in_mask, out_mask, 1)
    if not _pure.labeling_ok(n, att, tgt, in_mask, out_mask, 2):
        return False
    if semantics is Semantics.CO:
        return True
    if semantics is Semantics.ST:
        return in_mask | out_mask == (1 << n) - 1
    complete = _kernel_for(n).labelings(n, att, tgt, 2)
    if semantics is Semantics.PR:
        return not any(in_mask & i == in_mask and i != in_mask for i, _ in complete)
    return not any(i & in_mask == i and i != in_mask for i, _ in complete)


def extension_to_labeling(af: ArgumentFramework, e: Iterable[str]) -> Labeling:
    """Label ``e`` IN, everything it attacks OUT, and the rest UNDEC."""
    mask = af._mask_of(e)
    attacked = _pure.attacked_by(mask, af._target_masks) & ~mask
    return _labeling_from_masks(af, mask, attacked)


def parity_reachability(af: ArgumentFramework) -> tuple[dict[str, frozenset[str]], dict[str, frozenset[str]]]:
    """Per-argument targets of odd- and even-length attack walks (length >= 1).

    Walks may repeat vertices; reachability is computed on a two-layer parity
    graph, so an argument on an odd cycle can reach targets with both parities.
    """
    succ: dict[str, list[str]] = {a: [] for a in af.arguments}
    for x, y in af.attacks:
        succ[x].append(y)
    odd: dict[str, frozenset[str]] = {}
    even: dict[str, frozenset[str]] = {}
    for a in af.arguments:
        seen: set[tuple[str, int]] = set()
        frontier = [(b, 1) for b in succ[a]]
        seen.update(frontier)
        while frontier:
            nxt = []
            for v, parity in frontier:
                for w in succ[v]:
                    state = (w, 1 - parity)
                    if state not in seen:
                        seen.add(state)
                        nxt.append(state)
            frontier = nxt
        odd[a] = frozenset(v for v, p in seen if p == 1)
        even[a] = frozenset(v for v, p in seen if p == 0)
    return odd, even


def indirect_relation(af: ArgumentFramework, a: str, b: str) -> IndirectRelation:
    """Whether ``a`` indirectly attacks (odd walk) and/or defends (even walk) ``b``."""
    af._contains(a)
    af._contains(b)
    odd, even = parity_reachability(af)
    return IndirectRelation(attacks=b in odd[a], defends=b in even[a])


def is_controversial(af: ArgumentFramework, a: str, b: str) -> bool:
    """True iff ``a`` both indirectly attacks and indirectly defends ``b``."""
    rel = indirect_relation(af, a, b)
    return rel.attacks and rel.defends


def is_super_controversial(af: ArgumentFramework, a: str, b: str, c: str) -> bool:
    """True iff ``a`` indirectly attacks ``c`` while ``b`` indirectly defends ``c``."""
    return indirect_relation(af, a, c).attacks and indirect_relation(af, b, c).defends
