"""Belief assignments over argument graphs and the epistemic postulate catalog.

Beliefs are exact rationals in [0, 1]; every postulate compares against the
threshold 1/2, so floats are rejected at construction.  The catalog covers
the preferential, explanatory, value and shared families, plus epistemic
labelings and labeling/belief congruence.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Mapping
from fractions import Fraction

from .core import ArgumentFramework, DomainError, Label, Labeling

__all__ = [
    "BeliefAssignment",
    "MassDistribution",
    "PostulateId",
    "CATALOG",
    "beliefs_from_mass",
    "check_postulate",
    "satisfied_postulates",
    "epistemic_labeling",
    "is_congruent",
    "distinct_value_count",
]

HALF = Fraction(1, 2)


def _exact(value: object, what: str) -> Fraction:
    if isinstance(value, float):
        raise DomainError(f"{what} must be an exact rational, not a float: {value!r}")
    try:
        result = Fraction(value)  # type: ignore[arg-type]
    except (TypeError, ValueError) as exc:
        raise DomainError(f"{what} is not a rational: {value!r}") from exc
    return result


class BeliefAssignment(Mapping):
    """A total map from arguments to exact rational degrees of belief in [0, 1]."""

    __slots__ = ("_values",)

    def __init__(self, values: Mapping[str, object] | Iterable[tuple[str, object]]):
        pairs = values.items() if isinstance(values, Mapping) else values
        mapping: dict[str, Fraction] = {}
        for a, v in pairs:
            p = _exact(v, f"belief of {a}")
            if not 0 <= p <= 1:
                raise DomainError(f"belief of {a} is outside [0, 1]: {p}")
            mapping[str(a)] = p
        self._values = mapping

    def __getitem__(self, a: str) -> Fraction:
        return self._values[a]

    def __iter__(self):
        return iter(self._values)

    def __len__(self) -> int:
        return len(self._values)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BeliefAssignment):
            return self._values == other._values
        if isinstance(other, Mapping):
            return dict(self._values) == dict(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._values.items()))

    def __repr__(self) -> str:
        body = ", ".join(f"{a}:{v}" for a, v in sorted(self._values.items()))
        return f"BeliefAssignment({body})"


class MassDistribution:
    """Probability masses over argument subsets, summing to exactly one."""

    __slots__ = ("arguments", "entries")

    def __init__(
        self,
        arguments: Iterable[str],
        entries: Mapping[frozenset[str], object] | Iterable[tuple[Iterable[str], object]],
    ):
        args = tuple(arguments)
        known = frozenset(args)
        if len(known) != len(args):
            raise DomainError("duplicate argument in mass distribution domain")
        pairs = entries.items() if isinstance(entries, Mapping) else entries
        table: dict[frozenset[str], Fraction] = {}
        for subset, mass in pairs:
            key = frozenset(subset)
            if not key <= known:
                raise DomainError(f"mass entry {sorted(key)} mentions unknown arguments")
            if key in table:
                raise DomainError(f"duplicate mass entry for {sorted(key)}")
            p = _exact(mass, f"mass of {sorted(key)}")
            if not 0 <= p <= 1:
                raise DomainError(f"mass of {sorted(key)} is outside [0, 1]: {p}")
            table[key] = p
        total = sum(table.values(), Fraction(0))
        if total != 1:
            raise DomainError(f"masses sum to {total}, expected 1")
        self.arguments = args
        self.entries = table

    def __repr__(self) -> str:
        body = ", ".join(f"{{{','.join(sorted(k))}}}:{v}" for k, v in sorted(self.entries.items(), key=lambda e: sorted(e[0])))
        return f"MassDistribution({body})"


class PostulateId(str, enum.Enum):
    PRE = "PRE"
    RAT = "RAT"
    STC = "STC"
    PRO = "PRO"
    RES = "RES"
    DIS = "DIS"
    GRD = "GRD"
    TRU = "TRU"
    ANT = "ANT"
    DEM = "DEM"
    SFOU = "SFOU"
    FOU = "FOU"
    SOPT = "SOPT"
    OPT = "OPT"
    BIN = "BIN"
    TER = "TER"
    NEU = "NEU"
    MAX = "MAX"
    MIN = "MIN"
    COH = "COH"
    INV = "INV"
    JUS = "JUS"
    VAL = "VAL"


CATALOG: tuple[PostulateId, ...] = tuple(p for p in PostulateId if p is not PostulateId.VAL)


def beliefs_from_mass(m: MassDistribution) -> BeliefAssignment:
    """Marginal belief of each argument: total mass of the subsets containing it."""
    values = {a: Fraction(0) for a in m.arguments}
    for subset, mass in m.entries.items():
        for a in subset:
            values[a] += mass
    return BeliefAssignment(values)


def _require_total(af: ArgumentFramework, p: BeliefAssignment) -> None:
    if set(p) != set(af.arguments):
        raise DomainError("belief assignment domain does not match the framework's arguments")


def check_postulate(
    af: ArgumentFramework,
    p: BeliefAssignment,
    postulate: PostulateId,
    n: int | None = None,
) -> bool:
    """Exact evaluation of one postulate; ``n`` is required for VAL only."""
    postulate = PostulateId(postulate)
    _require_total(af, p)
    if postulate is PostulateId.VAL:
        if n is None or n < 1:
            raise DomainError("VAL requires a positive value bound n")
        return len(set(p.values())) <= n
    if n is not None:
        raise DomainError(f"{postulate.value} does not take a value bound")
    attackers: dict[str, list[str]] = {a: [] for a in af.arguments}
    for x, y in af.attacks:
        attackers[y].append(x)

    if postulate is PostulateId.PRE:
        return all(
            not (p[a] > HALF and p[b] > HALF) or p[a] < p[b] for a, b in af.attacks
        )
    if postulate is PostulateId.RAT:
        return all(not p[a] > HALF or p[b] <= HALF for a, b in af.attacks)
    if postulate is PostulateId.STC:
        return all(not p[a] > HALF or p[b] < HALF for a, b in af.attacks)
    if postulate is PostulateId.PRO:
        return all(not p[b] > HALF or p[a] < HALF for a, b in af.attacks)
    if postulate is PostulateId.RES:
        return all(not p[a] >= HALF or p[b] < HALF for a, b in af.attacks)
    if postulate is PostulateId.DIS:
        return all(
            not p[b] < HALF or any(p[a] > HALF for a in attackers[b]) for b in af.arguments
        )
    if postulate is PostulateId.GRD:
        return all(
            not p[b] < HALF or any(p[a] >= HALF for a in attackers[b]) for b in af.arguments
        )
    if postulate is PostulateId.TRU:
        return all(
            not all(p[a] < HALF for a in attackers[b]) or p[b] > HALF for b in af.arguments
        )
    if postulate is PostulateId.ANT:
        return all(
            not all(p[a] <= HALF for a in attackers[b]) or p[b] > HALF for b in af.arguments
        )
    if postulate is PostulateId.DEM:
        for a in af.arguments:
            if p[a] == 1 and any(p[b] != 0 for b in attackers[a]):
                return False
            if p[a] == 0 and not any(p[b] == 1 for b in attackers[a]):
                return False
        return True
    if postulate is PostulateId.SFOU:
        return all(p[a] >= HALF for a in af.arguments if not attackers[a])
    if postulate is PostulateId.FOU:
        return all(p[a] == 1 for a in af.arguments if not attackers[a])
    if postulate is PostulateId.SOPT:
        return all(
            p[a] >= 1 - sum((p[b] for b in attackers[a]), Fraction(0))
            for a in af.arguments
            if attackers[a]
        )
    if postulate is PostulateId.OPT:
        return all(
            p[a] >= 1 - sum((p[b] for b in attackers[a]), Fraction(0)) for a in af.arguments
        )
    if postulate is PostulateId.BIN:
        return all(p[a] != HALF for a in af.arguments)
    if postulate is PostulateId.TER:
        return all(p[a] in (0, HALF, 1) for a in af.arguments)
    if postulate is PostulateId.NEU:
        return all(p[a] == HALF for a in af.arguments)
    if postulate is PostulateId.MAX:
        return all(p[a] == 1 for a in af.arguments)
    if postulate is PostulateId.MIN:
        return all(p[a] == 0 for a in af.arguments)
    if postulate is PostulateId.COH:
        return all(p[a] <= 1 - p[b] for a, b in af.attacks)
    if postulate is PostulateId.INV:
        return all(p[a] == 1 - p[b] for a, b in af.attacks)
    # JUS: coherent and optimistic.
    return check_postulate(af, p, PostulateId.COH) and check_postulate(af, p, PostulateId.OPT)


def satisfied_postulates(af: ArgumentFramework, p: BeliefAssignment) -> frozenset[PostulateId]:
    """All catalog postulates (VAL excluded) that ``p`` satisfies on ``af``."""
    return frozenset(pid for pid in CATALOG if check_postulate(af, p, pid))


def epistemic_labeling(p: BeliefAssignment) -> Labeling:
    """IN above 1/2, OUT below, UNDEC at exactly 1/2."""
    return Labeling(
        {
            a: Label.IN if v > HALF else Label.OUT if v < HALF else Label.UNDEC
            for a, v in p.items()
        }
    )


def is_congruent(labeling: Labeling, p: BeliefAssignment) -> bool:
    """True iff IN/OUT/UNDEC match beliefs exactly 1, 0 and 1/2."""
    if set(labeling) != set(p):
        raise DomainError("labeling and belief assignment have different domains")
    expected = {Label.IN: Fraction(1), Label.OUT: Fraction(0), Label.UNDEC: HALF}
    return all(p[a] == expected[labeling[a]] for a in labeling)


def distinct_value_count(assignments: Iterable[BeliefAssignment]) -> int:
    """Number of distinct belief values used across all the assignments."""
    assignments = list(assignments)
    if not assignments:
        raise DomainError("distinct_value_count requires at least one assignment")
    values: set[Fraction] = set()
    for p in assignments:
        values.update(p.values())
    return len(values)
