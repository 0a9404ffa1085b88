"""Dialogue-survey records and the batch analysis computations over them.

A response record captures one participant's answers at one dialogue step:
Likert agreement per visible statement, a relation answer per asked pair,
and (at the final step) the set of statements known beforehand.  On top of
the records the module builds declared and common graphs, postulate
adherence rates, pooled agreement/relation cross-tabs, belief-change
averages, per-pair relation frequencies, and the core-sample filter.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction

from .bipolar import FlowOrder
from .core import ArgumentFramework, DomainError, Pair
from .epistemic import BeliefAssignment, PostulateId, check_postulate
from .tripolar import SubgraphKind, TripolarGraph, is_subgraph

__all__ = [
    "AgreementLevel",
    "RelationAnswer",
    "Statement",
    "DialogueSpec",
    "ResponseRecord",
    "TableDirection",
    "Pooling",
    "CrossTab",
    "BeliefChangeSummary",
    "likert_to_belief",
    "record_beliefs",
    "attack_graph",
    "declared_graph",
    "common_graphs",
    "adherence_rates",
    "relation_crosstab",
    "belief_change_summary",
    "relation_frequencies",
    "core_sample",
]


class AgreementLevel(str, enum.Enum):
    STRONGLY_AGREE = "STRONGLY_AGREE"
    AGREE = "AGREE"
    SOMEWHAT_AGREE = "SOMEWHAT_AGREE"
    NEITHER = "NEITHER"
    SOMEWHAT_DISAGREE = "SOMEWHAT_DISAGREE"
    DISAGREE = "DISAGREE"
    STRONGLY_DISAGREE = "STRONGLY_DISAGREE"
    DONT_KNOW = "DONT_KNOW"


class RelationAnswer(str, enum.Enum):
    GOOD_AGAINST = "GOOD_AGAINST"
    SOMEWHAT_AGAINST = "SOMEWHAT_AGAINST"
    DEPENDENT = "DEPENDENT"
    SOMEWHAT_FOR = "SOMEWHAT_FOR"
    GOOD_FOR = "GOOD_FOR"
    NA = "NA"


_BELIEF_OF_LEVEL = {
    AgreementLevel.STRONGLY_AGREE: Fraction(6, 6),
    AgreementLevel.AGREE: Fraction(5, 6),
    AgreementLevel.SOMEWHAT_AGREE: Fraction(4, 6),
    AgreementLevel.NEITHER: Fraction(3, 6),
    AgreementLevel.SOMEWHAT_DISAGREE: Fraction(2, 6),
    AgreementLevel.DISAGREE: Fraction(1, 6),
    AgreementLevel.STRONGLY_DISAGREE: Fraction(0, 6),
    AgreementLevel.DONT_KNOW: Fraction(3, 6),
}

_ATTACK_ANSWERS = frozenset({RelationAnswer.GOOD_AGAINST, RelationAnswer.SOMEWHAT_AGAINST})
_SUPPORT_ANSWERS = frozenset({RelationAnswer.GOOD_FOR, RelationAnswer.SOMEWHAT_FOR})


@dataclass(frozen=True)
class Statement:
    """One utterance of a dialogue: identifier, flow position, speaker, text."""

    id: str
    step: int
    index: int
    speaker: str
    text: str


@dataclass(frozen=True, eq=False)
class DialogueSpec:
    """A dialogue's statements in flow order plus the intended graph per step."""

    name: str
    statements: tuple[Statement, ...]
    intended: Mapping[int, TripolarGraph]

    def __init__(
        self,
        name: str,
        statements: Iterable[Statement],
        intended: Mapping[int, TripolarGraph],
    ) -> None:
        stmts = tuple(statements)
        if not name:
            raise DomainError("dialogue name must be nonempty")
        if not stmts:
            raise DomainError("dialogue has no statements")
        flow = FlowOrder([(s.id, s.step, s.index) for s in stmts])
        steps = {s.step for s in stmts}
        top = max(steps)
        missing = set(range(1, top + 1)) - steps
        if missing:
            raise DomainError(f"dialogue steps are not contiguous, missing {sorted(missing)}")
        graphs = dict(intended)
        if set(graphs) != set(range(1, top + 1)):
            raise DomainError(f"intended graphs must cover steps 1..{top}")
        ordered = tuple(s.id for s in sorted(stmts, key=lambda s: (s.step, s.index)))
        for step, graph in graphs.items():
            visible = {s.id for s in stmts if s.step <= step}
            if set(graph.arguments) != visible:
                raise DomainError(
                    f"intended graph at step {step} is not over the visible statements"
                )
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "statements", stmts)
        object.__setattr__(self, "intended", graphs)
        object.__setattr__(self, "_order", ordered)
        object.__setattr__(self, "_flow", flow)

    @property
    def flow(self) -> FlowOrder:
        return self._flow  # type: ignore[attr-defined]

    @property
    def max_step(self) -> int:
        return max(s.step for s in self.statements)

    def visible_at(self, step: int) -> tuple[str, ...]:
        """Statement identifiers uttered up to and including ``step``, in flow order."""
        if step < 1:
            raise DomainError(f"step must be positive: {step}")
        by_id = {s.id: s for s in self.statements}
        return tuple(a for a in self._order if by_id[a].step <= step)  # type: ignore[attr-defined]

    def asked_pairs(self, step: int) -> tuple[Pair, ...]:
        """Ordered pairs queried at ``step``: every statement against each earlier one."""
        visible = self.visible_at(step)
        return tuple((x, y) for i, x in enumerate(visible) for y in visible[:i])

    def intended_graph(self, step: int) -> TripolarGraph:
        try:
            return self.intended[step]
        except KeyError:
            raise DomainError(f"dialogue {self.name} has no step {step}") from None


@dataclass(frozen=True, eq=False)
class ResponseRecord:
    """One participant's answers at one dialogue step."""

    participant: str
    dialogue: str
    step: int
    agreement: Mapping[str, AgreementLevel]
    relations: Mapping[Pair, RelationAnswer]
    awareness: frozenset[str] | None

    def __init__(
        self,
        participant: str,
        dialogue: str,
        step: int,
        agreement: Mapping[str, AgreementLevel],
        relations: Mapping[Pair, RelationAnswer] = (),
        awareness: Iterable[str] | None = None,
    ) -> None:
        if not participant:
            raise DomainError("participant identifier must be nonempty")
        if not dialogue:
            raise DomainError("dialogue identifier must be nonempty")
        if step < 1:
            raise DomainError(f"step must be positive: {step}")
        agr = {str(a): AgreementLevel(v) for a, v in dict(agreement).items()}
        if not agr:
            raise DomainError("record has no agreement answers")
        rels: dict[Pair, RelationAnswer] = {}
        rel_pairs = relations.items() if isinstance(relations, Mapping) else relations
        for pair, answer in rel_pairs:
            src, tgt = tuple(pair)
            if src not in agr or tgt not in agr:
                raise DomainError(f"relation ({src},{tgt}) mentions a statement without agreement")
            if src == tgt:
                raise DomainError(f"relation pair may not be reflexive: ({src},{src})")
            rels[(src, tgt)] = RelationAnswer(answer)
        aware = None
        if awareness is not None:
            aware = frozenset(str(a) for a in awareness)
            unknown = aware - set(agr)
            if unknown:
                raise DomainError(f"awareness names unknown statements: {sorted(unknown)}")
        object.__setattr__(self, "participant", participant)
        object.__setattr__(self, "dialogue", dialogue)
        object.__setattr__(self, "step", step)
        object.__setattr__(self, "agreement", agr)
        object.__setattr__(self, "relations", rels)
        object.__setattr__(self, "awareness", aware)


def likert_to_belief(level: AgreementLevel) -> Fraction:
    """Fixed sixths scale from strongly-disagree 0 to strongly-agree 1."""
    return _BELIEF_OF_LEVEL[AgreementLevel(level)]


def record_beliefs(r: ResponseRecord) -> BeliefAssignment:
    """The record's agreement answers as exact degrees of belief."""
    return BeliefAssignment({a: likert_to_belief(v) for a, v in r.agreement.items()})


def declared_graph(r: ResponseRecord) -> TripolarGraph:
    """The tripolar graph a record declares: for/against/dependent answers as edges."""
    atts = [p for p, ans in r.relations.items() if ans in _ATTACK_ANSWERS]
    sups = [p for p, ans in r.relations.items() if ans in _SUPPORT_ANSWERS]
    deps = [p for p, ans in r.relations.items() if ans is RelationAnswer.DEPENDENT]
    return TripolarGraph(sorted(r.agreement), atts, sups, deps)


def attack_graph(t: TripolarGraph) -> ArgumentFramework:
    """Project a tripolar graph onto its attack relation."""
    return ArgumentFramework(t.arguments, t.attacks)


def _require_same_dialogue(rs: Sequence[ResponseRecord]) -> None:
    dialogues = {r.dialogue for r in rs}
    if len(dialogues) > 1:
        raise DomainError(f"records span several dialogues: {sorted(dialogues)}")


def common_graphs(rs: Iterable[ResponseRecord], step: int) -> frozenset[TripolarGraph]:
    """Declared graphs of maximal multiplicity among the records at ``step``."""
    at_step = [r for r in rs if r.step == step]
    if not at_step:
        raise DomainError(f"no records at step {step}")
    _require_same_dialogue(at_step)
    counts: dict[TripolarGraph, int] = {}
    for r in at_step:
        g = declared_graph(r)
        counts[g] = counts.get(g, 0) + 1
    best = max(counts.values())
    return frozenset(g for g, c in counts.items() if c == best)


def adherence_rates(
    beliefs_by_step: Sequence[BeliefAssignment],
    graphs_by_step: Sequence[ArgumentFramework],
    ids: Iterable[PostulateId],
) -> dict[PostulateId, Fraction]:
    """Per postulate, the fraction of steps at which the beliefs satisfy it."""
    if len(beliefs_by_step) != len(graphs_by_step):
        raise DomainError("beliefs and graphs must cover the same steps")
    steps = len(beliefs_by_step)
    if steps == 0:
        raise DomainError("adherence requires at least one step")
    wanted = {PostulateId(i) for i in ids}
    result: dict[PostulateId, Fraction] = {}
    for pid in PostulateId:
        if pid not in wanted:
            continue
        satisfied = sum(
            1
            for p, af in zip(beliefs_by_step, graphs_by_step)
            if check_postulate(af, p, pid)
        )
        result[pid] = Fraction(satisfied, steps)
    return result


class TableDirection(str, enum.Enum):
    BY_RELATION = "by-relation"
    BY_SOURCE = "by-source"


class Pooling(str, enum.Enum):
    NONE = "none"
    STRENGTH = "strength"
    POLARITY = "polarity"


_AGREEMENT_CLASSES = {
    Pooling.NONE: tuple(level.value for level in AgreementLevel),
    Pooling.STRENGTH: ("strong", "moderate", "weak", "neither"),
    Pooling.POLARITY: ("believed", "disbelieved", "neither"),
}

_AGREEMENT_POOL = {
    Pooling.NONE: lambda level: level.value,
    Pooling.STRENGTH: {
        AgreementLevel.STRONGLY_AGREE: "strong",
        AgreementLevel.STRONGLY_DISAGREE: "strong",
        AgreementLevel.AGREE: "moderate",
        AgreementLevel.DISAGREE: "moderate",
        AgreementLevel.SOMEWHAT_AGREE: "weak",
        AgreementLevel.SOMEWHAT_DISAGREE: "weak",
        AgreementLevel.NEITHER: "neither",
        AgreementLevel.DONT_KNOW: "neither",
    }.__getitem__,
    Pooling.POLARITY: {
        AgreementLevel.SOMEWHAT_AGREE: "believed",
        AgreementLevel.AGREE: "believed",
        AgreementLevel.STRONGLY_AGREE: "believed",
        AgreementLevel.SOMEWHAT_DISAGREE: "disbelieved",
        AgreementLevel.DISAGREE: "disbelieved",
        AgreementLevel.STRONGLY_DISAGREE: "disbelieved",
        AgreementLevel.NEITHER: "neither",
        AgreementLevel.DONT_KNOW: "neither",
    }.__getitem__,
}

_RELATION_CLASSES = {
    Pooling.NONE: (
        RelationAnswer.GOOD_AGAINST.value,
        RelationAnswer.SOMEWHAT_AGAINST.value,
        RelationAnswer.DEPENDENT.value,
        RelationAnswer.SOMEWHAT_FOR.value,
        RelationAnswer.GOOD_FOR.value,
    ),
    Pooling.STRENGTH: ("strong", "normal", "dependency"),
    Pooling.POLARITY: ("attack", "support", "dependency"),
}

_RELATION_POOL = {
    Pooling.NONE: lambda answer: answer.value,
    Pooling.STRENGTH: {
        RelationAnswer.GOOD_AGAINST: "strong",
        RelationAnswer.GOOD_FOR: "strong",
        RelationAnswer.SOMEWHAT_AGAINST: "normal",
        RelationAnswer.SOMEWHAT_FOR: "normal",
        RelationAnswer.DEPENDENT: "dependency",
    }.__getitem__,
    Pooling.POLARITY: {
        RelationAnswer.GOOD_AGAINST: "attack",
        RelationAnswer.SOMEWHAT_AGAINST: "attack",
        RelationAnswer.GOOD_FOR: "support",
        RelationAnswer.SOMEWHAT_FOR: "support",
        RelationAnswer.DEPENDENT: "dependency",
    }.__getitem__,
}


@dataclass(frozen=True, eq=False)
class CrossTab:
    """Source-agreement versus relation-class contingency table.

    Rows are agreement classes, columns relation classes.  ``percentages``
    normalizes each column to 100 for BY_RELATION and each row for BY_SOURCE;
    an all-empty line stays at zero.
    """

    direction: TableDirection
    row_labels: tuple[str, ...]
    col_labels: tuple[str, ...]
    counts: Mapping[tuple[str, str], int]
    percentages: Mapping[tuple[str, str], Fraction]


def relation_crosstab(
    rs: Iterable[ResponseRecord],
    direction: TableDirection = TableDirection.BY_RELATION,
    agreement_pooling: Pooling = Pooling.NONE,
    relation_pooling: Pooling = Pooling.NONE,
) -> CrossTab:
    """Tabulate each declared relation against the agreement of its source.

    Unanswered (NA) pairs carry no relation and are left out; the agreement
    level is taken from the same record the relation answer comes from.
    """
    direction = TableDirection(direction)
    agreement_pooling = Pooling(agreement_pooling)
    relation_pooling = Pooling(relation_pooling)
    rows = _AGREEMENT_CLASSES[agreement_pooling]
    cols = _RELATION_CLASSES[relation_pooling]
    pool_row = _AGREEMENT_POOL[agreement_pooling]
    pool_col = _RELATION_POOL[relation_pooling]
    counts = {(r, c): 0 for r in rows for c in cols}
    for record in rs:
        for (src, _), answer in record.relations.items():
            if answer is RelationAnswer.NA:
                continue
            key = (pool_row(record.agreement[src]), pool_col(answer))
            counts[key] += 1
    percentages: dict[tuple[str, str], Fraction] = {}
    if direction is TableDirection.BY_RELATION:
        for c in cols:
            total = sum(counts[(r, c)] for r in rows)
            for r in rows:
                percentages[(r, c)] = Fraction(100 * counts[(r, c)], total) if total else Fraction(0)
    else:
        for r in rows:
            total = sum(counts[(r, c)] for c in cols)
            for c in cols:
                percentages[(r, c)] = Fraction(100 * counts[(r, c)], total) if total else Fraction(0)
    return CrossTab(direction, rows, cols, counts, percentages)


@dataclass(frozen=True)
class BeliefChangeSummary:
    """Mean per-statement belief movement, split by prior awareness."""

    aware_avg: Fraction
    unaware_avg: Fraction


def _group_by_participant(rs: Iterable[ResponseRecord]) -> dict[str, list[ResponseRecord]]:
    groups: dict[str, list[ResponseRecord]] = {}
    for r in rs:
        groups.setdefault(r.participant, []).append(r)
    return groups


def _ordered_steps(participant: str, recs: list[ResponseRecord]) -> list[ResponseRecord]:
    steps = [r.step for r in recs]
    if len(set(steps)) != len(steps):
        raise DomainError(f"participant {participant} has duplicate steps")
    return sorted(recs, key=lambda r: r.step)


def belief_change_summary(rs: Iterable[ResponseRecord]) -> BeliefChangeSummary:
    """Average absolute belief change per statement, aware versus unaware.

    Per participant, the absolute differences of a statement's belief across
    consecutive steps are summed and divided by the number of aware
    (respectively unaware) statements; the summary averages those values over
    the participants with a nonzero denominator on that side.
    """
    records = list(rs)
    if not records:
        raise DomainError("no records given")
    _require_same_dialogue(records)
    aware_values: list[Fraction] = []
    unaware_values: list[Fraction] = []
    for participant, recs in sorted(_group_by_participant(records).items()):
        ordered = _ordered_steps(participant, recs)
        if len(ordered) < 2:
            raise DomainError(f"participant {participant} has fewer than two steps")
        awareness: frozenset[str] | None = None
        for r in ordered:
            if r.awareness is not None:
                awareness = r.awareness if awareness is None else awareness | r.awareness
        if awareness is None:
            raise DomainError(f"participant {participant} has no awareness answers")
        statements: set[str] = set()
        change: dict[str, Fraction] = {}
        for r in ordered:
            statements.update(r.agreement)
        for earlier, later in zip(ordered, ordered[1:]):
            for s in earlier.agreement.keys() & later.agreement.keys():
                delta = abs(
                    likert_to_belief(later.agreement[s]) - likert_to_belief(earlier.agreement[s])
                )
                change[s] = change.get(s, Fraction(0)) + delta
        aware = statements & awareness
        unaware = statements - awareness
        if aware:
            aware_values.append(sum((change.get(s, Fraction(0)) for s in aware), Fraction(0)) / len(aware))
        if unaware:
            unaware_values.append(
                sum((change.get(s, Fraction(0)) for s in unaware), Fraction(0)) / len(unaware)
            )
    aware_avg = sum(aware_values, Fraction(0)) / len(aware_values) if aware_values else Fraction(0)
    unaware_avg = (
        sum(unaware_values, Fraction(0)) / len(unaware_values) if unaware_values else Fraction(0)
    )
    return BeliefChangeSummary(aware_avg, unaware_avg)


_FREQUENCY_CLASSES = ("attack", "support", "dependency", "na")


def relation_frequencies(rs: Iterable[ResponseRecord]) -> dict[Pair, dict[str, Fraction]]:
    """Per ordered pair, the percentage of answers declaring each relation class."""
    tallies: dict[Pair, dict[str, int]] = {}
    for record in rs:
        for pair, answer in record.relations.items():
            cell = tallies.setdefault(pair, dict.fromkeys(_FREQUENCY_CLASSES, 0))
            if answer in _ATTACK_ANSWERS:
                cell["attack"] += 1
            elif answer in _SUPPORT_ANSWERS:
                cell["support"] += 1
            elif answer is RelationAnswer.DEPENDENT:
                cell["dependency"] += 1
            else:
                cell["na"] += 1
    result: dict[Pair, dict[str, Fraction]] = {}
    for pair in sorted(tallies):
        total = sum(tallies[pair].values())
        result[pair] = {
            cls: Fraction(100 * count, total) for cls, count in tallies[pair].items()
        }
    return result


def core_sample(
    rs: Iterable[ResponseRecord],
    dialogue: DialogueSpec,
    kind: SubgraphKind = SubgraphKind.CONFUSION,
    threshold: int = 4,
) -> tuple[str, ...]:
    """Participants whose declared graphs contain the intended graph often enough.

    A step counts when the intended graph at that step is a ``kind``-subgraph
    of the participant's declared graph; participants reaching ``threshold``
    counting steps are kept.
    """
    kind = SubgraphKind(kind)
    if threshold < 0:
        raise DomainError(f"threshold must be nonnegative: {threshold}")
    records = list(rs)
    for r in records:
        if r.dialogue != dialogue.name:
            raise DomainError(
                f"record for dialogue {r.dialogue} does not match spec {dialogue.name}"
            )
    kept: list[str] = []
    for participant, recs in sorted(_group_by_participant(records).items()):
        ordered = _ordered_steps(participant, recs)
        hits = sum(
            1
            for r in ordered
            if is_subgraph(dialogue.intended_graph(r.step), declared_graph(r), kind)
        )
        if hits >= threshold:
            kept.append(participant)
    return tuple(kept)
