"""Text formats: fact files, structured JSON documents, and survey CSV.

Graphs travel as period-terminated facts, one per line (``arg(a).``,
``att(a,b).``, ``sup(a,b).``, ``dep(a,b).``, ``ord(a,step,index).``), with
``%`` comments.  Beliefs use ``bel(a, p/q).``, mass functions
``mass({a,b}, p/q).``, and subgraph distributions repeat graph blocks each
closed by ``prob(p/q).``.  A JSON alternative with explicit field names is
accepted for graphs and dialogue specs.  All parse failures carry the source
name and 1-based line number.
"""

from __future__ import annotations

import csv
import io
import json
import re
from collections.abc import Iterable, Mapping
from fractions import Fraction

from .bipolar import BipolarFramework, FlowOrder
from .constellation import SubgraphDistribution, SubgraphMode
from .core import ArgLabError, ArgumentFramework, DomainError, Labeling, Pair
from .epistemic import BeliefAssignment, MassDistribution
from .survey import (
    AgreementLevel,
    DialogueSpec,
    RelationAnswer,
    ResponseRecord,
    Statement,
)
from .tripolar import TripolarGraph

__all__ = [
    "ParseError",
    "parse_framework",
    "parse_bipolar",
    "parse_tripolar",
    "parse_graph_with_flow",
    "parse_beliefs",
    "parse_mass",
    "parse_distribution",
    "parse_dialogue",
    "parse_responses",
    "emit_framework",
    "emit_bipolar",
    "emit_tripolar",
    "emit_graph",
    "emit_beliefs",
    "emit_mass",
    "emit_distribution",
    "framework_to_data",
    "framework_from_data",
    "bipolar_to_data",
    "tripolar_to_data",
    "tripolar_from_data",
    "labeling_to_data",
]

RESPONSE_HEADER = ("participant", "dialogue", "step", "kind", "subject", "object", "answer")


class ParseError(ArgLabError):
    """Malformed or inconsistent input, located by source name and line."""

    def __init__(self, source: str, line: int, message: str):
        self.source = source
        self.line = line
        super().__init__(f"{source}:{line}: {message}" if line else f"{source}: {message}")


_FACT_RE = re.compile(r"^([a-z_]+)\s*\((.*)\)\s*\.$")
_NAME_RE = re.compile(r"^[A-Za-z0-9_]+$")
_RATIONAL_RE = re.compile(r"^-?\d+(?:/\d+)?$")


def _split_top_level(body: str) -> list[str] | None:
    parts: list[str] = []
    depth = 0
    current = []
    for ch in body:
        if ch == "{":
            depth += 1
        elif ch == "}":
            depth -= 1
            if depth < 0:
                return None
        if ch == "," and depth == 0:
            parts.append("".join(current).strip())
            current = []
        else:
            current.append(ch)
    if depth != 0:
        return None
    tail = "".join(current).strip()
    if tail or parts:
        parts.append(tail)
    return parts


def _iter_facts(text: str, source: str):
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("%", 1)[0].strip()
        if not line:
            continue
        match = _FACT_RE.match(line)
        if match is None:
            raise ParseError(source, line_no, f"expected a period-terminated fact, got {line!r}")
        args = _split_top_level(match.group(2))
        if args is None:
            raise ParseError(source, line_no, "unbalanced braces in fact arguments")
        yield line_no, match.group(1), args


def _name(token: str, source: str, line: int) -> str:
    if not _NAME_RE.match(token):
        raise ParseError(source, line, f"invalid name: {token!r}")
    return token


def _rational(token: str, source: str, line: int) -> Fraction:
    if not _RATIONAL_RE.match(token):
        raise ParseError(source, line, f"invalid rational literal: {token!r}")
    try:
        return Fraction(token)
    except ZeroDivisionError:
        raise ParseError(source, line, f"zero denominator: {token!r}") from None


def _integer(token: str, source: str, line: int) -> int:
    if not re.match(r"^-?\d+$", token):
        raise ParseError(source, line, f"invalid integer literal: {token!r}")
    return int(token)


def _arity(args: list[str], n: int, functor: str, source: str, line: int) -> list[str]:
    if len(args) != n:
        raise ParseError(source, line, f"{functor} takes {n} arguments, got {len(args)}")
    return args


class _GraphBuilder:
    """Accumulates graph facts, keeping lines for late endpoint validation."""

    def __init__(self, source: str, allowed: frozenset[str]):
        self.source = source
        self.allowed = allowed
        self.arguments: list[str] = []
        self.edges: dict[str, list[tuple[int, Pair]]] = {"att": [], "sup": [], "dep": []}
        self.flow: list[tuple[int, tuple[str, int, int]]] = []
        self._seen_args: set[str] = set()

    def feed(self, line: int, functor: str, args: list[str]) -> None:
        if functor not in self.allowed:
            raise ParseError(self.source, line, f"unexpected {functor} fact here")
        if functor == "arg":
            (token,) = _arity(args, 1, functor, self.source, line)
            name = _name(token, self.source, line)
            if name in self._seen_args:
                raise ParseError(self.source, line, f"duplicate argument: {name}")
            self._seen_args.add(name)
            self.arguments.append(name)
        elif functor in ("att", "sup", "dep"):
            x, y = _arity(args, 2, functor, self.source, line)
            self.edges[functor].append(
                (line, (_name(x, self.source, line), _name(y, self.source, line)))
            )
        else:
            name, step, index = _arity(args, 3, functor, self.source, line)
            self.flow.append(
                (
                    line,
                    (
                        _name(name, self.source, line),
                        _integer(step, self.source, line),
                        _integer(index, self.source, line),
                    ),
                )
            )

    def check_endpoints(self) -> None:
        for rows in self.edges.values():
            for line, (x, y) in rows:
                for end in (x, y):
                    if end not in self._seen_args:
                        raise ParseError(self.source, line, f"undeclared argument: {end}")
        for line, (name, _, _) in self.flow:
            if name not in self._seen_args:
                raise ParseError(self.source, line, f"undeclared argument: {name}")

    def pairs(self, functor: str) -> list[Pair]:
        return [pair for _, pair in self.edges[functor]]


def _looks_structured(text: str) -> bool:
    stripped = text.lstrip()
    return stripped.startswith("{")


def _load_json(text: str, source: str) -> dict:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(source, exc.lineno, f"invalid JSON: {exc.msg}") from None
    if not isinstance(data, dict):
        raise ParseError(source, 1, "top-level JSON value must be an object")
    return data


def _check_keys(data: dict, allowed: Iterable[str], source: str) -> None:
    extra = set(data) - set(allowed)
    if extra:
        raise ParseError(source, 1, f"unknown fields: {sorted(extra)}")


def _string_list(data: dict, key: str, source: str) -> list[str]:
    value = data.get(key, [])
    if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
        raise ParseError(source, 1, f"{key} must be a list of strings")
    return value


def _pair_list(data: dict, key: str, source: str) -> list[Pair]:
    value = data.get(key, [])
    if not isinstance(value, list):
        raise ParseError(source, 1, f"{key} must be a list of pairs")
    pairs: list[Pair] = []
    for item in value:
        if not (isinstance(item, list) and len(item) == 2 and all(isinstance(v, str) for v in item)):
            raise ParseError(source, 1, f"{key} entries must be [source, target] pairs")
        pairs.append((item[0], item[1]))
    return pairs


def _wrap_domain(source: str, line: int):
    class _Ctx:
        def __enter__(self):
            return self

        def __exit__(self, exc_type, exc, tb):
            if exc_type is not None and issubclass(exc_type, DomainError):
                raise ParseError(source, line, str(exc)) from None
            return False

    return _Ctx()


def parse_framework(text: str, source: str = "<framework>") -> ArgumentFramework:
    """Read a plain attack graph from fact lines or a structured document."""
    if _looks_structured(text):
        data = _load_json(text, source)
        _check_keys(data, ("arguments", "attacks"), source)
        with _wrap_domain(source, 1):
            return ArgumentFramework(_string_list(data, "arguments", source), _pair_list(data, "attacks", source))
    builder = _GraphBuilder(source, frozenset({"arg", "att"}))
    for line, functor, args in _iter_facts(text, source):
        builder.feed(line, functor, args)
    builder.check_endpoints()
    return ArgumentFramework(builder.arguments, builder.pairs("att"))


def parse_bipolar(text: str, source: str = "<bipolar>") -> BipolarFramework:
    """Read a bipolar graph (attacks plus supports)."""
    if _looks_structured(text):
        data = _load_json(text, source)
        _check_keys(data, ("arguments", "attacks", "supports"), source)
        with _wrap_domain(source, 1):
            return BipolarFramework(
                _string_list(data, "arguments", source),
                _pair_list(data, "attacks", source),
                _pair_list(data, "supports", source),
            )
    builder = _GraphBuilder(source, frozenset({"arg", "att", "sup"}))
    for line, functor, args in _iter_facts(text, source):
        builder.feed(line, functor, args)
    builder.check_endpoints()
    with _wrap_domain(source, 1):
        return BipolarFramework(builder.arguments, builder.pairs("att"), builder.pairs("sup"))


def parse_tripolar(text: str, source: str = "<tripolar>") -> TripolarGraph:
    """Read a tripolar graph (attacks, supports, dependencies)."""
    if _looks_structured(text):
        data = _load_json(text, source)
        _check_keys(data, ("arguments", "attacks", "supports", "dependencies"), source)
        with _wrap_domain(source, 1):
            return tripolar_from_data(data, source)
    builder = _GraphBuilder(source, frozenset({"arg", "att", "sup", "dep"}))
    for line, functor, args in _iter_facts(text, source):
        builder.feed(line, functor, args)
    builder.check_endpoints()
    with _wrap_domain(source, 1):
        return TripolarGraph(
            builder.arguments, builder.pairs("att"), builder.pairs("sup"), builder.pairs("dep")
        )


def parse_graph_with_flow(text: str, source: str = "<graph>") -> tuple[TripolarGraph, FlowOrder | None]:
    """Read a tripolar graph together with optional ``ord`` flow facts."""
    if _looks_structured(text):
        data = _load_json(text, source)
        _check_keys(data, ("arguments", "attacks", "supports", "dependencies", "flow"), source)
        with _wrap_domain(source, 1):
            graph = tripolar_from_data(data, source)
            flow = None
            if "flow" in data:
                rows = data["flow"]
                if not isinstance(rows, list):
                    raise ParseError(source, 1, "flow must be a list of [name, step, index] rows")
                entries = []
                for item in rows:
                    if not (
                        isinstance(item, list)
                        and len(item) == 3
                        and isinstance(item[0], str)
                        and isinstance(item[1], int)
                        and isinstance(item[2], int)
                    ):
                        raise ParseError(source, 1, "flow entries must be [name, step, index]")
                    entries.append((item[0], item[1], item[2]))
                flow = FlowOrder(entries)
            return graph, flow
    builder = _GraphBuilder(source, frozenset({"arg", "att", "sup", "dep", "ord"}))
    for line, functor, args in _iter_facts(text, source):
        builder.feed(line, functor, args)
    builder.check_endpoints()
    with _wrap_domain(source, 1):
        graph = TripolarGraph(
            builder.arguments, builder.pairs("att"), builder.pairs("sup"), builder.pairs("dep")
        )
        flow = FlowOrder([row for _, row in builder.flow]) if builder.flow else None
    return graph, flow


def parse_beliefs(text: str, source: str = "<beliefs>") -> BeliefAssignment:
    """Read ``bel(a, p/q).`` facts into a belief assignment."""
    values: dict[str, Fraction] = {}
    for line, functor, args in _iter_facts(text, source):
        if functor != "bel":
            raise ParseError(source, line, f"unexpected {functor} fact here")
        name_token, value_token = _arity(args, 2, functor, source, line)
        name = _name(name_token, source, line)
        value = _rational(value_token, source, line)
        if name in values:
            raise ParseError(source, line, f"duplicate belief for {name}")
        if not 0 <= value <= 1:
            raise ParseError(source, line, f"belief outside [0, 1]: {value}")
        values[name] = value
    return BeliefAssignment(values)


def _set_literal(token: str, source: str, line: int) -> frozenset[str]:
    if not (token.startswith("{") and token.endswith("}")):
        raise ParseError(source, line, f"expected a set literal, got {token!r}")
    inner = token[1:-1].strip()
    if not inner:
        return frozenset()
    return frozenset(_name(part.strip(), source, line) for part in inner.split(","))


def parse_mass(text: str, source: str = "<mass>") -> MassDistribution:
    """Read ``arg`` facts plus ``mass({..}, p/q).`` facts into a mass function."""
    arguments: list[str] = []
    seen: set[str] = set()
    entries: list[tuple[frozenset[str], Fraction]] = []
    keys: set[frozenset[str]] = set()
    last_line = 1
    for line, functor, args in _iter_facts(text, source):
        last_line = line
        if functor == "arg":
            (token,) = _arity(args, 1, functor, source, line)
            name = _name(token, source, line)
            if name in seen:
                raise ParseError(source, line, f"duplicate argument: {name}")
            seen.add(name)
            arguments.append(name)
        elif functor == "mass":
            subset_token, value_token = _arity(args, 2, functor, source, line)
            subset = _set_literal(subset_token, source, line)
            unknown = subset - seen
            if unknown:
                raise ParseError(source, line, f"undeclared arguments: {sorted(unknown)}")
            if subset in keys:
                raise ParseError(source, line, f"duplicate mass entry for {sorted(subset)}")
            keys.add(subset)
            entries.append((subset, _rational(value_token, source, line)))
        else:
            raise ParseError(source, line, f"unexpected {functor} fact here")
    with _wrap_domain(source, last_line):
        return MassDistribution(arguments, entries)


def parse_distribution(
    text: str,
    source: str = "<distribution>",
    mode: SubgraphMode = SubgraphMode.GENERAL,
) -> SubgraphDistribution:
    """Read repeated subgraph blocks, each closed by a ``prob(p/q).`` fact.

    The base graph is the union of all blocks; block masses must sum to one.
    """
    blocks: list[tuple[tuple[str, ...], list[Pair], Fraction]] = []
    builder: _GraphBuilder | None = None
    last_line = 1
    for line, functor, args in _iter_facts(text, source):
        last_line = line
        if functor == "prob":
            (token,) = _arity(args, 1, functor, source, line)
            mass = _rational(token, source, line)
            if builder is None:
                builder = _GraphBuilder(source, frozenset({"arg", "att"}))
            builder.check_endpoints()
            blocks.append((tuple(builder.arguments), builder.pairs("att"), mass))
            builder = None
            continue
        if builder is None:
            builder = _GraphBuilder(source, frozenset({"arg", "att"}))
        builder.feed(line, functor, args)
    if builder is not None:
        raise ParseError(source, last_line, "subgraph block is missing its prob fact")
    if not blocks:
        raise ParseError(source, 1, "distribution file has no subgraph blocks")
    base_args: list[str] = []
    seen: set[str] = set()
    base_atts: set[Pair] = set()
    for args_tuple, atts, _ in blocks:
        for a in args_tuple:
            if a not in seen:
                seen.add(a)
                base_args.append(a)
        base_atts.update(atts)
    with _wrap_domain(source, last_line):
        base = ArgumentFramework(base_args, sorted(base_atts))
        entries = [
            (ArgumentFramework(args_tuple, atts), mass) for args_tuple, atts, mass in blocks
        ]
        return SubgraphDistribution(base, entries, mode)


def parse_dialogue(text: str, source: str = "<dialogue>") -> DialogueSpec:
    """Read a dialogue spec document: statements plus intended graphs per step."""
    data = _load_json(text, source)
    _check_keys(data, ("name", "statements", "intended"), source)
    name = data.get("name")
    if not isinstance(name, str) or not name:
        raise ParseError(source, 1, "name must be a nonempty string")
    rows = data.get("statements")
    if not isinstance(rows, list) or not rows:
        raise ParseError(source, 1, "statements must be a nonempty list")
    statements: list[Statement] = []
    for item in rows:
        if not (
            isinstance(item, list)
            and len(item) == 5
            and isinstance(item[0], str)
            and isinstance(item[1], int)
            and isinstance(item[2], int)
            and isinstance(item[3], str)
            and isinstance(item[4], str)
        ):
            raise ParseError(source, 1, "statements entries must be [id, step, index, speaker, text]")
        statements.append(Statement(item[0], item[1], item[2], item[3], item[4]))
    intended_data = data.get("intended")
    if not isinstance(intended_data, dict):
        raise ParseError(source, 1, "intended must map step numbers to graphs")
    intended: dict[int, TripolarGraph] = {}
    with _wrap_domain(source, 1):
        for key, value in intended_data.items():
            try:
                step = int(key)
            except ValueError:
                raise ParseError(source, 1, f"intended step keys must be integers, got {key!r}") from None
            if not isinstance(value, dict):
                raise ParseError(source, 1, f"intended[{key}] must be an object")
            _check_keys(value, ("attacks", "supports", "dependencies"), source)
            visible = tuple(
                s.id for s in sorted(statements, key=lambda s: (s.step, s.index)) if s.step <= step
            )
            intended[step] = TripolarGraph(
                visible,
                _pair_list(value, "attacks", source),
                _pair_list(value, "supports", source),
                _pair_list(value, "dependencies", source),
            )
        return DialogueSpec(name, statements, intended)


def _response_groups(
    text: str, source: str, dialogues: Mapping[str, DialogueSpec]
):
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise ParseError(source, 1, "empty response file") from None
    if tuple(h.strip() for h in header) != RESPONSE_HEADER:
        raise ParseError(source, 1, f"header must be {','.join(RESPONSE_HEADER)}")
    groups: dict[tuple[str, str, int], dict] = {}
    for line, row in enumerate(reader, start=2):
        if not row:
            continue
        if len(row) != len(RESPONSE_HEADER):
            raise ParseError(source, line, f"expected {len(RESPONSE_HEADER)} fields, got {len(row)}")
        participant, dialogue_id, step_token, kind, subject, obj, answer = (v.strip() for v in row)
        if not participant or not dialogue_id:
            raise ParseError(source, line, "participant and dialogue must be nonempty")
        if not step_token.isdigit() or int(step_token) < 1:
            raise ParseError(source, line, f"step must be a positive integer: {step_token!r}")
        step = int(step_token)
        if dialogue_id not in dialogues:
            raise ParseError(source, line, f"unknown dialogue: {dialogue_id}")
        dialogue = dialogues[dialogue_id]
        if step > dialogue.max_step:
            raise ParseError(source, line, f"dialogue {dialogue_id} has no step {step}")
        visible = set(dialogue.visible_at(step))
        group = groups.setdefault(
            (participant, dialogue_id, step),
            {"line": line, "agreement": {}, "relations": {}, "aware": {}},
        )
        if kind == "agreement":
            if obj:
                raise ParseError(source, line, "agreement rows take no object")
            if subject not in visible:
                raise ParseError(source, line, f"statement {subject} is not visible at step {step}")
            if subject in group["agreement"]:
                raise ParseError(source, line, f"duplicate agreement answer for {subject}")
            try:
                group["agreement"][subject] = AgreementLevel(answer)
            except ValueError:
                raise ParseError(source, line, f"unknown agreement level: {answer!r}") from None
        elif kind == "relation":
            if subject not in visible or obj not in visible:
                raise ParseError(source, line, f"pair ({subject},{obj}) is not visible at step {step}")
            if not dialogue.flow.precedes(obj, subject):
                raise ParseError(
                    source, line, f"relation source {subject} does not come after {obj}"
                )
            if (subject, obj) in group["relations"]:
                raise ParseError(source, line, f"duplicate relation answer for ({subject},{obj})")
            try:
                group["relations"][(subject, obj)] = RelationAnswer(answer)
            except ValueError:
                raise ParseError(source, line, f"unknown relation answer: {answer!r}") from None
        elif kind == "awareness":
            if obj:
                raise ParseError(source, line, "awareness rows take no object")
            if step != dialogue.max_step:
                raise ParseError(source, line, "awareness is recorded at the final step only")
            if subject not in visible:
                raise ParseError(source, line, f"unknown statement: {subject}")
            if subject in group["aware"]:
                raise ParseError(source, line, f"duplicate awareness answer for {subject}")
            if answer not in ("AWARE", "UNAWARE"):
                raise ParseError(source, line, f"awareness answer must be AWARE or UNAWARE: {answer!r}")
            group["aware"][subject] = answer == "AWARE"
        else:
            raise ParseError(source, line, f"unknown row kind: {kind!r}")
    return groups


def parse_responses(
    text: str,
    dialogues: Mapping[str, DialogueSpec] | Iterable[DialogueSpec],
    source: str = "<responses>",
) -> list[ResponseRecord]:
    """Read survey rows, validating coverage against the dialogue specs.

    Every group (participant, dialogue, step) must answer agreement for each
    visible statement and a relation for each asked pair.  Awareness rows are
    allowed at the final step; statements without a row count as unaware.
    """
    if not isinstance(dialogues, Mapping):
        dialogues = {d.name: d for d in dialogues}
    groups = _response_groups(text, source, dialogues)
    records: list[ResponseRecord] = []
    for (participant, dialogue_id, step), group in sorted(groups.items()):
        dialogue = dialogues[dialogue_id]
        visible = dialogue.visible_at(step)
        missing = [a for a in visible if a not in group["agreement"]]
        if missing:
            raise ParseError(
                source,
                group["line"],
                f"{participant}/{dialogue_id}/step {step}: missing agreement for {', '.join(missing)}",
            )
        asked = dialogue.asked_pairs(step)
        missing_pairs = [p for p in asked if p not in group["relations"]]
        if missing_pairs:
            rendered = ", ".join(f"({x},{y})" for x, y in missing_pairs)
            raise ParseError(
                source,
                group["line"],
                f"{participant}/{dialogue_id}/step {step}: missing relation answer for {rendered}",
            )
        awareness = None
        if step == dialogue.max_step:
            awareness = frozenset(a for a, flag in group["aware"].items() if flag)
        ordered_agreement = {a: group["agreement"][a] for a in visible}
        ordered_relations = {p: group["relations"][p] for p in asked}
        records.append(
            ResponseRecord(
                participant, dialogue_id, step, ordered_agreement, ordered_relations, awareness
            )
        )
    return records


def emit_framework(af: ArgumentFramework) -> str:
    """Fact lines for a plain attack graph; inverse of :func:`parse_framework`."""
    lines = [f"arg({a})." for a in af.arguments]
    lines += [f"att({x},{y})." for x, y in sorted(af.attacks)]
    return "\n".join(lines) + "\n"


def emit_bipolar(baf: BipolarFramework) -> str:
    lines = [f"arg({a})." for a in baf.arguments]
    lines += [f"att({x},{y})." for x, y in sorted(baf.attacks)]
    lines += [f"sup({x},{y})." for x, y in sorted(baf.supports)]
    return "\n".join(lines) + "\n"


def emit_tripolar(t: TripolarGraph) -> str:
    lines = [f"arg({a})." for a in t.arguments]
    lines += [f"att({x},{y})." for x, y in sorted(t.attacks)]
    lines += [f"sup({x},{y})." for x, y in sorted(t.supports)]
    lines += [f"dep({x},{y})." for x, y in sorted(t.dependencies)]
    return "\n".join(lines) + "\n"


def emit_graph(t: TripolarGraph, flow: FlowOrder | None = None) -> str:
    """Tripolar fact lines plus optional ``ord`` facts."""
    text = emit_tripolar(t)
    if flow is not None:
        text += "".join(f"ord({a},{s},{i}).\n" for a, s, i in flow.entries)
    return text


def emit_beliefs(p: BeliefAssignment) -> str:
    return "".join(f"bel({a}, {p[a]}).\n" for a in sorted(p))


def emit_mass(m: MassDistribution) -> str:
    lines = [f"arg({a})." for a in m.arguments]
    order = {a: i for i, a in enumerate(m.arguments)}
    for subset in sorted(m.entries, key=lambda s: (len(s), sorted(order[a] for a in s))):
        members = ",".join(sorted(subset, key=order.__getitem__))
        lines.append(f"mass({{{members}}}, {m.entries[subset]}).")
    return "\n".join(lines) + "\n"


def emit_distribution(d: SubgraphDistribution) -> str:
    """Subgraph blocks in canonical order, each closed by its prob fact."""
    chunks = []
    for sub, mass in d._ordered_entries():
        body = emit_framework(sub) if sub.arguments else ""
        chunks.append(f"{body}prob({mass}).\n")
    return "\n".join(chunks)


def framework_to_data(af: ArgumentFramework) -> dict:
    return {
        "arguments": list(af.arguments),
        "attacks": [list(p) for p in sorted(af.attacks)],
    }


def framework_from_data(data: Mapping, source: str = "<data>") -> ArgumentFramework:
    plain = dict(data)
    _check_keys(plain, ("arguments", "attacks"), source)
    with _wrap_domain(source, 1):
        return ArgumentFramework(
            _string_list(plain, "arguments", source), _pair_list(plain, "attacks", source)
        )


def bipolar_to_data(baf: BipolarFramework) -> dict:
    return {
        "arguments": list(baf.arguments),
        "attacks": [list(p) for p in sorted(baf.attacks)],
        "supports": [list(p) for p in sorted(baf.supports)],
    }


def tripolar_to_data(t: TripolarGraph) -> dict:
    return {
        "arguments": list(t.arguments),
        "attacks": [list(p) for p in sorted(t.attacks)],
        "supports": [list(p) for p in sorted(t.supports)],
        "dependencies": [list(p) for p in sorted(t.dependencies)],
    }


def tripolar_from_data(data: Mapping, source: str = "<data>") -> TripolarGraph:
    plain = dict(data)
    plain.pop("flow", None)
    _check_keys(plain, ("arguments", "attacks", "supports", "dependencies"), source)
    with _wrap_domain(source, 1):
        return TripolarGraph(
            _string_list(plain, "arguments", source),
            _pair_list(plain, "attacks", source),
            _pair_list(plain, "supports", source),
            _pair_list(plain, "dependencies", source),
        )


def labeling_to_data(labeling: Labeling) -> dict:
    return {a: labeling[a].value for a in sorted(labeling)}
