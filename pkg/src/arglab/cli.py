"""Command-line front end binding the toolkit into reproducible batch runs.

Eight commands: solve, labelings, bipolar, augment, distance, postulates,
constellation, survey.  Each reads the files named by its flags, writes one
report to standard output, and exits 0 on success, 1 on domain or validation
failures (diagnostics name the file and, for parse failures, the line), and
2 on usage errors.  Identical inputs and flags produce byte-identical output;
``--jobs`` partitions work without changing any result.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Iterable, Sequence
from fractions import Fraction

from . import formats
from .bipolar import (
    ALL_KINDS,
    AttackKind,
    augment_bipolar,
    augment_prudent,
    indirect_attacks,
    to_dung,
)
from .constellation import (
    SubgraphMode,
    enumerate_subgraphs,
    estimate_prob_argument,
    prob_argument_in,
    prob_extension,
)
from .core import (
    ArgLabError,
    ArgumentFramework,
    Labeling,
    Semantics,
    enumerate_extensions,
    enumerate_labelings,
    extension_to_labeling,
    indirect_relation,
    is_controversial,
    is_super_controversial,
)
from .epistemic import (
    CATALOG,
    PostulateId,
    beliefs_from_mass,
    check_postulate,
    distinct_value_count,
    epistemic_labeling,
    is_congruent,
)
from .survey import (
    Pooling,
    TableDirection,
    adherence_rates,
    attack_graph,
    belief_change_summary,
    common_graphs,
    core_sample,
    declared_graph,
    record_beliefs,
    relation_crosstab,
    relation_frequencies,
)
from .tripolar import SubgraphKind, TripolarGraph, average_distances, distance, is_subgraph

__all__ = ["main"]


class UsageError(Exception):
    """Bad flag combination; reported on standard error with exit status 2."""


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _structured(data: object) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def _set_text(members: Iterable[str], order: Sequence[str]) -> str:
    rank = {a: i for i, a in enumerate(order)}
    return "{" + ",".join(sorted(members, key=rank.__getitem__)) + "}"


def _pairs_text(pairs: Iterable[tuple[str, str]]) -> str:
    return "{" + ",".join(f"({x},{y})" for x, y in sorted(pairs)) + "}"


def _labeling_text(order: Sequence[str], labeling: Labeling) -> str:
    return " ".join(f"{a}={labeling[a].value}" for a in order)


def _percent_text(value: Fraction) -> str:
    """Render a percentage to two decimals; exact rationals stay exact upstream."""
    hundredths = round(value * 100)
    return f"{hundredths // 100}.{hundredths % 100:02d}"


def _yesno(flag: bool) -> str:
    return "yes" if flag else "no"


def _extensions_report(af: ArgumentFramework, semantics: Semantics, fmt: str) -> str:
    extensions = enumerate_extensions(af, semantics)
    if fmt == "structured":
        rank = {a: i for i, a in enumerate(af.arguments)}
        return _structured(
            {
                "semantics": semantics.value,
                "extensions": [sorted(e, key=rank.__getitem__) for e in extensions],
            }
        )
    return "".join(_set_text(e, af.arguments) + "\n" for e in extensions)


def _cmd_solve(args: argparse.Namespace) -> str:
    af = formats.parse_framework(_read(args.input), args.input)
    if args.indirect is not None:
        a, b = args.indirect
        relation = indirect_relation(af, a, b)
        word = {
            (True, True): "both",
            (True, False): "attacks",
            (False, True): "defends",
            (False, False): "none",
        }[(relation.attacks, relation.defends)]
        if args.format == "structured":
            return _structured({"attacks": relation.attacks, "defends": relation.defends})
        return word + "\n"
    if args.controversial is not None:
        flag = is_controversial(af, *args.controversial)
        if args.format == "structured":
            return _structured({"controversial": flag})
        return _yesno(flag) + "\n"
    if args.super_controversial is not None:
        flag = is_super_controversial(af, *args.super_controversial)
        if args.format == "structured":
            return _structured({"super_controversial": flag})
        return _yesno(flag) + "\n"
    if args.sem is None:
        raise UsageError("solve requires --sem unless a relation query is given")
    return _extensions_report(af, Semantics(args.sem), args.format)


def _cmd_labelings(args: argparse.Namespace) -> str:
    af = formats.parse_framework(_read(args.input), args.input)
    if args.extension is not None:
        labeling = extension_to_labeling(af, args.extension)
        if args.format == "structured":
            return _structured({"labeling": formats.labeling_to_data(labeling)})
        return _labeling_text(af.arguments, labeling) + "\n"
    if args.sem is None:
        raise UsageError("labelings requires --sem unless --extension is given")
    labelings = enumerate_labelings(af, Semantics(args.sem))
    if args.format == "structured":
        return _structured(
            {
                "semantics": args.sem,
                "labelings": [formats.labeling_to_data(lab) for lab in labelings],
            }
        )
    return "".join(_labeling_text(af.arguments, lab) + "\n" for lab in labelings)


_KIND_ORDER = {kind: i for i, kind in enumerate(AttackKind)}


def _cmd_bipolar(args: argparse.Namespace) -> str:
    baf = formats.parse_bipolar(_read(args.input), args.input)
    kinds = tuple(AttackKind(k) for k in args.kinds) if args.kinds else ALL_KINDS
    if args.reduce and args.sem is not None:
        raise UsageError("--reduce and --sem are mutually exclusive")
    if args.sem is not None:
        return _extensions_report(to_dung(baf, kinds), Semantics(args.sem), args.format)
    if args.reduce:
        reduced = to_dung(baf, kinds)
        if args.format == "structured":
            return _structured(formats.framework_to_data(reduced))
        return formats.emit_framework(reduced)
    derived = sorted(indirect_attacks(baf, kinds), key=lambda kp: (_KIND_ORDER[kp[0]], kp[1]))
    if args.format == "structured":
        return _structured(
            {
                "attacks": [
                    {"kind": kind.value, "source": x, "target": y} for kind, (x, y) in derived
                ]
            }
        )
    return "".join(f"{kind.value}({x},{y})\n" for kind, (x, y) in derived)


def _cmd_augment(args: argparse.Namespace) -> str:
    graph, flow = formats.parse_graph_with_flow(_read(args.input), args.input)
    if flow is None:
        raise UsageError("augment requires ord facts (or a flow field) in the input")
    if args.mode == "prudent":
        if graph.supports or graph.dependencies:
            raise UsageError("prudent augmentation takes a plain attack graph")
        result = augment_prudent(ArgumentFramework(graph.arguments, graph.attacks), flow)
    else:
        kinds = tuple(AttackKind(k) for k in args.kinds) if args.kinds else ALL_KINDS
        passes = args.passes if args.passes is not None else len(graph.arguments) ** 2
        result = augment_bipolar(graph, kinds, flow, passes)
    if args.format == "structured":
        return _structured(formats.tripolar_to_data(result))
    return formats.emit_tripolar(result)


def _cmd_distance(args: argparse.Namespace) -> str:
    graphs = [formats.parse_tripolar(_read(path), path) for path in args.inputs]
    if args.average and args.subgraph is not None:
        raise UsageError("--average and --subgraph are mutually exclusive")
    if args.subgraph is not None:
        if len(graphs) != 2:
            raise UsageError("--subgraph compares exactly two graphs")
        flag = is_subgraph(graphs[0], graphs[1], SubgraphKind(args.subgraph))
        if args.format == "structured":
            return _structured({"subgraph": flag, "kind": args.subgraph})
        return _yesno(flag) + "\n"
    if args.average:
        averages = average_distances(graphs)
        if args.format == "structured":
            return _structured({"averages": [str(v) for v in averages]})
        return "".join(str(v) + "\n" for v in averages)
    if len(graphs) != 2:
        raise UsageError("distance compares exactly two graphs (or use --average)")
    value = distance(graphs[0], graphs[1])
    if args.format == "structured":
        return _structured({"distance": value})
    return str(value) + "\n"


def _cmd_postulates(args: argparse.Namespace) -> str:
    af = formats.parse_framework(_read(args.graph), args.graph)
    if args.beliefs is not None:
        beliefs = formats.parse_beliefs(_read(args.beliefs), args.beliefs)
    else:
        beliefs = beliefs_from_mass(formats.parse_mass(_read(args.mass), args.mass))
    wanted = tuple(PostulateId(i) for i in args.ids) if args.ids else CATALOG
    results = {pid: check_postulate(af, beliefs, pid) for pid in wanted}
    data: dict = {"postulates": {pid.value: flag for pid, flag in results.items()}}
    lines = [f"{pid.value}: {_yesno(flag)}" for pid, flag in results.items()]
    if args.val is not None:
        flag = check_postulate(af, beliefs, PostulateId.VAL, n=args.val)
        data["val"] = {"n": args.val, "holds": flag}
        lines.append(f"VAL({args.val}): {_yesno(flag)}")
    if args.labeling or args.congruence:
        labeling = epistemic_labeling(beliefs)
        if args.labeling:
            data["labeling"] = formats.labeling_to_data(labeling)
            lines.append("labeling: " + _labeling_text(af.arguments, labeling))
        if args.congruence:
            congruent = is_congruent(labeling, beliefs)
            data["congruent"] = congruent
            lines.append(f"congruent: {_yesno(congruent)}")
    if args.values:
        count = distinct_value_count([beliefs])
        data["distinct_values"] = count
        lines.append(f"distinct-values: {count}")
    if args.format == "structured":
        return _structured(data)
    return "".join(line + "\n" for line in lines)


def _cmd_constellation(args: argparse.Namespace) -> str:
    mode = SubgraphMode(args.mode)
    if args.enumerate_subgraphs:
        base = formats.parse_framework(_read(args.input), args.input)
        subgraphs = enumerate_subgraphs(base, mode)
        if args.format == "structured":
            return _structured(
                {"subgraphs": [formats.framework_to_data(g) for g in subgraphs]}
            )
        return "".join(
            _set_text(g.arguments, base.arguments) + " " + _pairs_text(g.attacks) + "\n"
            for g in subgraphs
        )
    dist = formats.parse_distribution(_read(args.input), args.input, mode)
    semantics = Semantics(args.sem)
    if args.estimate and args.arg is None:
        raise UsageError("--estimate requires --arg")
    if args.extension is not None:
        value = prob_extension(dist, args.extension, semantics)
    elif args.estimate:
        value = estimate_prob_argument(
            dist, args.arg, semantics, args.samples, args.seed, args.jobs
        )
    else:
        value = prob_argument_in(dist, args.arg, semantics, per_labeling=args.per_labeling)
    if args.format == "structured":
        return _structured({"semantics": semantics.value, "probability": str(value)})
    return str(value) + "\n"


def _graph_sort_key(graph: TripolarGraph):
    return (
        tuple(sorted(graph.attacks)),
        tuple(sorted(graph.supports)),
        tuple(sorted(graph.dependencies)),
    )


def _adherence_rows(records, participants, ids, jobs):
    by_participant = {p: [r for r in records if r.participant == p] for p in participants}

    def rates_for(participant: str):
        recs = sorted(by_participant[participant], key=lambda r: r.step)
        beliefs = [record_beliefs(r) for r in recs]
        graphs = [attack_graph(declared_graph(r)) for r in recs]
        return adherence_rates(beliefs, graphs, ids)

    if jobs > 1 and len(participants) > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=jobs) as pool:
            computed = list(pool.map(rates_for, participants))
        return dict(zip(participants, computed))
    return {p: rates_for(p) for p in participants}


def _cmd_survey(args: argparse.Namespace) -> str:
    dialogues = {}
    for path in args.dialogues:
        spec = formats.parse_dialogue(_read(path), path)
        if spec.name in dialogues:
            raise UsageError(f"duplicate dialogue name: {spec.name}")
        dialogues[spec.name] = spec
    records = formats.parse_responses(_read(args.responses), dialogues, args.responses)
    if args.dialogue is not None:
        if args.dialogue not in dialogues:
            raise UsageError(f"unknown dialogue: {args.dialogue}")
        records = [r for r in records if r.dialogue == args.dialogue]

    if args.report == "graphs":
        rows = [
            (r.participant, r.dialogue, r.step, declared_graph(r)) for r in records
        ]
        if args.format == "structured":
            return _structured(
                {
                    "records": [
                        {
                            "participant": p,
                            "dialogue": d,
                            "step": s,
                            "graph": formats.tripolar_to_data(g),
                        }
                        for p, d, s, g in rows
                    ]
                }
            )
        blocks = [
            f"% {p} {d} {s}\n" + formats.emit_tripolar(g) for p, d, s, g in rows
        ]
        return "\n".join(blocks)

    if args.report == "common":
        if args.step is None:
            raise UsageError("common report requires --step")
        graphs = sorted(common_graphs(records, args.step), key=_graph_sort_key)
        if args.format == "structured":
            return _structured(
                {"step": args.step, "graphs": [formats.tripolar_to_data(g) for g in graphs]}
            )
        blocks = [
            f"% graph {i}\n" + formats.emit_tripolar(g) for i, g in enumerate(graphs, start=1)
        ]
        return "\n".join(blocks)

    if args.report == "adherence":
        ids = tuple(PostulateId(i) for i in args.ids) if args.ids else CATALOG
        participants = sorted({r.participant for r in records})
        if args.participant is not None:
            if args.participant not in participants:
                raise UsageError(f"unknown participant: {args.participant}")
            participants = [args.participant]
        rows = _adherence_rows(records, participants, ids, args.jobs)
        if args.format == "structured":
            return _structured(
                {
                    "participants": {
                        p: {pid.value: str(rate) for pid, rate in rows[p].items()}
                        for p in participants
                    }
                }
            )
        return "".join(
            f"{p},{pid.value},{rate}\n" for p in participants for pid, rate in rows[p].items()
        )

    if args.report == "crosstab":
        table = relation_crosstab(
            records,
            TableDirection(args.direction),
            Pooling(args.agreement_pooling),
            Pooling(args.relation_pooling),
        )
        if args.format == "structured":
            return _structured(
                {
                    "direction": table.direction.value,
                    "rows": list(table.row_labels),
                    "cols": list(table.col_labels),
                    "cells": [
                        {
                            "row": row,
                            "col": col,
                            "count": table.counts[(row, col)],
                            "percent": _percent_text(table.percentages[(row, col)]),
                        }
                        for row in table.row_labels
                        for col in table.col_labels
                    ],
                }
            )
        return "".join(
            f"{row},{col},{table.counts[(row, col)]},"
            f"{_percent_text(table.percentages[(row, col)])}\n"
            for row in table.row_labels
            for col in table.col_labels
        )

    if args.report == "change":
        summary = belief_change_summary(records)
        if args.format == "structured":
            return _structured(
                {"aware": str(summary.aware_avg), "unaware": str(summary.unaware_avg)}
            )
        return f"aware: {summary.aware_avg}\nunaware: {summary.unaware_avg}\n"

    if args.report == "frequencies":
        freqs = relation_frequencies(records)
        if args.format == "structured":
            return _structured(
                {
                    "pairs": [
                        {
                            "source": x,
                            "target": y,
                            "percent": {cls: _percent_text(v) for cls, v in cells.items()},
                        }
                        for (x, y), cells in freqs.items()
                    ]
                }
            )
        return "".join(
            f"{x},{y},{cls},{_percent_text(value)}\n"
            for (x, y), cells in freqs.items()
            for cls, value in cells.items()
        )

    if args.dialogue is not None:
        name = args.dialogue
    elif len(dialogues) == 1:
        name = next(iter(dialogues))
    else:
        raise UsageError("core report over several dialogues requires --dialogue")
    spec = dialogues[name]
    kept = core_sample(
        [r for r in records if r.dialogue == name],
        spec,
        SubgraphKind(args.kind),
        args.threshold,
    )
    if args.format == "structured":
        return _structured({"participants": list(kept)})
    return "".join(p + "\n" for p in kept)


_HANDLERS = {
    "solve": _cmd_solve,
    "labelings": _cmd_labelings,
    "bipolar": _cmd_bipolar,
    "augment": _cmd_augment,
    "distance": _cmd_distance,
    "postulates": _cmd_postulates,
    "constellation": _cmd_constellation,
    "survey": _cmd_survey,
}

_SEMANTICS = [s.value for s in Semantics]
_ATTACK_KINDS = [k.value for k in AttackKind]
_SUBGRAPH_KINDS = [k.value for k in SubgraphKind]
_POSTULATES = [p.value for p in PostulateId if p is not PostulateId.VAL]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arglab",
        description="Argument-graph semantics, probabilities, and survey analysis.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=["text", "structured"], default="text", help="output format"
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    solve = sub.add_parser("solve", parents=[common], help="enumerate extensions")
    solve.add_argument("--input", required=True, help="attack graph file")
    solve.add_argument("--sem", choices=_SEMANTICS, help="semantics to solve for")
    solve.add_argument("--indirect", nargs=2, metavar=("A", "B"), help="walk relation A to B")
    solve.add_argument(
        "--controversial", nargs=2, metavar=("A", "B"), help="is A controversial w.r.t. B"
    )
    solve.add_argument(
        "--super-controversial",
        nargs=3,
        metavar=("A", "B", "C"),
        dest="super_controversial",
        help="are A and B super-controversial w.r.t. C",
    )

    labelings = sub.add_parser("labelings", parents=[common], help="enumerate labelings")
    labelings.add_argument("--input", required=True, help="attack graph file")
    labelings.add_argument("--sem", choices=_SEMANTICS, help="labeling semantics")
    labelings.add_argument(
        "--extension", nargs="*", metavar="ARG", help="label the graph from this extension"
    )

    bipolar = sub.add_parser("bipolar", parents=[common], help="derived attacks and reduction")
    bipolar.add_argument("--input", required=True, help="bipolar graph file")
    bipolar.add_argument(
        "--kinds", nargs="+", choices=_ATTACK_KINDS, help="attack derivations (default: all)"
    )
    bipolar.add_argument("--reduce", action="store_true", help="print the reduced attack graph")
    bipolar.add_argument("--sem", choices=_SEMANTICS, help="solve the reduction instead")

    augment = sub.add_parser("augment", parents=[common], help="dialogue-graph augmentation")
    augment.add_argument("--input", required=True, help="graph file with ord facts")
    augment.add_argument("--mode", choices=["prudent", "bipolar"], required=True)
    augment.add_argument(
        "--kinds", nargs="+", choices=_ATTACK_KINDS, help="derivations for bipolar mode"
    )
    augment.add_argument("--passes", type=int, help="defence passes (default: to fixpoint)")

    dist = sub.add_parser("distance", parents=[common], help="graph distance and containment")
    dist.add_argument("--inputs", nargs="+", required=True, help="tripolar graph files")
    dist.add_argument("--average", action="store_true", help="average distance per graph")
    dist.add_argument(
        "--subgraph", choices=_SUBGRAPH_KINDS, help="check first graph contained in second"
    )

    post = sub.add_parser("postulates", parents=[common], help="belief postulate checks")
    post.add_argument("--graph", required=True, help="attack graph file")
    source = post.add_mutually_exclusive_group(required=True)
    source.add_argument("--beliefs", help="bel fact file")
    source.add_argument("--mass", help="mass fact file; marginal beliefs are derived")
    post.add_argument("--ids", nargs="+", choices=_POSTULATES, help="postulates to check")
    post.add_argument("--val", type=int, metavar="N", help="also check the n-valued postulate")
    post.add_argument("--labeling", action="store_true", help="print the epistemic labeling")
    post.add_argument("--congruence", action="store_true", help="check labeling congruence")
    post.add_argument("--values", action="store_true", help="count distinct belief values")

    con = sub.add_parser("constellation", parents=[common], help="subgraph distributions")
    con.add_argument("--input", required=True, help="distribution (or graph for --enumerate)")
    con.add_argument("--mode", choices=[m.value for m in SubgraphMode], default="general")
    con.add_argument("--sem", choices=_SEMANTICS, default="gr", help="semantics")
    action = con.add_mutually_exclusive_group(required=True)
    action.add_argument("--arg", help="probability the argument is accepted")
    action.add_argument(
        "--extension", nargs="*", metavar="ARG", help="probability the set is an extension"
    )
    action.add_argument(
        "--enumerate",
        action="store_true",
        dest="enumerate_subgraphs",
        help="list the subgraphs of a base graph",
    )
    con.add_argument("--per-labeling", action="store_true", dest="per_labeling")
    con.add_argument("--estimate", action="store_true", help="Monte-Carlo estimate for --arg")
    con.add_argument("--samples", type=int, default=10000)
    con.add_argument("--seed", type=int, default=0)
    con.add_argument("--jobs", type=int, default=1)

    survey = sub.add_parser("survey", parents=[common], help="survey-response analysis")
    survey.add_argument("--responses", required=True, help="response rows file")
    survey.add_argument("--dialogues", nargs="+", required=True, help="dialogue spec files")
    survey.add_argument(
        "--report",
        required=True,
        choices=["graphs", "common", "adherence", "crosstab", "change", "frequencies", "core"],
    )
    survey.add_argument("--dialogue", help="restrict to one dialogue by name")
    survey.add_argument("--step", type=int, help="dialogue step for the common report")
    survey.add_argument("--participant", help="restrict adherence to one participant")
    survey.add_argument("--ids", nargs="+", choices=_POSTULATES, help="adherence postulates")
    survey.add_argument(
        "--direction", choices=[d.value for d in TableDirection], default="by-relation"
    )
    survey.add_argument(
        "--agreement-pooling",
        choices=[p.value for p in Pooling],
        default="none",
        dest="agreement_pooling",
    )
    survey.add_argument(
        "--relation-pooling",
        choices=[p.value for p in Pooling],
        default="none",
        dest="relation_pooling",
    )
    survey.add_argument("--kind", choices=_SUBGRAPH_KINDS, default="confusion")
    survey.add_argument("--threshold", type=int, default=4)
    survey.add_argument("--jobs", type=int, default=1)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        report = _HANDLERS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except formats.ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ArgLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        name = exc.filename if exc.filename else "input"
        print(f"error: {name}: {exc.strerror}", file=sys.stderr)
        return 1
    sys.stdout.write(report)
    return 0


if __name__ == "__main__":
    sys.exit(main())
