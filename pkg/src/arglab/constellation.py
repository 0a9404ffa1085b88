"""Subgraph spaces, subgraph distributions, and constellation probabilities.

A subgraph distribution spreads probability mass over subgraphs of a base
graph; semantics-level probabilities are mass-weighted sums over the
subgraphs whose extensions or labelings match.  Exact values are rationals;
the Monte-Carlo estimator is deterministic for a given seed and independent
of how the sample budget is partitioned across workers.
"""

from __future__ import annotations

import enum
import hashlib
from collections.abc import Iterable, Mapping
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from .core import (
    ArgumentFramework,
    DomainError,
    Semantics,
    SizeError,
    enumerate_extensions,
    enumerate_labelings,
    is_extension,
)

__all__ = [
    "SubgraphMode",
    "SubgraphDistribution",
    "DEFAULT_SUBGRAPH_CAP",
    "is_subgraph",
    "is_full_subgraph",
    "is_spanning_subgraph",
    "enumerate_subgraphs",
    "prob_extension",
    "prob_argument_in",
    "estimate_prob_argument",
]

DEFAULT_SUBGRAPH_CAP = 12

_U64 = 1 << 64


class SubgraphMode(str, enum.Enum):
    GENERAL = "general"
    FULL = "full"
    SPANNING = "spanning"


def is_subgraph(sub: ArgumentFramework, base: ArgumentFramework) -> bool:
    """True iff ``sub``'s arguments and attacks are both contained in ``base``'s."""
    return set(sub.arguments) <= set(base.arguments) and sub.attacks <= base.attacks


def _restriction(base: ArgumentFramework, args: frozenset[str]) -> frozenset[tuple[str, str]]:
    return frozenset((x, y) for x, y in base.attacks if x in args and y in args)


def is_full_subgraph(sub: ArgumentFramework, base: ArgumentFramework) -> bool:
    """Subgraph containing every base attack between its own arguments."""
    return is_subgraph(sub, base) and sub.attacks == _restriction(base, frozenset(sub.arguments))


def is_spanning_subgraph(sub: ArgumentFramework, base: ArgumentFramework) -> bool:
    """Subgraph on the complete argument set of ``base``."""
    return is_subgraph(sub, base) and set(sub.arguments) == set(base.arguments)


def _canonical_subgraph(
    base: ArgumentFramework, args: Iterable[str], atts: Iterable[tuple[str, str]]
) -> ArgumentFramework:
    members = set(args)
    ordered = tuple(a for a in base.arguments if a in members)
    return ArgumentFramework(ordered, atts)


class SubgraphDistribution:
    """Sparse probability masses over subgraphs of a base graph, summing to one."""

    __slots__ = ("base", "entries", "mode")

    def __init__(
        self,
        base: ArgumentFramework,
        entries: Mapping[ArgumentFramework, object] | Iterable[tuple[ArgumentFramework, object]],
        mode: SubgraphMode = SubgraphMode.GENERAL,
    ):
        mode = SubgraphMode(mode)
        pairs = entries.items() if isinstance(entries, Mapping) else entries
        table: dict[ArgumentFramework, Fraction] = {}
        for sub, mass in pairs:
            if not is_subgraph(sub, base):
                raise DomainError(f"entry {sub!r} is not a subgraph of the base graph")
            if isinstance(mass, float):
                raise DomainError(f"subgraph mass must be an exact rational, not a float: {mass!r}")
            p = Fraction(mass)  # type: ignore[arg-type]
            if not 0 <= p <= 1:
                raise DomainError(f"subgraph mass is outside [0, 1]: {p}")
            key = _canonical_subgraph(base, sub.arguments, sub.attacks)
            if key in table:
                raise DomainError(f"duplicate mass entry for subgraph {key!r}")
            if p == 0:
                continue
            if mode is SubgraphMode.FULL and not is_full_subgraph(key, base):
                raise DomainError(f"positive mass on a non-full subgraph: {key!r}")
            if mode is SubgraphMode.SPANNING and not is_spanning_subgraph(key, base):
                raise DomainError(f"positive mass on a non-spanning subgraph: {key!r}")
            table[key] = p
        total = sum(table.values(), Fraction(0))
        if total != 1:
            raise DomainError(f"subgraph masses sum to {total}, expected 1")
        self.base = base
        self.entries = table
        self.mode = mode

    def _ordered_entries(self) -> list[tuple[ArgumentFramework, Fraction]]:
        index = self.base._index
        atts_index = {p: i for i, p in enumerate(sorted(self.base.attacks))}

        def key(sub: ArgumentFramework) -> tuple[tuple[int, ...], tuple[int, ...]]:
            return (
                tuple(index[a] for a in sub.arguments),
                tuple(sorted(atts_index[p] for p in sub.attacks)),
            )

        return sorted(self.entries.items(), key=lambda e: key(e[0]))

    def __repr__(self) -> str:
        return f"SubgraphDistribution(base={self.base!r}, entries={len(self.entries)}, mode={self.mode.value})"


def enumerate_subgraphs(
    af: ArgumentFramework,
    mode: SubgraphMode = SubgraphMode.GENERAL,
    cap: int = DEFAULT_SUBGRAPH_CAP,
) -> list[ArgumentFramework]:
    """All subgraphs of ``af`` in the given mode, in a canonical order.

    GENERAL and FULL enumerate argument subsets, so they require at most
    ``cap`` arguments; SPANNING and GENERAL enumerate attack subsets, so they
    require at most ``cap`` attacks.
    """
    mode = SubgraphMode(mode)
    n = len(af.arguments)
    m = len(af.attacks)
    if mode in (SubgraphMode.GENERAL, SubgraphMode.FULL) and n > cap:
        raise SizeError(f"{n} arguments exceed the subgraph enumeration cap of {cap}")
    if mode in (SubgraphMode.GENERAL, SubgraphMode.SPANNING) and m > cap:
        raise SizeError(f"{m} attacks exceed the subgraph enumeration cap of {cap}")
    all_atts = sorted(af.attacks)
    result: list[ArgumentFramework] = []
    if mode is SubgraphMode.SPANNING:
        for att_bits in range(1 << m):
            chosen = [all_atts[i] for i in range(m) if att_bits >> i & 1]
            result.append(ArgumentFramework(af.arguments, chosen))
        return result
    for arg_bits in range(1 << n):
        args = tuple(af.arguments[i] for i in range(n) if arg_bits >> i & 1)
        members = set(args)
        restricted = [p for p in all_atts if p[0] in members and p[1] in members]
        if mode is SubgraphMode.FULL:
            result.append(ArgumentFramework(args, restricted))
            continue
        k = len(restricted)
        for att_bits in range(1 << k):
            chosen = [restricted[i] for i in range(k) if att_bits >> i & 1]
            result.append(ArgumentFramework(args, chosen))
    return result


def prob_extension(
    d: SubgraphDistribution, e: Iterable[str], semantics: Semantics
) -> Fraction:
    """Total mass of the subgraphs in which ``e`` is an extension."""
    semantics = Semantics(semantics)
    members = frozenset(e)
    total = Fraction(0)
    for sub, mass in d.entries.items():
        if members <= set(sub.arguments) and is_extension(sub, members, semantics):
            total += mass
    return total


def _credulously_in(sub: ArgumentFramework, a: str, semantics: Semantics) -> bool:
    if a not in sub._index:
        return False
    return any(a in ext for ext in enumerate_extensions(sub, semantics))


def prob_argument_in(
    d: SubgraphDistribution,
    a: str,
    semantics: Semantics,
    per_labeling: bool = False,
) -> Fraction:
    """Mass of the subgraphs with some labeling of the semantics putting ``a`` IN.

    Each subgraph counts once, so the result is a probability.  With
    ``per_labeling`` the raw sum over (subgraph, labeling) pairs is returned
    instead, which can exceed 1 under multi-labeling semantics.
    """
    semantics = Semantics(semantics)
    d.base._contains(a)
    total = Fraction(0)
    for sub, mass in d.entries.items():
        if per_labeling:
            if a in sub._index:
                total += mass * sum(1 for lab in enumerate_labelings(sub, semantics) if a in lab.in_set)
        elif _credulously_in(sub, a, semantics):
            total += mass
    return total


def _sample_value(seed_bytes: bytes, index: int) -> Fraction:
    digest = hashlib.blake2b(
        index.to_bytes(8, "big"), key=seed_bytes, digest_size=8
    ).digest()
    return Fraction(int.from_bytes(digest, "big"), _U64)


def _count_hits(
    seed_bytes: bytes, start: int, stop: int, cumulative: list[Fraction], accepts: list[bool]
) -> int:
    hits = 0
    for k in range(start, stop):
        u = _sample_value(seed_bytes, k)
        lo, hi = 0, len(cumulative) - 1
        while lo < hi:
            mid = (lo + hi) // 2
            if u < cumulative[mid]:
                hi = mid
            else:
                lo = mid + 1
        if accepts[lo]:
            hits += 1
    return hits


def estimate_prob_argument(
    d: SubgraphDistribution,
    a: str,
    semantics: Semantics,
    samples: int,
    seed: int,
    jobs: int = 1,
) -> Fraction:
    """Monte-Carlo estimate of :func:`prob_argument_in`.

    Draws are inverse-CDF over the canonical entry order, with the k-th draw
    keyed by (seed, k), so a given seed yields the same estimate no matter how
    the budget is split across ``jobs`` workers.
    """
    semantics = Semantics(semantics)
    d.base._contains(a)
    if samples < 1:
        raise DomainError(f"sample count must be positive: {samples}")
    if jobs < 1:
        raise DomainError(f"job count must be positive: {jobs}")
    ordered = d._ordered_entries()
    cumulative: list[Fraction] = []
    running = Fraction(0)
    for _, mass in ordered:
        running += mass
        cumulative.append(running)
    accepts = [_credulously_in(sub, a, semantics) for sub, _ in ordered]
    seed_bytes = (seed % _U64).to_bytes(8, "big")
    bounds = [samples * j // jobs for j in range(jobs + 1)]
    chunks = [(bounds[j], bounds[j + 1]) for j in range(jobs) if bounds[j] < bounds[j + 1]]
    if len(chunks) <= 1:
        hits = _count_hits(seed_bytes, 0, samples, cumulative, accepts)
    else:
        with ThreadPoolExecutor(max_workers=len(chunks)) as pool:
            futures = [
                pool.submit(_count_hits, seed_bytes, start, stop, cumulative, accepts)
                for start, stop in chunks
            ]
            hits = sum(f.result() for f in futures)
    return Fraction(hits, samples)
