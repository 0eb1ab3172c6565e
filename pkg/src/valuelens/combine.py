"""Scenario-based combination of a HEAD (value) and MODIFIER (emotion)
prototype into a compound value-emotion concept.

Every typicality inclusion of the two parents can independently be kept or
dropped; a scenario is one such selection, with probability equal to the
product of p for kept inclusions and (1 - p) for dropped ones, so the
probabilities of all 2^n scenarios sum to 1.  Scenarios that are
inconsistent, trivial (everything kept) or starved of one parent's features
are blocked; the surviving scenario of maximal probability defines the
compound's typical features, truncated to `max_features`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .errors import CombinationError
from .kb import (
    Kind,
    MAX_FEATURES_DEFAULT,
    OppositionTable,
    Parent,
    Prototype,
    TypicalityInclusion,
)
from . import mapping as moral_mapping

POOL_HARD_CAP = 20

BLOCK_INCONSISTENT = "INCONSISTENT"
BLOCK_TRIVIAL = "TRIVIAL"
BLOCK_HEAD_STARVED = "HEAD_STARVED"
BLOCK_MODIFIER_STARVED = "MODIFIER_STARVED"


@dataclass(frozen=True)
class CombinationRequest:
    head: Prototype
    modifier: Prototype
    oppositions: OppositionTable = OppositionTable()
    max_features: int = MAX_FEATURES_DEFAULT


@dataclass(frozen=True)
class Scenario:
    kept: frozenset[int]
    probability: float


@dataclass(frozen=True)
class CombinationResult:
    compound: Prototype
    winning_scenario: Scenario
    discarded: dict[str, int] = field(default_factory=dict)


def build_inclusion_pool(head: Prototype, modifier: Prototype) -> list[TypicalityInclusion]:
    """Merge both parents' typical features into one inclusion pool.

    A term present in both parents yields a single BOTH inclusion carrying
    the HEAD's probability (dominance).
    """
    head_map = head.typical_map()
    modifier_map = modifier.typical_map()
    merged: dict[str, tuple[float, Parent]] = {}
    for term, p in head_map.items():
        merged[term] = (p, Parent.HEAD)
    for term, p in modifier_map.items():
        if term in merged:
            merged[term] = (merged[term][0], Parent.BOTH)
        else:
            merged[term] = (p, Parent.MODIFIER)
    subject = f"{head.name}-{modifier.name}"
    ordered = sorted(merged.items(), key=lambda kv: (-kv[1][0], kv[0]))
    return [
        TypicalityInclusion(subject=subject, feature=term, probability=p, parent=parent)
        for term, (p, parent) in ordered
    ]


def scenario_probability(pool: Sequence[TypicalityInclusion], kept: Iterable[int]) -> float:
    kept = set(kept)
    probability = 1.0
    for i, inclusion in enumerate(pool):
        probability *= inclusion.probability if i in kept else (1.0 - inclusion.probability)
    return probability


def enumerate_scenarios(pool: Sequence[TypicalityInclusion]) -> list[Scenario]:
    """All 2^n scenarios, ordered by descending probability then kept set."""
    n = len(pool)
    if n > POOL_HARD_CAP:
        raise CombinationError(f"pool too large: {n} inclusions exceeds cap {POOL_HARD_CAP}")
    scenarios = []
    for mask in range(1 << n):
        kept = frozenset(i for i in range(n) if mask >> i & 1)
        scenarios.append(Scenario(kept=kept, probability=scenario_probability(pool, kept)))
    scenarios.sort(key=lambda s: (-s.probability, tuple(sorted(s.kept))))
    return scenarios


def is_blocked(
    scenario: Scenario,
    pool: Sequence[TypicalityInclusion],
    rigid: frozenset[str] = frozenset(),
    oppositions: OppositionTable = OppositionTable(),
) -> Optional[str]:
    """First applicable blocking reason, or None for an admissible scenario.

    Reasons, in order: INCONSISTENT (kept features contain an opposed pair,
    or a kept feature opposes a rigid property), TRIVIAL (everything kept),
    HEAD_STARVED and MODIFIER_STARVED (no surviving feature from that
    parent).
    """
    kept_terms = [pool[i].feature for i in sorted(scenario.kept)]
    for idx, a in enumerate(kept_terms):
        for b in kept_terms[idx + 1:]:
            if oppositions.opposed(a, b):
                return BLOCK_INCONSISTENT
        for r in rigid:
            if oppositions.opposed(a, r):
                return BLOCK_INCONSISTENT
    if len(scenario.kept) == len(pool):
        return BLOCK_TRIVIAL
    parents = {pool[i].parent for i in scenario.kept}
    if not parents & {Parent.HEAD, Parent.BOTH}:
        return BLOCK_HEAD_STARVED
    if not parents & {Parent.MODIFIER, Parent.BOTH}:
        return BLOCK_MODIFIER_STARVED
    return None


def combine_concepts(request: CombinationRequest) -> CombinationResult:
    head, modifier = request.head, request.modifier
    pool = build_inclusion_pool(head, modifier)
    rigid = frozenset(head.rigid | modifier.rigid)
    scenarios = enumerate_scenarios(pool)

    discarded: dict[str, int] = {}
    survivors: list[Scenario] = []
    for scenario in scenarios:
        reason = is_blocked(scenario, pool, rigid, request.oppositions)
        if reason is None:
            survivors.append(scenario)
        else:
            discarded[reason] = discarded.get(reason, 0) + 1
    if not survivors:
        raise CombinationError("no admissible scenario", discarded=discarded)

    def head_feature_count(s: Scenario) -> int:
        return sum(1 for i in s.kept if pool[i].parent in (Parent.HEAD, Parent.BOTH))

    winner = min(
        survivors,
        key=lambda s: (-s.probability, -head_feature_count(s), tuple(sorted(s.kept))),
    )

    kept_sorted = sorted(winner.kept)  # pool is already in canonical order
    capped = kept_sorted[: request.max_features]
    typical = {pool[i].feature: pool[i].probability for i in capped if pool[i].feature not in rigid}
    compound = Prototype.make(
        name=f"{head.name}-{modifier.name}",
        kind=Kind.COMPOUND,
        typical=typical,
        rigid=rigid,
        parents=(head.name, modifier.name),
    )
    return CombinationResult(compound=compound, winning_scenario=winner, discarded=discarded)


@dataclass(frozen=True)
class CatalogBuildReport:
    results: tuple[CombinationResult, ...]
    failures: tuple[tuple[str, str], ...] = ()  # (compound name, reason)


def build_compound_catalog(
    values: Sequence[Prototype],
    emotions: Sequence[Prototype],
    oppositions: OppositionTable = OppositionTable(),
    max_features: int = MAX_FEATURES_DEFAULT,
) -> CatalogBuildReport:
    """Combine every value pole (as HEAD) with each mapped Plutchik emotion.

    Pairs whose combination admits no scenario are recorded as failures, not
    fatal; results are deduplicated by compound name.
    """
    emotions_by_name = {p.name: p for p in emotions}
    results: dict[str, CombinationResult] = {}
    failures: list[tuple[str, str]] = []
    for value in values:
        pole = moral_mapping.POLE_BY_LABEL.get(value.name)
        if pole is None:
            failures.append((value.name, f"unknown value pole label {value.name!r}"))
            continue
        for label in moral_mapping.plutchik_for_value_pole(pole):
            emotion = emotions_by_name.get(label)
            if emotion is None:
                continue
            name = f"{value.name}-{emotion.name}"
            if name in results:
                continue
            try:
                results[name] = combine_concepts(
                    CombinationRequest(
                        head=value,
                        modifier=emotion,
                        oppositions=oppositions,
                        max_features=max_features,
                    )
                )
            except CombinationError as exc:
                failures.append((name, str(exc)))
    return CatalogBuildReport(results=tuple(results.values()), failures=tuple(failures))
