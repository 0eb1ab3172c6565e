"""Core knowledge-base types: prototypes, typicality inclusions, oppositions.

A prototype is a flat feature bag: a set of rigid terms that every member
carries, plus a map of typical terms to probabilities in (0.5, 1].  All
reasoning modules share these types; everything here is immutable after
construction.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Mapping, Optional, Sequence


class Kind(str, Enum):
    EMOTION = "emotion"
    VALUE = "value"
    COMPOUND = "compound"


class Parent(str, Enum):
    HEAD = "HEAD"
    MODIFIER = "MODIFIER"
    BOTH = "BOTH"


MAX_FEATURES_DEFAULT = 7

# Minimum admissible probability; 0.5 itself carries no typicality preference.
MIN_PROBABILITY = 0.5


def canonical_typical_order(typical: Mapping[str, float]) -> list[tuple[str, float]]:
    """Descending probability, ties broken lexicographically by term."""
    return sorted(typical.items(), key=lambda kv: (-kv[1], kv[0]))


def _check_probability(p: float, where: str) -> None:
    if not (MIN_PROBABILITY < p <= 1.0):
        raise ValueError(f"{where}: probability must lie in (0.5, 1], got {p}")


@dataclass(frozen=True)
class TypicalityInclusion:
    """One `subject typically has feature` statement with probability p."""

    subject: str
    feature: str
    probability: float
    parent: Parent = Parent.HEAD

    def __post_init__(self):
        _check_probability(self.probability, f"inclusion {self.subject}->{self.feature}")


@dataclass(frozen=True)
class Prototype:
    """A named concept with rigid and typical features.

    ``typical`` is stored in canonical order (descending probability, then
    term) so every downstream serialization is deterministic.
    """

    name: str
    kind: Kind
    rigid: frozenset[str] = frozenset()
    typical: tuple[tuple[str, float], ...] = ()
    parents: Optional[tuple[str, str]] = None

    def __post_init__(self):
        ordered = tuple(canonical_typical_order(dict(self.typical)))
        object.__setattr__(self, "typical", ordered)
        object.__setattr__(self, "rigid", frozenset(self.rigid))
        for term, p in self.typical:
            _check_probability(p, f"prototype {self.name}, term {term}")
        overlap = self.rigid & self.typical_terms()
        if overlap:
            raise ValueError(f"prototype {self.name}: rigid/typical overlap {sorted(overlap)}")
        if (self.kind is Kind.COMPOUND) != (self.parents is not None):
            raise ValueError(f"prototype {self.name}: compound kind iff parents present")

    def typical_terms(self) -> frozenset[str]:
        return frozenset(t for t, _ in self.typical)

    def typical_map(self) -> dict[str, float]:
        return dict(self.typical)

    @staticmethod
    def make(
        name: str,
        kind: Kind,
        typical: Mapping[str, float],
        rigid: Iterable[str] = (),
        parents: Optional[tuple[str, str]] = None,
    ) -> "Prototype":
        return Prototype(
            name=name,
            kind=kind,
            rigid=frozenset(rigid),
            typical=tuple(typical.items()),
            parents=parents,
        )


@dataclass(frozen=True)
class OppositionTable:
    """Symmetric set of term pairs declared mutually inconsistent."""

    pairs: frozenset[frozenset[str]] = frozenset()

    @staticmethod
    def from_pairs(pairs: Iterable[tuple[str, str]]) -> "OppositionTable":
        normalized = set()
        for a, b in pairs:
            if a == b:
                raise ValueError(f"self-opposition ({a}, {a}) is not allowed")
            normalized.add(frozenset((a, b)))
        return OppositionTable(pairs=frozenset(normalized))

    def opposed(self, a: str, b: str) -> bool:
        return frozenset((a, b)) in self.pairs

    def opposites_of(self, term: str) -> set[str]:
        out = set()
        for pair in self.pairs:
            if term in pair:
                out |= pair - {term}
        return out


@dataclass(frozen=True)
class KnowledgeBase:
    prototypes: Mapping[str, Prototype] = field(default_factory=dict)
    oppositions: OppositionTable = OppositionTable()

    @staticmethod
    def from_prototypes(
        prototypes: Sequence[Prototype],
        oppositions: OppositionTable = OppositionTable(),
    ) -> "KnowledgeBase":
        by_name: dict[str, Prototype] = {}
        for proto in prototypes:
            if proto.name in by_name:
                raise ValueError(f"duplicate prototype name {proto.name!r}")
            by_name[proto.name] = proto
        return KnowledgeBase(prototypes=by_name, oppositions=oppositions)


@dataclass(frozen=True)
class Violation:
    subject: str
    message: str


def validate_knowledge_base(kb: KnowledgeBase) -> list[Violation]:
    """Return one violation per broken invariant; an empty list means valid.

    Side-effect free: the same KB always yields the identical report.
    """
    report: list[Violation] = []
    for name, proto in kb.prototypes.items():
        if name != proto.name:
            report.append(Violation(name, f"key {name!r} does not match prototype name {proto.name!r}"))
        for term, p in proto.typical:
            if not (MIN_PROBABILITY < p <= 1.0):
                report.append(Violation(name, f"term {term!r}: probability must exceed 0.5 and be at most 1, got {p}"))
        overlap = proto.rigid & proto.typical_terms()
        if overlap:
            report.append(Violation(name, f"rigid/typical overlap: {sorted(overlap)}"))
        if proto.kind is Kind.COMPOUND:
            if proto.parents is None:
                report.append(Violation(name, "compound without parents"))
            else:
                for parent in proto.parents:
                    if parent not in kb.prototypes:
                        report.append(Violation(name, f"dangling parent {parent!r}"))
            if len(proto.typical) > MAX_FEATURES_DEFAULT:
                report.append(Violation(name, f"compound exceeds {MAX_FEATURES_DEFAULT} typical features"))
        elif proto.parents is not None:
            report.append(Violation(name, "non-compound with parents"))
    for pair in kb.oppositions.pairs:
        if len(pair) != 2:
            report.append(Violation("oppositions", f"degenerate pair {sorted(pair)}"))
    return report


# ---------------------------------------------------------------------------
# Prototype bundle serialization (the unit exchanged between modules)
# ---------------------------------------------------------------------------

def prototype_to_record(proto: Prototype, extra: Mapping | None = None) -> dict:
    record: dict = {
        "kind": proto.kind.value,
        "rigid": sorted(proto.rigid),
        "typical": [{"term": t, "p": p} for t, p in proto.typical],
    }
    if proto.parents is not None:
        record["parents"] = list(proto.parents)
    if extra:
        record.update(extra)
    return record


def prototype_from_record(name: str, record: Mapping) -> Prototype:
    parents = record.get("parents")
    return Prototype.make(
        name=name,
        kind=Kind(record["kind"]),
        rigid=record.get("rigid", ()),
        typical={row["term"]: row["p"] for row in record.get("typical", ())},
        parents=tuple(parents) if parents else None,
    )


def dumps_canonical(obj) -> str:
    """Deterministic JSON text used for every persisted artifact."""
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def content_hash(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()
