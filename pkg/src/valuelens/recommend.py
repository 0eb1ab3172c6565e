"""Similar / opposite item recommendation over classification label sets.

Similarity is Jaccard overlap of compound labels.  Opposition flips the
value pole of each seed label (virtue <-> vice of the same foundation) and
scores candidates by how much of their label set falls into the opposed
family, surfacing items with contrasting value stances.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .classify import Classification
from .errors import ValuelensError
from .mapping import POLE_BY_LABEL, opposite_value_pole


class Mode(str, Enum):
    SIMILAR = "similar"
    OPPOSITE = "opposite"


@dataclass(frozen=True)
class RankedItem:
    item_id: str
    score: float
    labels: tuple[str, ...]


@dataclass(frozen=True)
class Recommendation:
    seed_id: str
    mode: Mode
    ranked: tuple[RankedItem, ...]


class UnclassifiableSeedError(ValuelensError):
    pass


def value_part(label: str) -> str:
    """The value-pole component of a compound label `<value>-<emotion>`."""
    return label.split("-", 1)[0]


def _require_labels(seed: Classification) -> set[str]:
    labels = set(seed.labels)
    if not labels:
        raise UnclassifiableSeedError(f"unclassifiable seed {seed.item_id!r}")
    return labels


def _ranked(seed_id, mode, scored: list[tuple[str, float, tuple[str, ...]]], limit) -> Recommendation:
    scored.sort(key=lambda row: (-row[1], row[0]))
    if limit is not None:
        scored = scored[:limit]
    return Recommendation(
        seed_id=seed_id,
        mode=mode,
        ranked=tuple(RankedItem(item_id=i, score=s, labels=ls) for i, s, ls in scored),
    )


def similar_items(
    seed: Classification,
    catalog: list[Classification],
    limit: int | None = None,
) -> Recommendation:
    seed_labels = _require_labels(seed)
    scored = []
    for candidate in catalog:
        if candidate.item_id == seed.item_id:
            continue
        labels = set(candidate.labels)
        shared = seed_labels & labels
        if not shared:
            continue
        score = len(shared) / len(seed_labels | labels)
        scored.append((candidate.item_id, score, tuple(sorted(shared))))
    return _ranked(seed.item_id, Mode.SIMILAR, scored, limit)


def opposed_value_labels(seed_labels: set[str]) -> set[str]:
    """Value-pole labels opposed to any pole appearing in the seed's labels."""
    out = set()
    for label in seed_labels:
        pole = POLE_BY_LABEL.get(value_part(label))
        if pole is not None:
            out.add(opposite_value_pole(pole).label)
    return out


def opposite_items(
    seed: Classification,
    catalog: list[Classification],
    limit: int | None = None,
) -> Recommendation:
    seed_labels = _require_labels(seed)
    opposed_values = opposed_value_labels(seed_labels)
    scored = []
    for candidate in catalog:
        if candidate.item_id == seed.item_id:
            continue
        labels = set(candidate.labels)
        hits = {l for l in labels if value_part(l) in opposed_values}
        if not hits:
            continue
        score = len(hits) / len(labels | hits)
        scored.append((candidate.item_id, score, tuple(sorted(hits))))
    return _ranked(seed.item_id, Mode.OPPOSITE, scored, limit)


def recommendation_to_record(recommendation: Recommendation) -> dict:
    return {
        "seed_id": recommendation.seed_id,
        "mode": recommendation.mode.value,
        "ranked": [
            {"item_id": r.item_id, "score": round(r.score, 6), "labels": list(r.labels)}
            for r in recommendation.ranked
        ],
    }
