"""Classification of feature profiles against compound prototypes.

An item belongs to a compound when its profile contains all rigid
properties and at least `threshold` (default 30%) of the typical ones.
Each accepted label carries the matched trigger terms, attributed to the
emotion parent and/or the value parent, so every classification is
explainable down to the word level.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .kb import Parent, Prototype
from .textpipe import FeatureProfile

DEFAULT_THRESHOLD = 0.30


@dataclass(frozen=True)
class ClassifierConfig:
    threshold: float = DEFAULT_THRESHOLD

    def __post_init__(self):
        if not (0.0 < self.threshold <= 1.0):
            raise ValueError(f"threshold must lie in (0, 1], got {self.threshold}")


@dataclass(frozen=True)
class MatchResult:
    prototype_name: str
    matched_rigid: frozenset[str]
    matched_typical: frozenset[str]
    coverage: float
    accepted: bool


@dataclass(frozen=True)
class LabelExplanation:
    """Matched trigger terms split by parent attribution."""

    label: str
    coverage: float
    emotion_triggers: dict[str, list[str]] = field(default_factory=dict)  # emotion parent -> terms
    value_triggers: dict[str, list[str]] = field(default_factory=dict)  # value parent -> terms

    def all_triggers(self) -> set[str]:
        out: set[str] = set()
        for terms in self.emotion_triggers.values():
            out |= set(terms)
        for terms in self.value_triggers.values():
            out |= set(terms)
        return out


@dataclass(frozen=True)
class Classification:
    item_id: str
    labels: tuple[str, ...] = ()
    explanations: tuple[LabelExplanation, ...] = ()


def match_prototype(
    profile: FeatureProfile,
    prototype: Prototype,
    config: ClassifierConfig = ClassifierConfig(),
) -> MatchResult:
    """Presence-based matching; an empty rigid set is vacuously satisfied."""
    terms = profile.terms()
    matched_rigid = frozenset(prototype.rigid & terms)
    typical_terms = prototype.typical_terms()
    matched_typical = frozenset(typical_terms & terms)
    coverage = len(matched_typical) / len(typical_terms) if typical_terms else 0.0
    accepted = (
        bool(typical_terms)
        and matched_rigid == prototype.rigid
        and coverage >= config.threshold
    )
    return MatchResult(
        prototype_name=prototype.name,
        matched_rigid=matched_rigid,
        matched_typical=matched_typical,
        coverage=coverage,
        accepted=accepted,
    )


def explain_match(
    match: MatchResult,
    compound: Prototype,
    parent_tags: dict[str, Parent],
) -> LabelExplanation:
    head_name, modifier_name = compound.parents if compound.parents else (compound.name, compound.name)
    value_terms: list[str] = []
    emotion_terms: list[str] = []
    for term in sorted(match.matched_rigid | match.matched_typical):
        tag = parent_tags.get(term, Parent.BOTH)
        if tag in (Parent.HEAD, Parent.BOTH):
            value_terms.append(term)
        if tag in (Parent.MODIFIER, Parent.BOTH):
            emotion_terms.append(term)
    return LabelExplanation(
        label=match.prototype_name,
        coverage=match.coverage,
        emotion_triggers={modifier_name: emotion_terms} if emotion_terms else {},
        value_triggers={head_name: value_terms} if value_terms else {},
    )


def classify_item(
    profile: FeatureProfile,
    compounds: list[Prototype],
    config: ClassifierConfig = ClassifierConfig(),
    parent_tags_by_compound: dict[str, dict[str, Parent]] | None = None,
) -> Classification:
    """All accepted labels, ordered by descending coverage then name."""
    parent_tags_by_compound = parent_tags_by_compound or {}
    explanations: list[LabelExplanation] = []
    for compound in compounds:
        match = match_prototype(profile, compound, config)
        if not match.accepted:
            continue
        tags = parent_tags_by_compound.get(compound.name, {})
        explanations.append(explain_match(match, compound, tags))
    explanations.sort(key=lambda e: (-e.coverage, e.label))
    return Classification(
        item_id=profile.item_id,
        labels=tuple(e.label for e in explanations),
        explanations=tuple(explanations),
    )


def classification_to_record(classification: Classification) -> dict:
    return {
        "item_id": classification.item_id,
        "labels": list(classification.labels),
        "explanations": [
            {
                "label": e.label,
                "coverage": round(e.coverage, 6),
                "emotions": {k: list(v) for k, v in e.emotion_triggers.items()},
                "values": {k: list(v) for k, v in e.value_triggers.items()},
            }
            for e in classification.explanations
        ],
    }
