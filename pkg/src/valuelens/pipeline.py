"""End-to-end orchestration: lexicons -> prototypes -> compound bundle, and
catalog -> feature profiles -> classification report.

Both paths are deterministic: identical inputs produce byte-identical
bundle and report files, pinned by sha256 hashes in the manifests.
"""

from __future__ import annotations

import json
from pathlib import Path

from . import combine, lexicons, mapping
from .bundle import Bundle
from .classify import ClassifierConfig, classification_to_record, classify_item
from .errors import DataError, EmptyProfileError
from .kb import OppositionTable, Parent, Prototype, content_hash
from .textpipe import STOPWORDS_HASH, CulturalItem, extract_feature_profile


def compute_parent_tags(compound: Prototype, head: Prototype, modifier: Prototype) -> dict[str, Parent]:
    head_terms = head.typical_terms() | head.rigid
    modifier_terms = modifier.typical_terms() | modifier.rigid
    tags: dict[str, Parent] = {}
    for term in compound.typical_terms() | compound.rigid:
        in_head = term in head_terms
        in_modifier = term in modifier_terms
        if in_head and in_modifier:
            tags[term] = Parent.BOTH
        elif in_modifier:
            tags[term] = Parent.MODIFIER
        else:
            tags[term] = Parent.HEAD
    return tags


def build_prototypes(
    emotion_lexicon_text: str,
    value_lexicon_text: str,
    k: int = lexicons.DEFAULT_K,
    max_features: int = 7,
    threshold: float = 0.30,
    extra_oppositions: list[tuple[str, str]] | None = None,
) -> Bundle:
    emotion_entries = lexicons.parse_emotion_lexicon(emotion_lexicon_text)
    value_entries = lexicons.parse_value_lexicon(value_lexicon_text)

    emotion_labels = sorted({e.emotion for e in emotion_entries})
    emotions = [lexicons.build_emotion_prototype(emotion_entries, label, k) for label in emotion_labels]

    pole_keys = sorted(
        {(e.foundation, e.polarity) for e in value_entries},
        key=lambda fp: (fp[0].value, fp[1].value),
    )
    values = [lexicons.build_value_prototype(value_entries, f, pol, k) for f, pol in pole_keys]

    pairs = mapping.default_opposition_pairs() + list(extra_oppositions or [])
    oppositions = OppositionTable.from_pairs(pairs)

    report = combine.build_compound_catalog(values, emotions, oppositions, max_features)
    if not report.results:
        raise DataError("no compound prototypes could be produced from these lexicons")

    prototypes: dict[str, Prototype] = {}
    for proto in sorted(values + emotions, key=lambda p: p.name):
        prototypes[proto.name] = proto
    parent_tags: dict[str, dict[str, Parent]] = {}
    combination_meta: dict[str, dict] = {}
    for result in sorted(report.results, key=lambda r: r.compound.name):
        compound = result.compound
        prototypes[compound.name] = compound
        head, modifier = compound.parents
        parent_tags[compound.name] = compute_parent_tags(compound, prototypes[head], prototypes[modifier])
        combination_meta[compound.name] = {
            "scenario_probability": result.winning_scenario.probability,
            "discarded": {k: result.discarded[k] for k in sorted(result.discarded)},
        }

    manifest = {
        "emotion_lexicon_sha256": content_hash(emotion_lexicon_text),
        "value_lexicon_sha256": content_hash(value_lexicon_text),
        "stopwords_sha256": STOPWORDS_HASH,
        "k": k,
        "max_features": max_features,
        "threshold": threshold,
        "oppositions": sorted(sorted(pair) for pair in {frozenset(p) for p in pairs}),
        "combination_failures": [list(f) for f in report.failures],
    }
    return Bundle(
        prototypes=prototypes,
        parent_tags=parent_tags,
        combination_meta=combination_meta,
        manifest=manifest,
    )


def load_catalog_text(text: str) -> list[CulturalItem]:
    try:
        records = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DataError(f"catalog is not valid JSON: {exc}") from None
    if not isinstance(records, list):
        raise DataError("catalog must be a JSON array of items")
    items = [CulturalItem.from_record(r) for r in records]
    seen: set[str] = set()
    for item in items:
        if item.id in seen:
            raise DataError(f"duplicate item id {item.id!r}")
        seen.add(item.id)
    return items


def load_catalog(path: str | Path) -> list[CulturalItem]:
    return load_catalog_text(Path(path).read_text(encoding="utf-8"))


def classify_catalog(items: list[CulturalItem], bundle: Bundle) -> dict:
    """Classify every item against the bundle's compounds.

    Items whose description yields no usable terms are reported as
    unclassified with a reason instead of failing the whole run.
    """
    threshold = bundle.manifest.get("threshold", 0.30)
    config = ClassifierConfig(threshold=threshold)
    compounds = sorted(bundle.compounds(), key=lambda p: p.name)

    classifications = []
    unclassified = []
    histogram: dict[str, int] = {}
    for item in items:
        try:
            profile = extract_feature_profile(item)
        except EmptyProfileError:
            unclassified.append({"item_id": item.id, "reason": "empty profile"})
            continue
        classification = classify_item(profile, compounds, config, bundle.parent_tags)
        classifications.append(classification)
        for label in classification.labels:
            histogram[label] = histogram.get(label, 0) + 1

    labeled = sum(1 for c in classifications if c.labels)
    return {
        "classifications": [classification_to_record(c) for c in classifications],
        "unclassified": unclassified,
        "summary": {
            "items_total": len(items),
            "items_classified": labeled,
            "items_unlabeled": len(classifications) - labeled,
            "items_unclassified": len(unclassified),
            "label_histogram": {k: histogram[k] for k in sorted(histogram)},
            "threshold": threshold,
            "bundle_sha256": bundle.sha256(),
            "stopwords_sha256": STOPWORDS_HASH,
        },
    }
