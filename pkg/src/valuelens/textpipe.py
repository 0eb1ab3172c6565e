"""Text preprocessing: a small deterministic rule-based lemmatizer plus
frequentist feature-profile extraction.

The classifier matches exact lemmas against prototype terms, so a compact
suffix-rule lemmatizer with a curated exception table is enough and keeps
the build hermetic.  The stopword list ships as a versioned text file whose
content hash is cited in classification reports.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources
from typing import Optional

from .errors import DataError, EmptyProfileError
from .kb import content_hash

_TOKEN_SPLIT = re.compile(r"[^a-z]+")

# Surface form -> lemma.  Identity entries protect words the suffix rules
# would otherwise mangle.
LEMMA_EXCEPTIONS: dict[str, str] = {
    "was": "be",
    "has": "have",
    "does": "do",
    "men": "man",
    "women": "woman",
    "children": "child",
    "feet": "foot",
    "during": "during",
    "molestation": "molestation",
    "weapon": "weapon",
    "brutality": "brutality",
    "violently": "violently",
    "surprise": "surprise",
    "torture": "torture",
    "kill": "kill",
}

# Stems that lose a final 'e' when -ing/-ed is stripped.
E_RESTORE_STEMS: frozenset[str] = frozenset(
    {
        "us", "hav", "tortur", "surpris", "desecrat", "defil", "believ",
        "creat", "describ", "serv", "sav", "achiev", "receiv", "produc",
        "introduc", "celebrat", "decorat", "observ", "carv", "engrav",
        "shap", "stor", "trad", "captur", "restor", "besieg",
    }
)


def _load_stopwords() -> tuple[frozenset[str], str]:
    text = resources.files("valuelens.data").joinpath("stopwords.txt").read_text("utf-8")
    words = frozenset(
        line.strip() for line in text.splitlines() if line.strip() and not line.startswith("#")
    )
    return words, content_hash(text)


STOPWORDS, STOPWORDS_HASH = _load_stopwords()


def _apply_suffix_rules(word: str) -> str:
    if word.endswith("ies") and len(word) > 4:
        return word[:-3] + "y"
    if word.endswith("sses"):
        return word[:-2]
    if word.endswith("s") and not word.endswith(("ss", "us", "is")):
        word = word[:-1]
    if word.endswith("ing") and len(word) > 4:
        stem = word[:-3]
        if len(stem) >= 2:
            return stem + "e" if stem in E_RESTORE_STEMS else stem
    if word.endswith("ed") and len(word) > 3:
        stem = word[:-2]
        if len(stem) >= 2:
            return stem + "e" if stem in E_RESTORE_STEMS else stem
    return word


def lemmatize(text: str) -> list[str]:
    """Case-fold, split on non-letter runs, lemmatize, drop stopwords."""
    lemmas: list[str] = []
    for token in _TOKEN_SPLIT.split(text.casefold()):
        if len(token) < 2:
            continue
        lemma = LEMMA_EXCEPTIONS.get(token)
        if lemma is None:
            lemma = _apply_suffix_rules(token)
        if len(lemma) < 2 or lemma in STOPWORDS:
            continue
        lemmas.append(lemma)
    return lemmas


@dataclass(frozen=True)
class CulturalItem:
    id: str
    title: str
    description: str
    source: Optional[str] = None

    @staticmethod
    def from_record(record: dict) -> "CulturalItem":
        for key in ("id", "title", "description"):
            if key not in record:
                raise DataError(f"catalog item missing field {key!r}: {record!r}")
        return CulturalItem(
            id=str(record["id"]),
            title=str(record["title"]),
            description=str(record["description"]),
            source=record.get("source"),
        )


@dataclass(frozen=True)
class FeatureProfile:
    item_id: str
    frequencies: dict[str, float] = field(default_factory=dict)
    token_count: int = 0

    def terms(self) -> frozenset[str]:
        return frozenset(self.frequencies)


def extract_feature_profile(item: CulturalItem) -> FeatureProfile:
    lemmas = lemmatize(item.description)
    if not lemmas:
        raise EmptyProfileError(f"empty profile for item {item.id!r}")
    counts: dict[str, int] = {}
    for lemma in lemmas:
        counts[lemma] = counts.get(lemma, 0) + 1
    total = len(lemmas)
    frequencies = {term: counts[term] / total for term in sorted(counts)}
    return FeatureProfile(item_id=item.id, frequencies=frequencies, token_count=total)
