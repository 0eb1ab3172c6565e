"""Parsing of emotion-intensity and moral-value lexicons, and construction
of the basic emotion / value prototypes fed to the combiner.

Emotion lexicon: TSV `term<TAB>emotion<TAB>score`, '#' comments, optional
header.  Value lexicon: CSV `term,foundation,polarity,probability` with a
required header.  Scores in [0, 1] are rescaled into (0.5, 1] with
p = 0.5 + score/2 so ranking is preserved and every typical probability is
admissible.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Iterable, TextIO

from .errors import EmptyPrototypeError, LexiconParseError
from .kb import Kind, Prototype
from .mapping import EMOTION_LABELS, Foundation, Polarity, ValuePole

DEFAULT_K = 10

_RESCALE_EPSILON = 1e-6


@dataclass(frozen=True)
class EmotionLexiconEntry:
    term: str
    emotion: str
    score: float


@dataclass(frozen=True)
class ValueLexiconEntry:
    term: str
    foundation: Foundation
    polarity: Polarity
    probability: float


def rescale(score: float) -> float:
    """Map a [0, 1] lexicon score into the admissible interval (0.5, 1]."""
    return max(0.5 + score / 2.0, 0.5 + _RESCALE_EPSILON)


def _parse_score(raw: str, line_number: int, label: str) -> float:
    try:
        score = float(raw)
    except ValueError:
        raise LexiconParseError(line_number, f"unparsable {label} {raw!r}") from None
    if not (0.0 <= score <= 1.0):
        raise LexiconParseError(line_number, f"{label} outside [0,1]: {score}")
    return score


def parse_emotion_lexicon(content: TextIO | str) -> list[EmotionLexiconEntry]:
    if isinstance(content, str):
        content = io.StringIO(content)
    entries: list[EmotionLexiconEntry] = []
    seen_data = False
    for line_number, raw in enumerate(content, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split("\t")
        if not seen_data and fields[:2] == ["term", "emotion"]:
            continue
        seen_data = True
        if len(fields) != 3:
            raise LexiconParseError(line_number, f"expected 3 tab-separated fields, got {len(fields)}")
        term, emotion, raw_score = (f.strip() for f in fields)
        if emotion not in EMOTION_LABELS:
            raise LexiconParseError(line_number, f"unknown emotion label {emotion!r}")
        score = _parse_score(raw_score, line_number, "score")
        entries.append(EmotionLexiconEntry(term.lower(), emotion, score))
    return entries


def parse_value_lexicon(content: TextIO | str) -> list[ValueLexiconEntry]:
    if isinstance(content, str):
        content = io.StringIO(content)
    entries: list[ValueLexiconEntry] = []
    reader = csv.reader(line for line in content if not line.lstrip().startswith("#"))
    for line_number, fields in enumerate(reader, start=1):
        if not fields:
            continue
        if line_number == 1:
            # header row is required
            continue
        if len(fields) != 4:
            raise LexiconParseError(line_number, f"expected 4 comma-separated fields, got {len(fields)}")
        term, raw_foundation, raw_polarity, raw_probability = (f.strip() for f in fields)
        try:
            foundation = Foundation(raw_foundation)
        except ValueError:
            raise LexiconParseError(line_number, f"unknown foundation {raw_foundation!r}") from None
        try:
            polarity = Polarity(raw_polarity)
        except ValueError:
            raise LexiconParseError(line_number, f"unknown polarity {raw_polarity!r}") from None
        probability = _parse_score(raw_probability, line_number, "probability")
        entries.append(ValueLexiconEntry(term.lower(), foundation, polarity, probability))
    return entries


def convert_wide_value_lexicon(content: TextIO | str) -> list[ValueLexiconEntry]:
    """Convert a wide-format value lexicon into canonical entries.

    Wide format (CSV with header): a `word` column, one probability column
    per foundation (`care_p`, `fairness_p`, `loyalty_p`, `authority_p`,
    `sanctity_p`) and one signed sentiment column per foundation
    (`care_sent`, ...).  Each word is assigned to the foundation with the
    highest probability; polarity is vice when that foundation's sentiment
    is negative, virtue otherwise.
    """
    if isinstance(content, str):
        content = io.StringIO(content)
    reader = csv.DictReader(line for line in content if not line.lstrip().startswith("#"))
    foundations = list(Foundation)
    entries: list[ValueLexiconEntry] = []
    for line_number, row in enumerate(reader, start=2):
        term = (row.get("word") or "").strip().lower()
        if not term:
            raise LexiconParseError(line_number, "missing word column")
        try:
            probabilities = {f: float(row[f"{f.value}_p"]) for f in foundations}
            sentiments = {f: float(row[f"{f.value}_sent"]) for f in foundations}
        except (KeyError, TypeError, ValueError):
            raise LexiconParseError(line_number, "missing or unparsable foundation columns") from None
        best = max(foundations, key=lambda f: (probabilities[f], -foundations.index(f)))
        probability = _parse_score(str(probabilities[best]), line_number, "probability")
        polarity = Polarity.VICE if sentiments[best] < 0 else Polarity.VIRTUE
        entries.append(ValueLexiconEntry(term, best, polarity, probability))
    return entries


def serialize_emotion_lexicon(entries: Iterable[EmotionLexiconEntry]) -> str:
    lines = ["term\temotion\tscore"]
    lines += [f"{e.term}\t{e.emotion}\t{e.score:g}" for e in entries]
    return "\n".join(lines) + "\n"


def serialize_value_lexicon(entries: Iterable[ValueLexiconEntry]) -> str:
    lines = ["term,foundation,polarity,probability"]
    lines += [f"{e.term},{e.foundation.value},{e.polarity.value},{e.probability:g}" for e in entries]
    return "\n".join(lines) + "\n"


def _top_k(scored: list[tuple[str, float]], k: int) -> dict[str, float]:
    scored.sort(key=lambda kv: (-kv[1], kv[0]))
    return {term: rescale(score) for term, score in scored[:k]}


def build_emotion_prototype(entries: Iterable[EmotionLexiconEntry], emotion: str, k: int = DEFAULT_K) -> Prototype:
    if k < 1:
        raise ValueError("k must be >= 1")
    scored = [(e.term, e.score) for e in entries if e.emotion == emotion]
    if not scored:
        raise EmptyPrototypeError(f"empty prototype: no entries for emotion {emotion!r}")
    return Prototype.make(name=emotion, kind=Kind.EMOTION, typical=_top_k(scored, k))


def build_value_prototype(
    entries: Iterable[ValueLexiconEntry],
    foundation: Foundation,
    polarity: Polarity,
    k: int = DEFAULT_K,
) -> Prototype:
    if k < 1:
        raise ValueError("k must be >= 1")
    scored = [(e.term, e.probability) for e in entries if e.foundation == foundation and e.polarity == polarity]
    if not scored:
        raise EmptyPrototypeError(f"empty prototype: no entries for ({foundation.value}, {polarity.value})")
    name = ValuePole(foundation, polarity).label
    return Prototype.make(name=name, kind=Kind.VALUE, typical=_top_k(scored, k))
