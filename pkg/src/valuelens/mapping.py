"""Static mapping between Haidt-style moral emotions, MFT value poles and
Plutchik emotion labels, plus the opposition structure derived from it.

The mapping ships embedded; `mapping_rows_as_records` exports it as JSON
records for auditing.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import NotFoundError


class Foundation(str, Enum):
    CARE = "care"
    FAIRNESS = "fairness"
    LOYALTY = "loyalty"
    AUTHORITY = "authority"
    SANCTITY = "sanctity"


class Polarity(str, Enum):
    VIRTUE = "virtue"
    VICE = "vice"


@dataclass(frozen=True)
class ValuePole:
    foundation: Foundation
    polarity: Polarity

    @property
    def label(self) -> str:
        """Pole name: the foundation for virtue, the vice name otherwise."""
        if self.polarity is Polarity.VIRTUE:
            return self.foundation.value
        return VICE_NAMES[self.foundation]


VICE_NAMES: dict[Foundation, str] = {
    Foundation.CARE: "harm",
    Foundation.FAIRNESS: "cheating",
    Foundation.LOYALTY: "betrayal",
    Foundation.AUTHORITY: "subversion",
    Foundation.SANCTITY: "degradation",
}

ALL_POLES: tuple[ValuePole, ...] = tuple(
    ValuePole(f, pol) for f in Foundation for pol in (Polarity.VIRTUE, Polarity.VICE)
)

POLE_BY_LABEL: dict[str, ValuePole] = {pole.label: pole for pole in ALL_POLES}


@dataclass(frozen=True)
class MappingRow:
    moral_emotion: str
    value_poles: tuple[ValuePole, ...]
    plutchik_emotions: tuple[str, ...]


def _pole(foundation: Foundation, polarity: Polarity) -> ValuePole:
    return ValuePole(foundation, polarity)


# The 17-row manual mapping.  "Loyalty -" in the Shame row is normalized to
# the betrayal pole so the value vocabulary stays at exactly 10 poles.
MAPPING_ROWS: tuple[MappingRow, ...] = (
    MappingRow("Admiration", (_pole(Foundation.AUTHORITY, Polarity.VIRTUE),), ("awe",)),
    MappingRow("Anger", (_pole(Foundation.FAIRNESS, Polarity.VICE),), ("anger",)),
    MappingRow("Compassion", (_pole(Foundation.CARE, Polarity.VICE),), ("grief", "sadness", "pensiveness")),
    MappingRow(
        "Contempt",
        (_pole(Foundation.LOYALTY, Polarity.VICE), _pole(Foundation.FAIRNESS, Polarity.VICE)),
        ("disapproval",),
    ),
    MappingRow("Disgust", (_pole(Foundation.SANCTITY, Polarity.VICE),), ("disgust", "loathing")),
    MappingRow("Embarrassment", (_pole(Foundation.FAIRNESS, Polarity.VICE),), ("annoyance",)),
    MappingRow("Evaluation", (_pole(Foundation.SANCTITY, Polarity.VIRTUE),), ("awe",)),
    MappingRow("Fear", (_pole(Foundation.AUTHORITY, Polarity.VICE),), ("terror",)),
    MappingRow("Gratitude", (_pole(Foundation.FAIRNESS, Polarity.VIRTUE),), ("vigilance", "anticipation", "interest")),
    MappingRow("Guilt", (_pole(Foundation.FAIRNESS, Polarity.VICE),), ("remorse",)),
    MappingRow("Pity", (_pole(Foundation.CARE, Polarity.VICE),), ("grief", "sadness", "pensiveness")),
    MappingRow("Pride", (_pole(Foundation.LOYALTY, Polarity.VIRTUE),), ("admiration", "trust", "acceptance")),
    MappingRow("Rage", (_pole(Foundation.LOYALTY, Polarity.VICE),), ("rage",)),
    MappingRow("Remorse", (_pole(Foundation.CARE, Polarity.VICE),), ("grief", "sadness")),
    MappingRow("Reproach", (_pole(Foundation.LOYALTY, Polarity.VICE),), ("aggressiveness",)),
    MappingRow("Respect", (_pole(Foundation.AUTHORITY, Polarity.VIRTUE),), ("submission", "fear")),
    MappingRow("Shame", (_pole(Foundation.LOYALTY, Polarity.VICE),), ("remorse",)),
)

_ROWS_BY_MORAL_EMOTION = {row.moral_emotion: row for row in MAPPING_ROWS}

BASIC_EMOTIONS: frozenset[str] = frozenset(
    {"joy", "sadness", "trust", "disgust", "fear", "anger", "surprise", "anticipation"}
)

# Basics plus every derived label appearing in the mapping rows.
EMOTION_LABELS: frozenset[str] = BASIC_EMOTIONS | frozenset(
    label for row in MAPPING_ROWS for label in row.plutchik_emotions
)

_BASIC_OPPOSITES: dict[str, str] = {}
for _a, _b in (("joy", "sadness"), ("trust", "disgust"), ("fear", "anger"), ("surprise", "anticipation")):
    _BASIC_OPPOSITES[_a] = _b
    _BASIC_OPPOSITES[_b] = _a


def value_poles_for_moral_emotion(moral_emotion: str) -> list[ValuePole]:
    row = _ROWS_BY_MORAL_EMOTION.get(moral_emotion)
    if row is None:
        raise NotFoundError(f"unknown moral emotion {moral_emotion!r}")
    return list(row.value_poles)


def plutchik_for_value_pole(pole: ValuePole) -> list[str]:
    """All mapped emotion labels for a pole, deduplicated in row order."""
    seen: list[str] = []
    for row in MAPPING_ROWS:
        if pole in row.value_poles:
            for label in row.plutchik_emotions:
                if label not in seen:
                    seen.append(label)
    return seen


def opposite_value_pole(pole: ValuePole) -> ValuePole:
    flipped = Polarity.VICE if pole.polarity is Polarity.VIRTUE else Polarity.VIRTUE
    return ValuePole(pole.foundation, flipped)


def opposite_emotion(emotion: str) -> str:
    opposite = _BASIC_OPPOSITES.get(emotion)
    if opposite is None:
        raise NotFoundError(f"{emotion!r} is not a basic emotion")
    return opposite


def default_opposition_pairs() -> list[tuple[str, str]]:
    """Term-level opposition seed: the four basic-emotion wheel pairs."""
    return [("joy", "sadness"), ("trust", "disgust"), ("fear", "anger"), ("surprise", "anticipation")]


def mapping_rows_as_records() -> list[dict]:
    return [
        {
            "moral_emotion": row.moral_emotion,
            "value_poles": [
                {"foundation": p.foundation.value, "polarity": p.polarity.value, "label": p.label}
                for p in row.value_poles
            ],
            "plutchik_emotions": list(row.plutchik_emotions),
        }
        for row in MAPPING_ROWS
    ]
