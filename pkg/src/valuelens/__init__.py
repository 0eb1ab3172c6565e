"""Value-emotion reasoning engine for cultural collections."""

__version__ = "0.1.0"

from .kb import KnowledgeBase, OppositionTable, Prototype, TypicalityInclusion  # noqa: F401
