"""Catalog store with immutable snapshots and optional append-only
persistence.

Readers always work against a single `Snapshot` object; ingestion builds a
new snapshot and swaps it atomically (one reference assignment), so no
request ever observes a half-updated catalog or bundle.  Persistence is a
JSON-lines journal of ingested items: small, auditable, and byte-stable
across restarts.
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .bundle import Bundle
from .classify import Classification, ClassifierConfig, classify_item
from .errors import EmptyProfileError
from .textpipe import CulturalItem, extract_feature_profile


@dataclass(frozen=True)
class Snapshot:
    bundle: Bundle
    bundle_hash: str
    items: dict[str, CulturalItem] = field(default_factory=dict)
    classifications: dict[str, Classification] = field(default_factory=dict)
    unclassified: dict[str, str] = field(default_factory=dict)  # item id -> reason


def _classify_all(bundle: Bundle, items: dict[str, CulturalItem]) -> tuple[dict, dict]:
    config = ClassifierConfig(threshold=bundle.manifest.get("threshold", 0.30))
    compounds = sorted(bundle.compounds(), key=lambda p: p.name)
    classifications: dict[str, Classification] = {}
    unclassified: dict[str, str] = {}
    for item_id, item in items.items():
        try:
            profile = extract_feature_profile(item)
        except EmptyProfileError:
            unclassified[item_id] = "empty profile"
            continue
        classifications[item_id] = classify_item(profile, compounds, config, bundle.parent_tags)
    return classifications, unclassified


class CatalogStore:
    """Single-writer store; concurrent readers see immutable snapshots."""

    def __init__(self, bundle: Bundle, journal_path: Optional[str | Path] = None):
        self._write_lock = threading.Lock()
        self._journal_path = Path(journal_path) if journal_path else None
        items: dict[str, CulturalItem] = {}
        if self._journal_path and self._journal_path.exists():
            for line in self._journal_path.read_text(encoding="utf-8").splitlines():
                if not line.strip():
                    continue
                item = CulturalItem.from_record(json.loads(line))
                items[item.id] = item
        classifications, unclassified = _classify_all(bundle, items)
        self._snapshot = Snapshot(
            bundle=bundle,
            bundle_hash=bundle.sha256(),
            items=items,
            classifications=classifications,
            unclassified=unclassified,
        )

    @property
    def snapshot(self) -> Snapshot:
        return self._snapshot

    def ingest(self, new_items: list[CulturalItem], journal: bool = True) -> int:
        """Add or replace items, classify them, swap the snapshot.

        `journal=False` loads items without persisting them (used for
        catalogs supplied on the command line, which are re-read at startup).
        """
        with self._write_lock:
            current = self._snapshot
            items = dict(current.items)
            for item in new_items:
                items[item.id] = item
            classifications, unclassified = _classify_all(current.bundle, items)
            if journal and self._journal_path:
                with self._journal_path.open("a", encoding="utf-8") as fh:
                    for item in new_items:
                        record = {"id": item.id, "title": item.title, "description": item.description}
                        if item.source is not None:
                            record["source"] = item.source
                        fh.write(json.dumps(record, ensure_ascii=False) + "\n")
            self._snapshot = Snapshot(
                bundle=current.bundle,
                bundle_hash=current.bundle_hash,
                items=items,
                classifications=classifications,
                unclassified=unclassified,
            )
            return len(new_items)

    def swap_bundle(self, bundle: Bundle) -> None:
        with self._write_lock:
            current = self._snapshot
            classifications, unclassified = _classify_all(bundle, current.items)
            self._snapshot = Snapshot(
                bundle=bundle,
                bundle_hash=bundle.sha256(),
                items=current.items,
                classifications=classifications,
                unclassified=unclassified,
            )
