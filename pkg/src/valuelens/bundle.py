"""The prototype bundle: the serialized unit exchanged between the builder,
the classifier, the recommender and the service.

A bundle carries every base and compound prototype, per-term parent
attribution for compounds (needed for trigger-word explanations), the
winning-scenario metadata of each combination, and a manifest pinning the
inputs (lexicon hashes, k, max_features, threshold) so identical inputs
always rebuild a byte-identical bundle.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .errors import DataError
from .kb import (
    Kind,
    Parent,
    Prototype,
    content_hash,
    dumps_canonical,
    prototype_from_record,
    prototype_to_record,
)

FORMAT_VERSION = 1


@dataclass(frozen=True)
class Bundle:
    prototypes: dict[str, Prototype]
    parent_tags: dict[str, dict[str, Parent]] = field(default_factory=dict)
    combination_meta: dict[str, dict] = field(default_factory=dict)
    manifest: dict = field(default_factory=dict)

    def compounds(self) -> list[Prototype]:
        return [p for p in self.prototypes.values() if p.kind is Kind.COMPOUND]

    def to_text(self) -> str:
        records: dict[str, dict] = {}
        for name, proto in self.prototypes.items():
            extra: dict = {}
            record = prototype_to_record(proto, extra)
            tags = self.parent_tags.get(name)
            if tags:
                for row in record["typical"]:
                    row["parent"] = tags[row["term"]].value
            meta = self.combination_meta.get(name)
            if meta:
                record["combination"] = meta
            records[name] = record
        document = {
            "format_version": FORMAT_VERSION,
            "manifest": self.manifest,
            "prototypes": records,
        }
        return dumps_canonical(document)

    def sha256(self) -> str:
        return content_hash(self.to_text())

    def write(self, path: str | Path) -> str:
        text = self.to_text()
        Path(path).write_text(text, encoding="utf-8")
        return content_hash(text)

    @staticmethod
    def from_text(text: str) -> "Bundle":
        try:
            document = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DataError(f"bundle is not valid JSON: {exc}") from None
        if "prototypes" not in document:
            raise DataError("bundle has no 'prototypes' section")
        prototypes: dict[str, Prototype] = {}
        parent_tags: dict[str, dict[str, Parent]] = {}
        combination_meta: dict[str, dict] = {}
        for name, record in document["prototypes"].items():
            prototypes[name] = prototype_from_record(name, record)
            tags = {
                row["term"]: Parent(row["parent"])
                for row in record.get("typical", ())
                if "parent" in row
            }
            if tags:
                parent_tags[name] = tags
            if "combination" in record:
                combination_meta[name] = record["combination"]
        return Bundle(
            prototypes=prototypes,
            parent_tags=parent_tags,
            combination_meta=combination_meta,
            manifest=document.get("manifest", {}),
        )

    @staticmethod
    def load(path: str | Path) -> "Bundle":
        return Bundle.from_text(Path(path).read_text(encoding="utf-8"))
