"""HTTP JSON API over a catalog store.

All endpoints live under /v1.  Reads hit the store's current immutable
snapshot; POST /v1/catalog ingests items and swaps snapshots atomically.
"""

from __future__ import annotations

from typing import Optional

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .classify import classification_to_record
from .errors import DataError
from .kb import prototype_to_record
from .recommend import (
    UnclassifiableSeedError,
    opposite_items,
    recommendation_to_record,
    similar_items,
)
from .store import CatalogStore
from .textpipe import CulturalItem, extract_feature_profile
from .classify import ClassifierConfig, classify_item


def _error(status: int, reason: str) -> JSONResponse:
    return JSONResponse(status_code=status, content={"error": reason})


def _parse_items(payload) -> list[CulturalItem]:
    if isinstance(payload, dict) and "items" in payload:
        payload = payload["items"]
    if not isinstance(payload, list):
        raise DataError("expected a JSON array of items or {\"items\": [...]}")
    return [CulturalItem.from_record(r) for r in payload]


def create_app(store: CatalogStore) -> FastAPI:
    app = FastAPI(title="valuelens", version="0.1.0")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    app.state.store = store

    @app.get("/v1/health")
    def health():
        snapshot = store.snapshot
        return {"status": "ok", "bundle_sha256": snapshot.bundle_hash, "items": len(snapshot.items)}

    @app.get("/v1/prototypes")
    def prototypes():
        snapshot = store.snapshot
        return {
            "bundle_sha256": snapshot.bundle_hash,
            "prototypes": sorted(snapshot.bundle.prototypes),
        }

    @app.get("/v1/prototypes/{name}")
    def prototype(name: str):
        snapshot = store.snapshot
        proto = snapshot.bundle.prototypes.get(name)
        if proto is None:
            return _error(404, f"unknown prototype {name!r}")
        record = prototype_to_record(proto)
        tags = snapshot.bundle.parent_tags.get(name)
        if tags:
            for row in record["typical"]:
                row["parent"] = tags[row["term"]].value
        meta = snapshot.bundle.combination_meta.get(name)
        if meta:
            record["combination"] = meta
        record["name"] = name
        return record

    @app.post("/v1/catalog")
    async def ingest(request: Request):
        try:
            payload = await request.json()
        except Exception:
            return _error(400, "request body is not valid JSON")
        try:
            items = _parse_items(payload)
        except DataError as exc:
            return _error(400, str(exc))
        count = store.ingest(items)
        return {"ingested": count, "items_total": len(store.snapshot.items)}

    @app.post("/v1/classify")
    async def classify(request: Request):
        snapshot = store.snapshot
        body = await request.body()
        if not body:
            payload = None
        else:
            try:
                payload = await request.json()
            except Exception:
                return _error(400, "request body is not valid JSON")
        if payload is None:
            results = [
                classification_to_record(c) for _, c in sorted(snapshot.classifications.items())
            ]
            return {"classifications": results}
        try:
            items = _parse_items(payload)
        except DataError as exc:
            return _error(400, str(exc))
        config = ClassifierConfig(threshold=snapshot.bundle.manifest.get("threshold", 0.30))
        compounds = sorted(snapshot.bundle.compounds(), key=lambda p: p.name)
        results = []
        for item in items:
            try:
                profile = extract_feature_profile(item)
            except Exception:
                results.append({"item_id": item.id, "labels": [], "explanations": [],
                                "error": "empty profile"})
                continue
            classification = classify_item(profile, compounds, config, snapshot.bundle.parent_tags)
            results.append(classification_to_record(classification))
        return {"classifications": results}

    @app.get("/v1/items")
    def list_items():
        snapshot = store.snapshot
        items = [
            {"id": item.id, "title": item.title, "labels": list(
                snapshot.classifications[item_id].labels
            ) if item_id in snapshot.classifications else []}
            for item_id, item in sorted(snapshot.items.items())
        ]
        return {"items": items}

    @app.get("/v1/items/{item_id}")
    def get_item(item_id: str):
        snapshot = store.snapshot
        item = snapshot.items.get(item_id)
        if item is None:
            return _error(404, f"unknown item {item_id!r}")
        record = {"id": item.id, "title": item.title, "description": item.description}
        if item.source is not None:
            record["source"] = item.source
        return record

    @app.get("/v1/items/{item_id}/classification")
    def get_classification(item_id: str):
        snapshot = store.snapshot
        if item_id not in snapshot.items:
            return _error(404, f"unknown item {item_id!r}")
        classification = snapshot.classifications.get(item_id)
        if classification is None:
            reason = snapshot.unclassified.get(item_id, "not classified")
            return {"item_id": item_id, "labels": [], "explanations": [], "error": reason}
        return classification_to_record(classification)

    def _recommend(item_id: str, fn, limit: Optional[int]):
        snapshot = store.snapshot
        if item_id not in snapshot.items:
            return _error(404, f"unknown item {item_id!r}")
        seed = snapshot.classifications.get(item_id)
        if seed is None:
            return _error(422, "unclassifiable seed")
        catalog = [c for c in snapshot.classifications.values()]
        catalog.sort(key=lambda c: c.item_id)
        try:
            recommendation = fn(seed, catalog, limit)
        except UnclassifiableSeedError:
            return _error(422, "unclassifiable seed")
        return recommendation_to_record(recommendation)

    @app.get("/v1/items/{item_id}/similar")
    def get_similar(item_id: str, limit: Optional[int] = None):
        return _recommend(item_id, similar_items, limit)

    @app.get("/v1/items/{item_id}/opposite")
    def get_opposite(item_id: str, limit: Optional[int] = None):
        return _recommend(item_id, opposite_items, limit)

    return app
