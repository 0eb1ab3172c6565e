"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with `pytest tests/test_acceptance.py -s` to see the per-criterion
lines.
"""

import math
import random
import time

import pytest
from fastapi.testclient import TestClient

from valuelens import pipeline
from valuelens.cli import main as cli_main
from valuelens.combine import (
    CombinationRequest,
    build_inclusion_pool,
    combine_concepts,
    enumerate_scenarios,
)
from valuelens.errors import CombinationError
from valuelens.kb import Kind, OppositionTable, Parent, Prototype, TypicalityInclusion
from valuelens.mapping import (
    MAPPING_ROWS,
    Foundation,
    Polarity,
    ValuePole,
    plutchik_for_value_pole,
    value_poles_for_moral_emotion,
)
from valuelens.classify import ClassifierConfig, match_prototype
from valuelens.service import create_app
from valuelens.store import CatalogStore
from valuelens.textpipe import FeatureProfile

from test_combine import oracle_best_scenario


def report_pass(name):
    print(f"PASS: {name}")


def classification_by_id(report):
    return {record["item_id"]: record for record in report["classifications"]}


def test_table2_reproduction_on_fixtures(fixture_items, fixture_bundle):
    start = time.perf_counter()
    report = pipeline.classify_catalog(fixture_items, fixture_bundle)
    elapsed = time.perf_counter() - start
    by_id = classification_by_id(report)

    catapult = by_id["catapult"]
    assert catapult["labels"] == ["degradation-disgust"]
    triggers = catapult["explanations"][0]
    assert triggers["emotions"] == {"disgust": ["molestation"]}
    assert triggers["values"] == {"degradation": ["weapon"]}

    war_gear = by_id["roman-war-gear"]
    assert war_gear["labels"] == ["betrayal-aggressiveness"]
    triggers = war_gear["explanations"][0]
    assert triggers["emotions"] == {"aggressiveness": ["brutality", "violently"]}
    assert triggers["values"] == {}

    bar_kochva = by_id["bar-kochva-rebellion"]
    assert bar_kochva["labels"] == ["sanctity-awe"]
    triggers = bar_kochva["explanations"][0]
    assert set(triggers["emotions"]["awe"]) == {"surprise", "torture", "kill"}
    assert triggers["values"] == {}

    assert elapsed < 1.0
    report_pass(f"Table 2 reproduction on bundled fixtures ({elapsed * 1000:.0f} ms)")


def test_mapping_completeness_and_roundtrip(tmp_path, capsys):
    out = tmp_path / "mapping.json"
    assert cli_main(["export-mapping", "--out", str(out)]) == 0
    import json

    rows = json.loads(out.read_text())
    assert len(rows) == 17

    for row in MAPPING_ROWS:
        poles = value_poles_for_moral_emotion(row.moral_emotion)
        assert tuple(poles) == row.value_poles
        for pole in poles:
            mapped = plutchik_for_value_pole(pole)
            for label in row.plutchik_emotions:
                assert label in mapped

    fear = value_poles_for_moral_emotion("Fear")
    assert fear == [ValuePole(Foundation.AUTHORITY, Polarity.VICE)]
    assert plutchik_for_value_pole(fear[0]) == ["terror"]
    pride = value_poles_for_moral_emotion("Pride")
    assert plutchik_for_value_pole(pride[0]) == ["admiration", "trust", "acceptance"]
    disgust = value_poles_for_moral_emotion("Disgust")
    assert plutchik_for_value_pole(disgust[0]) == ["disgust", "loathing"]
    report_pass("Table 1 completeness: 17 rows, lookups round-trip, spot values hold")


def test_scenario_distribution_law():
    rng = random.Random(99)
    for _ in range(200):
        n = rng.randint(0, 12)
        pool = [
            TypicalityInclusion("s", f"t{i}", rng.uniform(0.5000001, 1.0), Parent.HEAD)
            for i in range(n)
        ]
        total = sum(s.probability for s in enumerate_scenarios(pool))
        assert math.isclose(total, 1.0, abs_tol=1e-9)
    report_pass("Scenario distribution law: 200 random pools sum to 1 within 1e-9")


def test_oracle_equivalence():
    rng = random.Random(424242)
    mismatches = 0
    for _ in range(100):
        n_head = rng.randint(1, 7)
        n_modifier = rng.randint(1, 6)
        n_shared = rng.randint(0, 2)
        head_terms = [f"h{i}" for i in range(n_head)] + [f"s{i}" for i in range(n_shared)]
        modifier_terms = [f"m{i}" for i in range(n_modifier)] + [f"s{i}" for i in range(n_shared)]
        head = Prototype.make("h", Kind.VALUE, {t: rng.uniform(0.500001, 1.0) for t in head_terms})
        modifier = Prototype.make("m", Kind.EMOTION, {t: rng.uniform(0.500001, 1.0) for t in modifier_terms})
        terms = sorted(set(head_terms) | set(modifier_terms))
        pairs = [tuple(rng.sample(terms, 2)) for _ in range(rng.randint(0, 5))]
        request = CombinationRequest(
            head=head, modifier=modifier, oppositions=OppositionTable.from_pairs(pairs)
        )
        pool = build_inclusion_pool(head, modifier)
        assert len(pool) <= 15
        expected = oracle_best_scenario(pool, frozenset(), pairs)
        try:
            result = combine_concepts(request)
        except CombinationError:
            if expected is not None:
                mismatches += 1
            continue
        if expected is None or result.winning_scenario.kept != expected[0]:
            mismatches += 1
    assert mismatches == 0
    report_pass("Oracle equivalence: 100 random combinations, zero mismatches")


def test_cap_and_rule_boundaries(fixture_bundle):
    for compound in fixture_bundle.compounds():
        assert len(compound.typical) <= 7

    seven = Prototype.make(
        "c-x", Kind.COMPOUND, typical={f"t{i}": 0.9 - i * 0.01 for i in range(7)}, parents=("c", "x")
    )

    def profile(terms):
        return FeatureProfile(item_id="i", frequencies={t: 1 / len(terms) for t in terms},
                              token_count=len(terms))

    config = ClassifierConfig(threshold=0.30)
    assert not match_prototype(profile({"t0", "t1"}), seven, config).accepted
    assert match_prototype(profile({"t0", "t1", "t2"}), seven, config).accepted

    ten = Prototype.make(
        "d-y", Kind.COMPOUND, typical={f"t{i}": 0.9 - i * 0.01 for i in range(10)}, parents=("d", "y")
    )
    exact = match_prototype(profile({"t0", "t1", "t2"}), ten, config)
    assert exact.coverage == 0.30 and exact.accepted
    report_pass("Cap and rule boundaries: <=7 features; 2/7 rejected, 3/7 and exact 30% accepted")


def test_head_dominance():
    rng = random.Random(5150)
    for _ in range(50):
        shared = {f"s{i}" for i in range(rng.randint(1, 4))}
        head = Prototype.make(
            "h", Kind.VALUE,
            {t: rng.uniform(0.51, 0.99) for t in shared | {f"h{i}" for i in range(rng.randint(1, 5))}},
        )
        modifier = Prototype.make(
            "m", Kind.EMOTION,
            {t: rng.uniform(0.51, 0.99) for t in shared | {f"m{i}" for i in range(rng.randint(1, 5))}},
        )
        result = combine_concepts(CombinationRequest(head=head, modifier=modifier))
        head_map = head.typical_map()
        for term, p in result.compound.typical:
            if term in head_map:
                assert p == head_map[term]
    report_pass("HEAD dominance: shared terms always carry the HEAD probability")


def test_end_to_end_determinism(fixture_texts):
    def build_and_classify():
        bundle = pipeline.build_prototypes(fixture_texts["emotions"], fixture_texts["values"])
        items = pipeline.load_catalog_text(fixture_texts["catalog"])
        report = pipeline.classify_catalog(items, bundle)
        from valuelens.kb import dumps_canonical

        return bundle.to_text(), bundle.sha256(), dumps_canonical(report)

    first = build_and_classify()
    second = build_and_classify()
    assert first == second
    report_pass("Determinism: two build+classify runs are byte-identical")


def test_service_contract(fixture_bundle, fixture_items):
    store = CatalogStore(fixture_bundle)
    store.ingest(fixture_items, journal=False)
    client = TestClient(create_app(store))

    catapult_item = next(i for i in fixture_items if i.id == "catapult")
    response = client.post(
        "/v1/classify",
        json={"items": [{"id": catapult_item.id, "title": catapult_item.title,
                          "description": catapult_item.description}]},
    )
    assert response.status_code == 200
    record = response.json()["classifications"][0]
    assert record["labels"] == ["degradation-disgust"]
    triggers = record["explanations"][0]
    assert triggers["emotions"] == {"disgust": ["molestation"]}
    assert triggers["values"] == {"degradation": ["weapon"]}

    similar = client.get("/v1/items/catapult/similar?limit=5")
    assert similar.status_code == 200
    opposite = client.get("/v1/items/catapult/opposite?limit=5")
    assert opposite.status_code == 200
    ids = [r["item_id"] for r in opposite.json()["ranked"]]
    assert "bar-kochva-rebellion" in ids
    report_pass("Service contract: inline classify and opposite ranking behave as specified")
