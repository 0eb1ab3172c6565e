from importlib import resources

import pytest

from valuelens import pipeline


@pytest.fixture(scope="session")
def fixture_texts():
    fx = resources.files("valuelens.fixtures")
    return {
        "emotions": fx.joinpath("emotions.tsv").read_text("utf-8"),
        "values": fx.joinpath("values.csv").read_text("utf-8"),
        "catalog": fx.joinpath("catalog.json").read_text("utf-8"),
    }


@pytest.fixture(scope="session")
def fixture_bundle(fixture_texts):
    return pipeline.build_prototypes(fixture_texts["emotions"], fixture_texts["values"])


@pytest.fixture(scope="session")
def fixture_items(fixture_texts):
    return pipeline.load_catalog_text(fixture_texts["catalog"])


@pytest.fixture(scope="session")
def fixture_paths(tmp_path_factory, fixture_texts):
    root = tmp_path_factory.mktemp("fixtures")
    paths = {}
    for name, filename in (("emotions", "emotions.tsv"), ("values", "values.csv"), ("catalog", "catalog.json")):
        path = root / filename
        path.write_text(fixture_texts[name], encoding="utf-8")
        paths[name] = path
    return paths
