"""Command line interface.

Exit codes: 0 ok, 1 usage error, 2 data error.
"""

from __future__ import annotations

import sys
from pathlib import Path

import click

from . import pipeline
from .bundle import Bundle
from .errors import ValuelensError
from .kb import dumps_canonical
from .mapping import mapping_rows_as_records
from .recommend import Mode, opposite_items, recommendation_to_record, similar_items
from .report import write_report_files
from .store import CatalogStore
from .textpipe import extract_feature_profile
from .classify import ClassifierConfig, classify_item


@click.group()
def cli():
    """Value-emotion reasoning over cultural collections."""


@cli.command("build-prototypes")
@click.option("--emotions", "emotions_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--values", "values_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--k", default=10, show_default=True, type=click.IntRange(min=1))
@click.option("--max-features", default=7, show_default=True, type=click.IntRange(min=1))
@click.option("--threshold", default=0.30, show_default=True, type=float)
@click.option("--out", "out_path", required=True, type=click.Path(dir_okay=False))
def build_prototypes_cmd(emotions_path, values_path, k, max_features, threshold, out_path):
    """Build the compound prototype bundle from the two lexicons."""
    emotion_text = Path(emotions_path).read_text(encoding="utf-8")
    value_text = Path(values_path).read_text(encoding="utf-8")
    bundle = pipeline.build_prototypes(emotion_text, value_text, k, max_features, threshold)
    digest = bundle.write(out_path)
    compounds = sorted(p.name for p in bundle.compounds())
    click.echo(f"wrote {out_path} (sha256 {digest[:12]}...) with {len(compounds)} compounds:")
    for name in compounds:
        click.echo(f"  {name}")


@cli.command("classify")
@click.option("--catalog", "catalog_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--bundle", "bundle_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--out", "out_path", required=True, type=click.Path(dir_okay=False))
@click.option("--figures/--no-figures", default=True, show_default=True,
              help="Render label-histogram and coverage figures next to the report.")
def classify_cmd(catalog_path, bundle_path, out_path, figures):
    """Classify a catalog file against a bundle and write the report."""
    items = pipeline.load_catalog(catalog_path)
    bundle = Bundle.load(bundle_path)
    report = pipeline.classify_catalog(items, bundle)
    written = write_report_files(report, out_path, figures=figures)
    summary = report["summary"]
    click.echo(
        f"classified {summary['items_classified']}/{summary['items_total']} items; "
        f"{summary['items_unclassified']} unreadable"
    )
    for path in written:
        click.echo(f"wrote {path}")


@cli.command("recommend")
@click.option("--item", "item_id", required=True)
@click.option("--mode", type=click.Choice([m.value for m in Mode]), required=True)
@click.option("--catalog", "catalog_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--bundle", "bundle_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--limit", default=None, type=click.IntRange(min=1))
def recommend_cmd(item_id, mode, catalog_path, bundle_path, limit):
    """Rank items similar to or value-opposite from a seed item."""
    items = pipeline.load_catalog(catalog_path)
    bundle = Bundle.load(bundle_path)
    config = ClassifierConfig(threshold=bundle.manifest.get("threshold", 0.30))
    compounds = sorted(bundle.compounds(), key=lambda p: p.name)
    classifications = []
    seed = None
    for item in items:
        try:
            profile = extract_feature_profile(item)
        except ValuelensError:
            continue
        classification = classify_item(profile, compounds, config, bundle.parent_tags)
        classifications.append(classification)
        if item.id == item_id:
            seed = classification
    if seed is None:
        raise ValuelensError(f"unknown item {item_id!r}")
    fn = similar_items if mode == Mode.SIMILAR.value else opposite_items
    recommendation = fn(seed, classifications, limit)
    click.echo(dumps_canonical(recommendation_to_record(recommendation)), nl=False)


@cli.command("serve")
@click.option("--bind", default="127.0.0.1:8000", show_default=True)
@click.option("--bundle", "bundle_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--catalog", "catalog_path", default=None, type=click.Path(exists=True, dir_okay=False))
@click.option("--journal", "journal_path", default=None, type=click.Path(dir_okay=False),
              help="Append-only JSONL file persisting ingested items across restarts.")
def serve_cmd(bind, bundle_path, catalog_path, journal_path):
    """Run the HTTP JSON API."""
    import uvicorn

    from .service import create_app

    bundle = Bundle.load(bundle_path)
    store = CatalogStore(bundle, journal_path)
    if catalog_path:
        store.ingest(pipeline.load_catalog(catalog_path), journal=False)
    host, _, port = bind.rpartition(":")
    if not host or not port.isdigit():
        raise click.UsageError(f"--bind must be addr:port, got {bind!r}")
    app = create_app(store)
    uvicorn.run(app, host=host, port=int(port))


@cli.command("export-mapping")
@click.option("--out", "out_path", default=None, type=click.Path(dir_okay=False))
def export_mapping_cmd(out_path):
    """Emit the moral emotion / value pole / Plutchik mapping as JSON."""
    text = dumps_canonical(mapping_rows_as_records())
    if out_path:
        Path(out_path).write_text(text, encoding="utf-8")
        click.echo(f"wrote {out_path}")
    else:
        click.echo(text, nl=False)


def main(argv: list[str] | None = None) -> int:
    try:
        cli.main(args=argv, standalone_mode=False)
        return 0
    except click.UsageError as exc:
        click.echo(f"usage error: {exc.format_message()}", err=True)
        return 1
    except click.ClickException as exc:
        exc.show()
        return 1
    except click.exceptions.Abort:
        return 1
    except (ValuelensError, OSError) as exc:
        click.echo(f"error: {exc}", err=True)
        return 2


if __name__ == "__main__":
    sys.exit(main())
