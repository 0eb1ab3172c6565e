"""Classification report rendering: canonical JSON, a delimited table and
matplotlib figures written next to it.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .kb import dumps_canonical


def report_to_tsv(report: dict) -> str:
    """Flat tab-separated view of the classification report."""
    lines = ["item_id\tlabels\tcoverage\temotion_triggers\tvalue_triggers"]
    for record in report["classifications"]:
        for explanation in record["explanations"] or [None]:
            if explanation is None:
                lines.append(f"{record['item_id']}\t\t\t\t")
                continue
            emotion = "; ".join(
                f"{parent}: {', '.join(terms)}" for parent, terms in explanation["emotions"].items()
            )
            value = "; ".join(
                f"{parent}: {', '.join(terms)}" for parent, terms in explanation["values"].items()
            )
            lines.append(
                f"{record['item_id']}\t{explanation['label']}\t{explanation['coverage']:.4f}\t{emotion}\t{value}"
            )
    for record in report["unclassified"]:
        lines.append(f"{record['item_id']}\t\t\t\t({record['reason']})")
    return "\n".join(lines) + "\n"


def render_label_histogram(report: dict, path: Path) -> None:
    histogram = report["summary"]["label_histogram"]
    fig, ax = plt.subplots(figsize=(7, 4))
    if histogram:
        labels = list(histogram)
        counts = [histogram[label] for label in labels]
        ax.barh(labels, counts, color="#4c72b0")
        ax.set_xlabel("items")
        ax.invert_yaxis()
    else:
        ax.text(0.5, 0.5, "no labels assigned", ha="center", va="center")
        ax.set_axis_off()
    ax.set_title("Compound label histogram")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def render_coverage_chart(report: dict, path: Path) -> None:
    rows = [
        (record["item_id"], explanation["label"], explanation["coverage"])
        for record in report["classifications"]
        for explanation in record["explanations"]
    ]
    fig, ax = plt.subplots(figsize=(7, 4))
    if rows:
        names = [f"{item}\n{label}" for item, label, _ in rows]
        coverages = [c for _, _, c in rows]
        ax.bar(range(len(rows)), coverages, color="#55a868")
        ax.set_xticks(range(len(rows)), names, fontsize=7)
        ax.axhline(report["summary"]["threshold"], color="#c44e52", linestyle="--", label="threshold")
        ax.set_ylabel("typical-feature coverage")
        ax.legend()
    else:
        ax.text(0.5, 0.5, "no accepted labels", ha="center", va="center")
        ax.set_axis_off()
    ax.set_title("Coverage of accepted labels")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def write_report_files(report: dict, out_json: str | Path, figures: bool = True) -> list[Path]:
    out_json = Path(out_json)
    out_json.write_text(dumps_canonical(report), encoding="utf-8")
    written = [out_json]
    tsv_path = out_json.with_suffix(".tsv")
    tsv_path.write_text(report_to_tsv(report), encoding="utf-8")
    written.append(tsv_path)
    if figures:
        histogram_path = out_json.with_name(out_json.stem + "_labels.png")
        render_label_histogram(report, histogram_path)
        coverage_path = out_json.with_name(out_json.stem + "_coverage.png")
        render_coverage_chart(report, coverage_path)
        written += [histogram_path, coverage_path]
    return written
