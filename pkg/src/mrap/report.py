"""CSV/JSON report files and figures for scans and the published-table regression."""

from __future__ import annotations

import csv
import json
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .solver import rational_ap
from .scan import CSV_COLUMNS, OMEGA_CONVENTION, TableVerification, ScanResult, ScanRow

# no timestamps or version strings, so identical scans give identical files
_PNG_META = {"Software": None}


def _kept(result: ScanResult) -> list[ScanRow]:
    if result.spec.nonrational_only:
        return result.differing()
    return result.rows


def write_csv(rows: list[ScanRow], path: Path) -> Path:
    with path.open("w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for row in rows:
            w.writerow(row.csv_fields())
    return path


def summary(result: ScanResult) -> dict:
    same = [r for r in result.rows if r.same_as_rational]
    return {
        "rows": len(result.rows),
        "rows_equal_to_Q": len(same),
        "rows_beyond_Q": [[r.d, r.D] for r in result.differing()],
    }


def write_json(result: ScanResult, rows: list[ScanRow], path: Path) -> Path:
    spec = result.spec
    doc = {
        "omega_convention": OMEGA_CONVENTION,
        "coefficients": [spec.a, spec.b, spec.c],
        "d_range": list(spec.d_range),
        "disc_range": list(spec.disc_range) if spec.disc_range else None,
        "D_list": list(spec.D_list) if spec.D_list else None,
        "summary": summary(result),
        "rows": [r.to_dict() for r in rows],
    }
    path.write_text(json.dumps(doc, sort_keys=True, indent=1) + "\n", encoding="utf-8")
    return path


def plot_scan(result: ScanResult, path: Path) -> Path:
    """Heatmap of #AP(K) - #AP(Q) over the (D, d) grid."""
    ds = sorted({r.d for r in result.rows})
    Ds = sorted({r.D for r in result.rows}, key=lambda D: (abs(D), D))
    grid = np.zeros((len(ds), len(Ds)))
    di = {d: i for i, d in enumerate(ds)}
    Di = {D: j for j, D in enumerate(Ds)}
    sp = result.spec
    rational = {d: len(rational_ap(sp.a, sp.b, sp.c, d)) for d in ds}
    for r in result.rows:
        grid[di[r.d], Di[r.D]] = r.count - rational[r.d]
    fig, ax = plt.subplots(figsize=(max(6, 0.12 * len(Ds) + 2), max(3, 0.25 * len(ds) + 1.5)))
    im = ax.imshow(grid, aspect="auto", cmap="viridis", origin="lower", interpolation="nearest")
    ax.set_xlabel("D")
    ax.set_ylabel("d")
    step = max(1, len(Ds) // 20)
    ax.set_xticks(range(0, len(Ds), step))
    ax.set_xticklabels([str(Ds[j]) for j in range(0, len(Ds), step)], rotation=90, fontsize=7)
    ax.set_yticks(range(len(ds)))
    ax.set_yticklabels([str(d) for d in ds], fontsize=7)
    ax.set_title(f"extra progressions over Q(sqrt(D)), (a,b,c) = ({sp.a},{sp.b},{sp.c})")
    fig.colorbar(im, ax=ax, label="#AP(K) - #AP(Q)")
    fig.tight_layout()
    fig.savefig(path, dpi=100, metadata=_PNG_META)
    plt.close(fig)
    return path


def write_report(result: ScanResult) -> list[Path]:
    """Write the table, and the heatmap next to it when plotting is on."""
    spec = result.spec
    out = Path(spec.output)
    out.parent.mkdir(parents=True, exist_ok=True)
    rows = _kept(result)
    files = [write_csv(rows, out) if spec.fmt == "csv" else write_json(result, rows, out)]
    if spec.plot and result.rows:
        files.append(plot_scan(result, out.with_name(out.stem + "_heatmap.png")))
    return files


def plot_verification(ver: TableVerification, path: Path) -> Path:
    """Computed vs published counts per table row."""
    keys = sorted(ver.row_counts, key=lambda k: (k[0], k[1]))
    got = [ver.row_counts[k][0] for k in keys]
    want = [ver.row_counts[k][1] for k in keys]
    x = np.arange(len(keys))
    fig, ax = plt.subplots(figsize=(10, 4))
    ax.bar(x - 0.2, want, 0.4, label="published")
    ax.bar(x + 0.2, got, 0.4, label="computed")
    ax.set_xticks(x)
    ax.set_xticklabels([f"{d},{D}" for d, D in keys], rotation=90, fontsize=7)
    ax.set_xlabel("(d, D)")
    ax.set_ylabel("#AP")
    ax.set_title(f"progression counts, total {ver.computed_total}")
    ax.legend()
    fig.tight_layout()
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, dpi=100, metadata=_PNG_META)
    plt.close(fig)
    return path
