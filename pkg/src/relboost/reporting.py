"""File emission: CSV, JSON, and heatmap images.

Output contract: CSV files are UTF-8, LF line endings, comma separated,
one header row, floats in 12-significant-digit scientific form; JSON
documents carry a ``"schema": 1`` version field and shortest-round-trip
floats.  Nothing here writes timestamps, so repeated runs with the same
inputs produce byte-identical files; run provenance goes to a separate
deterministic sidecar.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np
from PIL import Image

from . import __version__
from .amplitudes import mode_indices

__all__ = [
    "fmt_float",
    "write_json",
    "write_joint_csv",
    "write_amplitude_csv",
    "write_marginals_csv",
    "write_schmidt_csv",
    "write_sweep_csv",
    "write_table_files",
    "render_heatmap",
    "write_sidecar",
]

SCHEMA = 1


def fmt_float(x):
    """Fixed 12-significant-digit scientific notation (CSV float format)."""
    return f"{float(x):.11e}"


def _write_rows(path, header, rows):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = [",".join(header)]
    lines += [",".join(row) for row in rows]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")
    return path


def write_json(path, payload):
    """One JSON document per file, schema-stamped, key order preserved."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    doc = {"schema": SCHEMA}
    doc.update(payload)
    path.write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8", newline="\n")
    return path


def write_joint_csv(path, joint, lmax):
    """P(k, m) grid: header row of m indices, first column the k index."""
    ks = mode_indices(lmax)
    header = ["k\\m"] + [str(m) for m in ks]
    rows = [
        [str(k)] + [fmt_float(v) for v in joint[i]] for i, k in enumerate(ks)
    ]
    return _write_rows(path, header, rows)


def write_amplitude_csv(path, entries, lmax):
    """Complex A(k, m) in long form: one (k, m, re, im) row per cell."""
    ks = mode_indices(lmax)
    rows = [
        [str(k), str(m), fmt_float(entries[i, j].real), fmt_float(entries[i, j].imag)]
        for i, k in enumerate(ks)
        for j, m in enumerate(ks)
    ]
    return _write_rows(path, ["k", "m", "re", "im"], rows)


def write_marginals_csv(path, records, lmax):
    """One distribution per row: model, gamma, then P at each OAM index."""
    ks = mode_indices(lmax)
    header = ["model", "gamma"] + [f"k={k}" for k in ks]
    rows = [
        [model.value, fmt_float(gamma)] + [fmt_float(v) for v in pk]
        for model, gamma, pk in records
    ]
    return _write_rows(path, header, rows)


def write_schmidt_csv(path, records):
    """Descending Schmidt probabilities with cumulative sums, long form."""
    header = ["model", "gamma", "i", "p", "cumulative"]
    rows = []
    for model, gamma, spectrum in records:
        for i, (p, c) in enumerate(
            zip(spectrum.probabilities, spectrum.cumulative), start=1
        ):
            rows.append([model.value, fmt_float(gamma), str(i), fmt_float(p), fmt_float(c)])
    return _write_rows(path, header, rows)


def write_sweep_csv(path, points):
    """Metric rows for external plotting, one per (model, gamma) point."""
    header = ["model", "gamma", "entropy_bits", "purity", "negativity", "d_eff", "mi_bits"]
    rows = [
        [
            p.model.value,
            fmt_float(p.gamma),
            fmt_float(p.metrics.entropy_bits),
            fmt_float(p.metrics.purity),
            fmt_float(p.metrics.negativity),
            fmt_float(p.metrics.d_eff),
            fmt_float(p.metrics.mutual_info_bits),
        ]
        for p in points
    ]
    return _write_rows(path, header, rows)


def write_table_files(out_dir, points, lmax):
    """Reference-style metric table: aligned text plus a JSON twin."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    models = []
    gammas = []
    for p in points:
        if p.model not in models:
            models.append(p.model)
        if p.gamma not in gammas:
            gammas.append(p.gamma)
    by_key = {(p.model, p.gamma): p for p in points}

    metric_rows = (
        ("S(bits)", "entropy_bits"),
        ("P", "purity"),
        ("MI(bits)", "mutual_info_bits"),
        ("N", "negativity"),
        ("D_eff", "d_eff"),
    )
    width = 14
    lines = []
    header = f"{'gamma':>10} {'metric':>10}" + "".join(
        f"{m.value:>{width}}" for m in models
    )
    lines.append(header)
    lines.append("-" * len(header))
    for gamma in gammas:
        for label, attr in metric_rows:
            cells = "".join(
                f"{getattr(by_key[(m, gamma)].metrics, attr):>{width}.4f}"
                for m in models
            )
            lines.append(f"{gamma:>10g} {label:>10}" + cells)
        lines.append("")
    txt_path = out_dir / "table.txt"
    txt_path.write_text("\n".join(lines).rstrip() + "\n", encoding="utf-8", newline="\n")

    rows = [
        {
            "model": p.model.value,
            "gamma": p.gamma,
            "entropy_bits": p.metrics.entropy_bits,
            "purity": p.metrics.purity,
            "mi_bits": p.metrics.mutual_info_bits,
            "negativity": p.metrics.negativity,
            "d_eff": p.metrics.d_eff,
        }
        for p in points
    ]
    json_path = write_json(
        out_dir / "table.json",
        {"lmax": lmax, "models": [m.value for m in models], "gammas": gammas, "rows": rows},
    )
    return [txt_path, json_path]


def _ramp(v):
    # Monotone blackbody-style ramp; channel sum rises strictly with v, so
    # color rank order matches value rank order.
    r = np.clip(3.0 * v, 0.0, 1.0)
    g = np.clip(3.0 * v - 1.0, 0.0, 1.0)
    b = np.clip(3.0 * v - 2.0, 0.0, 1.0)
    return np.stack([r, g, b], axis=-1)


def render_heatmap(path, joint, lmax, log_scale=False, upscale=None):
    """Write a PNG heatmap of P(k, m); rows are k ascending top to bottom.

    Values are normalized to the grid maximum; the optional log scale
    compresses 12 decades below the maximum.  Cells are upscaled by an
    integer factor (default targets ~400 px).  Axis and color-map details
    go to a JSON sidecar next to the image.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    joint = np.asarray(joint, dtype=float)
    top = joint.max()
    v = joint / top if top > 0 else joint
    if log_scale:
        floor = 1e-12
        v = 1.0 + np.log10(np.clip(v, floor, 1.0)) / 12.0
    d = joint.shape[0]
    if upscale is None:
        upscale = max(1, int(np.ceil(400 / d)))
    rgb = (_ramp(v) * 255.0).round().astype(np.uint8)
    rgb = np.repeat(np.repeat(rgb, upscale, axis=0), upscale, axis=1)
    Image.fromarray(rgb, mode="RGB").save(path, format="PNG")
    meta = {
        "k_range": [-lmax, lmax],
        "m_range": [-lmax, lmax],
        "rows": "k ascending, top to bottom",
        "columns": "m ascending, left to right",
        "scale": "log10, 12 decades below max" if log_scale else "linear in P/max(P)",
        "colormap": "r=clip(3v), g=clip(3v-1), b=clip(3v-2)",
        "upscale": int(upscale),
    }
    write_json(path.with_suffix(".meta.json"), meta)
    return path


def write_sidecar(out_dir, command, params):
    """Deterministic run-provenance sidecar (no timestamps)."""
    payload = {"tool": "relboost", "version": __version__, "command": command}
    payload.update({"parameters": params})
    return write_json(Path(out_dir) / "provenance.json", payload)
