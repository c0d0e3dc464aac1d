"""Plot emission for sweep output: a self-contained gnuplot script and a
matplotlib rendering of the same log-log view, written next to the CSV."""

from __future__ import annotations

import csv
import io
from pathlib import Path

DEFAULT_REFERENCE_C = 1e3


def _read_header(csv_path: str) -> list:
    with open(csv_path, newline="") as fh:
        header = next(csv.reader(fh))
    return header


def emit_plotscript(csv_path: str, ks=(1, 2, 3, 4), C: float = DEFAULT_REFERENCE_C) -> str:
    """Gnuplot script plotting sigma_min against delta with C*delta^k dashes."""
    header = _read_header(csv_path)
    if "delta" not in header or "sigma_min" not in header:
        raise ValueError(f"{csv_path} lacks delta/sigma_min columns")
    xi = header.index("delta") + 1
    yi = header.index("sigma_min") + 1
    buf = io.StringIO()
    buf.write("set logscale xy\n")
    buf.write("set datafile separator ','\n")
    buf.write("set xlabel 'delta'\n")
    buf.write("set ylabel 'sigma_min'\n")
    buf.write("set key left top\n")
    refs = ", ".join(f"{C:g}*x**{k} dashtype 2 title 'C x^{k}'" for k in ks)
    buf.write(
        f"plot '{csv_path}' using {xi}:{yi} with linespoints title 'sigma_min'"
        + (", " + refs if refs else "") + "\n")
    return buf.getvalue()


def write_plotscript(csv_path: str, out_path: str, ks=(1, 2, 3, 4),
                     C: float = DEFAULT_REFERENCE_C) -> None:
    Path(out_path).write_text(emit_plotscript(csv_path, ks=ks, C=C))


def render_loglog_figure(csv_path: str, png_path: str, ks=(1, 2, 3, 4),
                         C: float = DEFAULT_REFERENCE_C) -> None:
    """Matplotlib log-log rendering of the sweep CSV next to the data."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    deltas, sigmas = [], []
    with open(csv_path, newline="") as fh:
        for row in csv.DictReader(fh):
            if int(row.get("floor_hit", "0")):
                continue
            deltas.append(float(row["delta"]))
            sigmas.append(float(row["sigma_min"]))
    if not deltas:
        raise ValueError(f"{csv_path} has no plottable records")
    fig, ax = plt.subplots(figsize=(5.0, 3.6))
    ax.loglog(deltas, sigmas, "o-", label="sigma_min")
    for k in ks:
        ax.loglog(deltas, [C * d ** k for d in deltas], "--",
                  linewidth=0.9, label=f"C d^{k}")
    ax.set_xlabel("delta")
    ax.set_ylabel("sigma_min")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(png_path, dpi=150)
    plt.close(fig)
