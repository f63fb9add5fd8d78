"""
Figures and the summary table
=============================

Writes every figure as CSV and SVG, plus the summary table, into a
directory (default ``figures-out``; pass another path as the first argument).
The same files come from ``bohr figure ...`` and ``bohr table ...``.
"""

# %%
import sys
from pathlib import Path

from bohr.figures import FIGURE_IDS, emit_figure, emit_summary_table

out = Path(sys.argv[1] if len(sys.argv) > 1 else "figures-out")
out.mkdir(parents=True, exist_ok=True)

# %%
for fid in FIGURE_IDS:
    for fmt in ("csv", "svg"):
        res = emit_figure(fid, out / f"{fid}.{fmt}", fmt)
    marks = ", ".join(f"{k}={v:.6g}" for k, v in res.markers.items())
    print(f"{fid:<17} {res.rows:>6} rows   {marks}")

# %%
# Log-scaled moduli make the h0/g0 images easier to read.
emit_figure("disk-h0-g0", out / "disk-h0-g0-log.svg", "svg", log_modulus=True)

# %%
for fmt in ("md", "json", "csv"):
    print("wrote", emit_summary_table(out / f"summary.{fmt}", fmt))
