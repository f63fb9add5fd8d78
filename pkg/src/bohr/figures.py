"""Data files and standalone SVG images for the figures.

Two kinds of figure exist.  Root curves plot the left-hand side of one or two
defining equations together with the target level and a marker at the
computed root.  Disk images evaluate catalog maps on concentric circles
``|z| = r_k`` and draw the image curves.

Output is a deterministic byte stream: reals are written with ``repr`` (the
shortest string that round-trips), SVG coordinates with a fixed format, and no
timestamps.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import problems as P
from . import report
from .catalog import ExtremalMap, MapKind, eval_map
from .errors import DomainError, UnknownProblemError
from .series import DEFAULT_ORDER
from .solver import DEFAULT_TOL

ROOT_FIGURES = {
    # figure id: (problem ids, default r_max)
    "roots-2.13": (("thm2_7",), 0.2),
    "roots-2.14-2.15": (("thm2_8_H", "thm2_8_G"), 0.5),
    "roots-2.20-2.21": (("thm2_12_H", "thm2_12_G"), 0.5),
    "roots-2.16-2.17": (("thm2_9_H", "thm2_9_G"), 0.4),
    "roots-2.19": (("thm2_11",), 0.15),
}

DISK_FIGURES = {
    "disk-koebe-f0": ((("koebe", ExtremalMap(MapKind.KOEBE)),
                       ("f0", ExtremalMap(MapKind.F0))), 0.7),
    "disk-h0-g0": ((("h0", ExtremalMap(MapKind.H0_FACTOR)),
                    ("g0", ExtremalMap(MapKind.G0_FACTOR))), 0.7),
    "disk-wedge": ((("F_1_1", ExtremalMap(MapKind.WEDGE, alpha=1.0, t=1.0)),
                    ("F_1.5_20", ExtremalMap(MapKind.WEDGE, alpha=1.5, t=20.0)),
                    ("F_2_3", ExtremalMap(MapKind.WEDGE, alpha=2.0, t=3.0))), 0.95),
}

FIGURE_IDS = tuple(ROOT_FIGURES) + tuple(DISK_FIGURES)
FORMATS = ("csv", "svg")


@dataclass(frozen=True)
class FigureSpec:
    figure_id: str
    samples: int = 400
    r_max: float | None = None
    format: str = "csv"
    log_modulus: bool = False

    def __post_init__(self):
        if self.figure_id not in FIGURE_IDS:
            raise UnknownProblemError(f"unknown figure id {self.figure_id!r}")
        if self.samples < 16:
            raise DomainError(f"samples must be at least 16, got {self.samples}")
        if self.r_max is not None and not 0.0 < self.r_max < 1.0:
            raise DomainError(f"r_max must lie in (0, 1), got {self.r_max!r}")
        if self.format not in FORMATS:
            raise DomainError(f"format must be one of {FORMATS}, got {self.format!r}")

    @property
    def is_root_curve(self) -> bool:
        return self.figure_id in ROOT_FIGURES

    @property
    def resolved_r_max(self) -> float:
        if self.r_max is not None:
            return self.r_max
        table = ROOT_FIGURES if self.is_root_curve else DISK_FIGURES
        return table[self.figure_id][1]


@dataclass(frozen=True)
class DiskGrid:
    radii: np.ndarray
    angles: np.ndarray

    def __post_init__(self):
        radii = np.asarray(self.radii, dtype=float)
        angles = np.asarray(self.angles, dtype=float)
        if radii.size == 0 or np.any(radii <= 0) or np.any(radii >= 1):
            raise DomainError("radii must lie in (0, 1)")
        if np.any(np.diff(radii) <= 0):
            raise DomainError("radii must be strictly increasing")
        if angles.size == 0 or angles[0] < 0 or angles[-1] >= 2 * math.pi:
            raise DomainError("angles must lie in [0, 2 pi)")
        step = 2 * math.pi / angles.size
        if not np.allclose(np.diff(angles), step, rtol=0, atol=1e-12):
            raise DomainError("angles must be uniform over the full circle")
        object.__setattr__(self, "radii", radii)
        object.__setattr__(self, "angles", angles)

    @classmethod
    def uniform(cls, r_max: float, n_radii: int = 8, n_angles: int = 256) -> "DiskGrid":
        radii = r_max * np.arange(1, n_radii + 1) / n_radii
        return cls(radii, 2 * math.pi * np.arange(n_angles) / n_angles)


@dataclass
class FigureResult:
    figure_id: str
    path: Path
    format: str
    markers: dict = field(default_factory=dict)
    rows: int = 0


def _fmt(x: float) -> str:
    return repr(float(x))


def _write(path, text: str):
    path = Path(path)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
    return path


# ---------------------------------------------------------------------------
# root curves


def root_curve_data(figure_id: str, samples: int = 400, r_max: float | None = None,
                    tol: float = DEFAULT_TOL):
    """Grid ``r_k = r_max k/samples``, the lhs curves, targets and solver roots."""
    spec = FigureSpec(figure_id, samples, r_max)
    if not spec.is_root_curve:
        raise UnknownProblemError(f"{figure_id!r} is not a root-curve figure")
    ids = ROOT_FIGURES[figure_id][0]
    r = spec.resolved_r_max * np.arange(1, samples + 1) / samples
    curves = [P.defining_lhs(pid, r) for pid in ids]
    targets = [P.target(pid) for pid in ids]
    roots = {pid: P.solve(pid, tol=tol).computed_root for pid in ids}
    return r, ids, curves, targets, roots


def _root_csv(r, ids, curves, targets) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    n = len(ids)
    w.writerow(["r"] + [f"lhs_{i + 1}" for i in range(n)] + [f"target_{i + 1}" for i in range(n)])
    for k in range(r.size):
        w.writerow([_fmt(r[k])] + [_fmt(c[k]) for c in curves] + [_fmt(t) for t in targets])
    return buf.getvalue()


_COLORS = ("#1f77b4", "#d62728", "#2ca02c")


def _root_svg(figure_id, r, ids, curves, targets, roots) -> str:
    W, H, ml, mr, mt, mb = 640, 420, 70, 20, 30, 50
    pw, ph = W - ml - mr, H - mt - mb
    x_max = float(r[-1])
    y_max = 2.5 * max(targets)

    def X(x):
        return ml + pw * x / x_max

    def Y(y):
        return mt + ph * (1 - min(y, 1.05 * y_max) / y_max)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{W}" height="{H}" '
        f'viewBox="0 0 {W} {H}" data-figure="{figure_id}">',
        f'<defs><clipPath id="plot"><rect x="{ml}" y="{mt}" width="{pw}" height="{ph}"/></clipPath></defs>',
        f'<rect x="{ml}" y="{mt}" width="{pw}" height="{ph}" fill="none" stroke="black"/>',
    ]
    for i in range(6):
        xv, yv = x_max * i / 5, y_max * i / 5
        out.append(f'<line x1="{X(xv):.3f}" y1="{mt + ph}" x2="{X(xv):.3f}" y2="{mt + ph + 5}" stroke="black"/>')
        out.append(f'<text x="{X(xv):.3f}" y="{mt + ph + 20}" font-size="12" text-anchor="middle">{xv:.3g}</text>')
        out.append(f'<line x1="{ml - 5}" y1="{Y(yv):.3f}" x2="{ml}" y2="{Y(yv):.3f}" stroke="black"/>')
        out.append(f'<text x="{ml - 8}" y="{Y(yv) + 4:.3f}" font-size="12" text-anchor="end">{yv:.3g}</text>')
    out.append(f'<text x="{ml + pw / 2}" y="{H - 10}" font-size="13" text-anchor="middle">r</text>')
    for i, (pid, c, t) in enumerate(zip(ids, curves, targets)):
        col = _COLORS[i % len(_COLORS)]
        pts = " ".join(f"{X(x):.3f},{Y(y):.3f}" for x, y in zip(r, c) if math.isfinite(y))
        out.append(f'<polyline clip-path="url(#plot)" fill="none" stroke="{col}" stroke-width="1.5" '
                   f'data-problem="{pid}" points="{pts}"/>')
        out.append(f'<line clip-path="url(#plot)" x1="{ml}" y1="{Y(t):.3f}" x2="{ml + pw}" y2="{Y(t):.3f}" '
                   f'stroke="{col}" stroke-dasharray="4 3" data-target="{_fmt(t)}"/>')
        root = roots[pid]
        out.append(f'<circle cx="{X(root):.3f}" cy="{Y(t):.3f}" r="4" fill="{col}" '
                   f'data-problem="{pid}" data-root="{_fmt(root)}"/>')
        eq = P.get_problem(pid).equation
        out.append(f'<text x="{ml + 10}" y="{mt + 18 + 16 * i}" font-size="12" fill="{col}">'
                   f'{pid}: {eq}, root {root:.6f}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def emit_root_curve(figure_id: str, output_path, samples: int = 400,
                    format: str = "csv", r_max: float | None = None) -> FigureResult:
    """Write a root-locating curve figure; markers are the solver roots."""
    spec = FigureSpec(figure_id, samples, r_max, format)
    if not spec.is_root_curve:
        raise UnknownProblemError(f"{figure_id!r} is not a root-curve figure")
    r, ids, curves, targets, roots = root_curve_data(figure_id, samples, r_max)
    if format == "csv":
        text = _root_csv(r, ids, curves, targets)
    else:
        text = _root_svg(figure_id, r, ids, curves, targets, roots)
    path = _write(output_path, text)
    return FigureResult(figure_id, path, format, dict(roots), int(r.size))


# ---------------------------------------------------------------------------
# disk images


def disk_image_data(figure_id: str, grid: DiskGrid):
    """``[(name, map, values)]`` with ``values[k, j] = f(r_k e^{i theta_j})``."""
    if figure_id not in DISK_FIGURES:
        raise UnknownProblemError(f"{figure_id!r} is not a disk-image figure")
    z = grid.radii[:, None] * np.exp(1j * grid.angles[None, :])
    return [(name, m, np.asarray(eval_map(m, z))) for name, m in DISK_FIGURES[figure_id][0]]


def _disk_csv(grid, data) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["map", "r", "theta", "re", "im"])
    for name, m, vals in data:
        w0 = complex(eval_map(m, 0.0))
        w.writerow([name, _fmt(0.0), _fmt(0.0), _fmt(w0.real), _fmt(w0.imag)])
        for k, rk in enumerate(grid.radii):
            for j, th in enumerate(grid.angles):
                v = vals[k, j]
                w.writerow([name, _fmt(rk), _fmt(th), _fmt(v.real), _fmt(v.imag)])
    return buf.getvalue()


def _log_modulus(w):
    mod = np.abs(w)
    with np.errstate(invalid="ignore", divide="ignore"):
        out = np.where(mod > 0, np.log1p(mod) * w / mod, 0)
    return out


def _disk_svg(figure_id, grid, data, log_modulus) -> str:
    panel, gap = 300, 20
    n = len(data)
    W, H = n * panel + (n + 1) * gap, panel + 2 * gap + 20
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{W}" height="{H}" '
        f'viewBox="0 0 {W} {H}" data-figure="{figure_id}">',
    ]
    for i, (name, m, vals) in enumerate(data):
        w0 = complex(eval_map(m, 0.0))
        pts = np.concatenate([vals.ravel(), [w0]])
        if log_modulus:
            vals, pts, w0 = _log_modulus(vals), _log_modulus(pts), complex(_log_modulus(np.array([w0]))[0])
        fin = pts[np.isfinite(pts)]
        x0, x1 = float(fin.real.min()), float(fin.real.max())
        y0, y1 = float(fin.imag.min()), float(fin.imag.max())
        span = max(x1 - x0, y1 - y0, 1e-12)
        pad = 0.05 * span
        vb = f"{x0 - pad:.6g} {-(y1 + pad):.6g} {span + 2 * pad:.6g} {span + 2 * pad:.6g}"
        xo = gap + i * (panel + gap)
        out.append(f'<text x="{xo + panel / 2}" y="{gap}" font-size="13" text-anchor="middle">{name}</text>')
        out.append(f'<svg x="{xo}" y="{gap + 10}" width="{panel}" height="{panel}" viewBox="{vb}" '
                   f'preserveAspectRatio="xMidYMid meet" data-map="{name}">')
        out.append(f'<rect x="{x0 - pad:.6g}" y="{-(y1 + pad):.6g}" width="{span + 2 * pad:.6g}" '
                   f'height="{span + 2 * pad:.6g}" fill="none" stroke="#999" vector-effect="non-scaling-stroke"/>')
        for k, rk in enumerate(grid.radii):
            ring = vals[k]
            ring = ring[np.isfinite(ring)]
            p = " ".join(f"{v.real:.6g},{-v.imag:.6g}" for v in ring)
            out.append(f'<polygon fill="none" stroke="#1f77b4" stroke-width="1" '
                       f'vector-effect="non-scaling-stroke" data-r="{_fmt(rk)}" points="{p}"/>')
        out.append(f'<circle cx="{w0.real:.6g}" cy="{-w0.imag:.6g}" r="{0.01 * span:.6g}" fill="#d62728" '
                   f'data-center="{_fmt(w0.real)},{_fmt(w0.imag)}"/>')
        out.append("</svg>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def emit_disk_image(figure_id: str, output_path, grid: DiskGrid | None = None,
                    format: str = "csv", log_modulus: bool = False,
                    samples: int = 256) -> FigureResult:
    """Images of the circles ``|z| = r_k`` under the maps of ``figure_id``.

    ``samples`` sets the number of angles when ``grid`` is not given.
    """
    spec = FigureSpec(figure_id, samples, None, format, log_modulus)
    if spec.is_root_curve:
        raise UnknownProblemError(f"{figure_id!r} is not a disk-image figure")
    if grid is None:
        grid = DiskGrid.uniform(spec.resolved_r_max, n_angles=samples)
    data = disk_image_data(figure_id, grid)
    if format == "csv":
        text = _disk_csv(grid, data)
    else:
        text = _disk_svg(figure_id, grid, data, log_modulus)
    path = _write(output_path, text)
    centers = {name: complex(eval_map(m, 0.0)) for name, m, _ in data}
    rows = len(data) * (1 + grid.radii.size * grid.angles.size)
    return FigureResult(figure_id, path, format, centers, rows)


def emit_figure(figure_id: str, output_path, format: str = "csv",
                samples: int | None = None, **kw) -> FigureResult:
    if figure_id in ROOT_FIGURES:
        return emit_root_curve(figure_id, output_path, samples or 400, format, **kw)
    if figure_id in DISK_FIGURES:
        return emit_disk_image(figure_id, output_path, format=format,
                               samples=samples or 256, **kw)
    raise UnknownProblemError(f"unknown figure id {figure_id!r}")


# ---------------------------------------------------------------------------
# summary table


def summary_rows(order: int = DEFAULT_ORDER, tol: float = DEFAULT_TOL) -> list:
    """One record per catalog instance with root, closed form, printed value and sharpness verdict."""
    from .verify import check_sharpness

    rows = []
    for pid, params in P.INSTANCES:
        res = P.solve(pid, tol=tol, **params)
        rep = check_sharpness(pid, order=order, solver_tol=tol, **params)
        rows.append(report.record(
            id=res.label, problem=pid, params=dict(res.params),
            root=res.computed_root, closed_form=res.closed_form,
            paper_value=res.paper_value, deviation=res.deviation,
            passed=rep.passed, worst_margin=rep.worst_margin, notes=rep.notes,
        ))
    return rows


_TABLE_COLS = ("id", "root", "closed_form", "paper_value", "deviation", "passed",
               "worst_margin", "notes")


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return _fmt(v)
    if isinstance(v, list):
        return "; ".join(v)
    return str(v)


def emit_summary_table(output_path, format: str = "json", order: int = DEFAULT_ORDER,
                       tol: float = DEFAULT_TOL) -> Path:
    if format not in ("json", "md", "csv"):
        raise DomainError(f"table format must be json, md or csv, got {format!r}")
    rows = summary_rows(order, tol)
    if format == "json":
        text = report.dumps(rows, kind="summary-table")
    elif format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(_TABLE_COLS)
        for row in rows:
            w.writerow([_cell(row[c]) for c in _TABLE_COLS])
        text = buf.getvalue()
    else:
        lines = ["| " + " | ".join(_TABLE_COLS) + " |",
                 "|" + "---|" * len(_TABLE_COLS)]
        for row in rows:
            lines.append("| " + " | ".join(_cell(row[c]).replace("|", "\\|")
                                           for c in _TABLE_COLS) + " |")
        text = "\n".join(lines) + "\n"
    return _write(output_path, text)
