"""Command-line interface.

    bohr radii list
    bohr radii solve ID [--beta B] [--alpha A] [--wedge-beta W] [--a A] [--precision P]
    bohr verify ID|all [--grid-points K] [--order N] [--seed S] [--count C]
    bohr figure FIGURE-ID --out PATH [--format csv|svg] [--samples K]
    bohr table --out PATH [--format json|md|csv]

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 numeric or solver error, 4 I/O error.
"""

from __future__ import annotations

import argparse
import sys

from . import problems as P
from . import report
from .errors import BracketError, DomainError, NumericError, UnknownProblemError
from .figures import FIGURE_IDS, emit_figure, emit_summary_table
from .series import DEFAULT_ORDER
from .solver import DEFAULT_TOL
from .verify import run_all, verify_problem

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_NUMERIC, EXIT_IO = 0, 1, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(f"{self.prog}: error: {message}")


class _UsageError(Exception):
    pass


def _positive_int(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _positive_float(text):
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text}")
    return v


def _add_params(p):
    p.add_argument("--beta", type=float, help="beta for subord_beta")
    p.add_argument("--alpha", type=float, help="alpha for wedge and wedge_improved")
    p.add_argument("--wedge-beta", type=float, help="beta for wedge_improved")
    p.add_argument("--a", type=float, help="a for classical_phi")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="bohr", description="Bohr radii: solve, verify, and plot.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    radii = sub.add_parser("radii", help="list or solve catalog problems")
    rsub = radii.add_subparsers(dest="radii_command", required=True, parser_class=_Parser)
    rl = rsub.add_parser("list", help="print problem ids")
    rl.add_argument("--format", choices=("text", "json"), default="text")
    rs = rsub.add_parser("solve", help="compute the radius of one problem")
    rs.add_argument("id")
    _add_params(rs)
    rs.add_argument("--precision", type=_positive_float, default=DEFAULT_TOL)
    rs.add_argument("--format", choices=("text", "json"), default="text")

    v = sub.add_parser("verify", help="run the verifier checks")
    v.add_argument("id", help="problem id or 'all'")
    _add_params(v)
    v.add_argument("--grid-points", type=_positive_int, default=1000)
    v.add_argument("--order", type=_positive_int, default=DEFAULT_ORDER)
    v.add_argument("--seed", type=int, default=1)
    v.add_argument("--count", type=_positive_int, default=200)
    v.add_argument("--precision", type=_positive_float, default=DEFAULT_TOL)
    v.add_argument("--format", choices=("text", "json"), default="text")

    f = sub.add_parser("figure", help="emit a figure as CSV or SVG")
    f.add_argument("figure_id", choices=FIGURE_IDS)
    f.add_argument("--out", required=True)
    f.add_argument("--format", choices=("csv", "svg"), default="csv")
    f.add_argument("--samples", type=_positive_int)
    f.add_argument("--log-modulus", action="store_true",
                   help="plot log(1+|w|) e^{i arg w} for disk images")

    t = sub.add_parser("table", help="write the summary table")
    t.add_argument("--out", required=True)
    t.add_argument("--format", choices=("json", "md", "csv"), default="json")
    return ap


_FLAG_PARAM = {
    "subord_beta": {"beta": "beta"},
    "wedge": {"alpha": "alpha"},
    "wedge_improved": {"alpha": "alpha", "wedge_beta": "beta"},
    "classical_phi": {"a": "a"},
}


def _instances(args, problem_id) -> list:
    """Parameter sets selected by the flags; the catalog instances when none are given."""
    prob = P.get_problem(problem_id)
    given = {k: getattr(args, k) for k in ("beta", "alpha", "wedge_beta", "a")
             if getattr(args, k) is not None}
    allowed = _FLAG_PARAM.get(problem_id, {})
    bad = sorted(set(given) - set(allowed))
    if bad:
        flags = ", ".join("--" + b.replace("_", "-") for b in bad)
        raise DomainError(f"{problem_id} does not take {flags}")
    if not given:
        return P.default_instances(problem_id) if prob.params else [{}]
    params = {allowed[k]: v for k, v in given.items()}
    prob.check_params(params)
    return [params]


def _fmt(x):
    return "-" if x is None else repr(x)


def _cmd_radii(args, out) -> int:
    if args.radii_command == "list":
        ids = P.list_problems()
        if args.format == "json":
            out.write(report.dumps([{"id": i, "equation": P.get_problem(i).equation,
                                     "params": list(P.get_problem(i).params)} for i in ids]))
        else:
            out.write("\n".join(ids) + "\n")
        return EXIT_OK
    instances = _instances(args, args.id)
    results = [P.solve(args.id, tol=args.precision, **kw) for kw in instances]
    if args.format == "json":
        recs = [report.record(id=r.label, problem=r.id, params=r.params,
                              root=r.computed_root, closed_form=r.closed_form,
                              paper_value=r.paper_value, deviation=r.deviation,
                              bracket_width=r.bracket_width) for r in results]
        out.write(report.dumps(recs))
    else:
        for r in results:
            out.write(f"id: {r.label}\nroot: {r.computed_root!r}\n"
                      f"closed_form: {_fmt(r.closed_form)}\npaper_value: {_fmt(r.paper_value)}\n"
                      f"deviation: {_fmt(r.deviation)}\n")
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    if args.id == "all":
        if any(getattr(args, k) is not None for k in ("beta", "alpha", "wedge_beta", "a")):
            raise DomainError("parameter flags need a single problem id")
        reports = run_all(args.grid_points, args.order, args.seed, args.count, args.precision)
    else:
        reports = []
        for kw in _instances(args, args.id):
            reports.extend(verify_problem(args.id, kw, args.grid_points, args.order,
                                          args.seed, args.count, args.precision))
    ok = all(r.passed for r in reports)
    if args.format == "json":
        recs = [report.record(id=r.check_id, problem=r.problem, root=r.root,
                              closed_form=r.closed_form, paper_value=r.paper_value,
                              deviation=r.deviation, passed=r.passed,
                              worst_margin=r.worst_margin, notes=r.notes,
                              grid_size=r.grid_size, tolerance=r.tolerance)
                for r in reports]
        out.write(report.dumps(recs, passed=ok))
    else:
        for r in reports:
            out.write(f"{'PASS' if r.passed else 'FAIL'} {r.check_id} "
                      f"worst_margin={r.worst_margin:.3e}\n")
            for note in r.notes:
                if note.startswith("printed value"):
                    out.write(f"     note: {note}\n")
        out.write(f"{sum(r.passed for r in reports)}/{len(reports)} checks passed\n")
    return EXIT_OK if ok else EXIT_FAIL


def _cmd_figure(args, out) -> int:
    kw = {"log_modulus": True} if args.log_modulus else {}
    if args.log_modulus and not args.figure_id.startswith("disk-"):
        raise DomainError("--log-modulus applies to disk images only")
    res = emit_figure(args.figure_id, args.out, args.format, args.samples, **kw)
    out.write(f"wrote {res.path} ({res.format}, {res.rows} data rows)\n")
    return EXIT_OK


def _cmd_table(args, out) -> int:
    path = emit_summary_table(args.out, args.format)
    out.write(f"wrote {path}\n")
    return EXIT_OK


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except _UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    handler = {"radii": _cmd_radii, "verify": _cmd_verify,
               "figure": _cmd_figure, "table": _cmd_table}[args.command]
    try:
        return handler(args, out)
    except (UnknownProblemError, DomainError) as exc:
        err.write(f"bohr: error: {exc}\n")
        return EXIT_USAGE
    except (BracketError, NumericError) as exc:
        err.write(f"bohr: numeric error: {exc}\n")
        return EXIT_NUMERIC
    except OSError as exc:
        err.write(f"bohr: I/O error: {exc}\n")
        return EXIT_IO


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
