"""Command-line front end: claim verification and data tables.

    isocs verify [C1 C2 ...] [--gamma 2] [--beta 0.5] [--trunc 64] [--tol 1e-8]
    isocs table {weights,pnd,husimi} [--gammas 1.5,2,2.5] [--family gkcs] ...

Exit status is 0 whenever the run completes, whatever the verdicts are;
2 for invalid arguments or unknown claim ids, 1 for I/O failures.
"""

import argparse
import csv
import io
import json
import sys

import numpy as np

from .claims import RunConfig, run_claims
from .errors import IsocsError
from .fock import FockSpace
from .measures import RadialMeasure
from .states import FAMILIES, bgcs_label, gkcs_label, make_state, pnd_vector, support
from .thermal import ThermalParams, husimi_radial

_WEIGHT_FORM = {"bgcs_even": "paper_meijer_even", "bgcs_odd": "paper_meijer_odd", "gkcs": "paper_meijer_gk"}


def _fmt(v):
    return format(float(v), ".17g")


def _gamma_list(text):
    try:
        vals = [float(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot parse gamma list {text!r}")
    if not vals:
        raise argparse.ArgumentTypeError("empty gamma list")
    return vals


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--gamma", type=float, default=2.0, help="Bargmann index (default 2)")
    common.add_argument("--beta", type=float, default=0.5, help="inverse temperature (default 0.5)")
    common.add_argument("--trunc", type=int, default=64, help="Fock truncation N, at least 8 (default 64)")
    common.add_argument("--tol", type=float, default=1e-8, help="CONFIRMED threshold (default 1e-8)")
    common.add_argument("--out", default=None, help="output file (default stdout)")
    common.add_argument("--format", choices=("json", "csv"), default=None)

    parser = argparse.ArgumentParser(prog="isocs", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="run claims and write a verdict report")
    v.add_argument("ids", nargs="*", help="claim ids (default: all)")
    v.add_argument("--workers", type=int, default=1, help="threads used to run claims")

    t = sub.add_parser("table", parents=[common], help="write a CSV data table")
    t.add_argument("kind", choices=("weights", "pnd", "husimi"))
    t.add_argument("--gammas", type=_gamma_list, default=None, help="comma-separated gammas (default: --gamma)")
    t.add_argument("--grid-min", type=float, default=0.1)
    t.add_argument("--grid-max", type=float, default=6.0)
    t.add_argument("--grid-points", type=int, default=60)
    t.add_argument("--family", choices=FAMILIES, default="gkcs")
    t.add_argument("--label", type=float, default=4.0, help="|z| (BGCS) or J (GKCS) for the pnd table")
    return parser


def _config(args):
    fmt = args.format or "json"
    return RunConfig(gamma=args.gamma, beta=args.beta, trunc=args.trunc, tol=args.tol, out_path=args.out,
                     format=fmt, workers=getattr(args, "workers", 1))


def render_report(reports, fmt="json"):
    if fmt == "json":
        return json.dumps([r.as_dict() for r in reports], indent=2) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["id", "verdict", "max_residual", "notes"])
    for r in reports:
        w.writerow([r.id, r.verdict, _fmt(r.max_residual), r.notes])
    return buf.getvalue()


def _grid(args):
    if not args.grid_min < args.grid_max:
        raise ValueError("--grid-min must be below --grid-max")
    if args.grid_points < 2:
        raise ValueError("--grid-points must be at least 2")
    if args.grid_min <= 0:
        raise ValueError("the radial grid must be positive")
    return np.linspace(args.grid_min, args.grid_max, args.grid_points)


def weights_table(family, gammas, grid):
    """Printed weight against x = |z| (evaluated at |z|^2), one column per gamma."""
    cols = [RadialMeasure(_WEIGHT_FORM[family], g).weight(grid ** 2) for g in gammas]
    return ["x"] + [f"gamma={g:g}" for g in gammas], np.column_stack([grid] + cols)


def pnd_table(family, gammas, label, trunc):
    """P_n of the canonical state at |z| = label (BGCS) or J = label (GKCS)."""
    cols = []
    for g in gammas:
        space = FockSpace(g, trunc)
        lab = gkcs_label(label, 0.0) if family == "gkcs" else bgcs_label(label, family[5:])
        cols.append(pnd_vector(make_state(lab, space))[support(family, trunc)])
    n = support(family, trunc).astype(float)
    return ["n"] + [f"gamma={g:g}" for g in gammas], np.column_stack([n] + cols)


def husimi_table(family, gammas, beta, grid):
    """Q against x = |z| (BGCS) or x = J (GKCS)."""
    radial = grid if family == "gkcs" else grid ** 2
    cols = [husimi_radial(family, ThermalParams(beta, g), radial) for g in gammas]
    return ["x"] + [f"gamma={g:g}" for g in gammas], np.column_stack([grid] + cols)


def render_table(header, rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_fmt(v) for v in row])
    return buf.getvalue()


def _emit(text, path):
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_verify(args):
    cfg = _config(args)
    reports = run_claims(args.ids or None, cfg)
    _emit(render_report(reports, cfg.format), cfg.out_path)
    return 0


def cmd_table(args):
    cfg = _config(args)
    if args.format == "json":
        raise ValueError("tables are written as CSV only")
    gammas = args.gammas or [cfg.gamma]
    if args.kind == "weights":
        header, rows = weights_table(args.family, gammas, _grid(args))
    elif args.kind == "pnd":
        header, rows = pnd_table(args.family, gammas, args.label, cfg.trunc)
    else:
        header, rows = husimi_table(args.family, gammas, cfg.beta, _grid(args))
    _emit(render_table(header, rows), cfg.out_path)
    return 0


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            return cmd_verify(args)
        return cmd_table(args)
    except (ValueError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"isocs: error: {msg}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"isocs: I/O error: {exc}", file=sys.stderr)
        return 1
    except IsocsError as exc:
        print(f"isocs: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
