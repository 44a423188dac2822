"""``enscoh`` command line: measure, sweep, discriminate, reproduce."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .coherence import CoherenceMeasure
from .discrimination import success_probability
from .ensemble_coherence import OptimizerConfig, mec
from .ensembles import (
    NAMED_ENSEMBLES,
    NotTwoBlockError,
    ProductEnsemble,
    is_two_block,
    named_ensemble,
    relative_local_coherence,
)
from .reproduce import format_table, reproduce
from .sweep import Family, SweepSpec, run_sweep, write_csv, write_svg


class CliError(Exception):
    pass


def _fmt(x: float) -> str:
    return f"{x:#.6g}"


def _fmt_complex(z: complex) -> str:
    z = complex(z.real if abs(z.real) >= 5e-7 else 0.0, z.imag)
    if abs(z.imag) < 5e-7:
        return _fmt(z.real)
    return f"{_fmt(z.real)}{'+' if z.imag >= 0 else '-'}{_fmt(abs(z.imag))}j"


def load_ensemble(ref: str) -> ProductEnsemble:
    """Named ensemble or path to an ensemble JSON file."""
    if ref.lower() in NAMED_ENSEMBLES:
        return named_ensemble(ref)
    path = Path(ref)
    if not path.exists():
        raise CliError(f"{ref!r} is neither a known ensemble ({', '.join(sorted(NAMED_ENSEMBLES))}) nor a file")
    try:
        return ProductEnsemble.load(path)
    except json.JSONDecodeError as exc:
        raise CliError(f"{path}: invalid JSON ({exc})") from exc
    except ValueError as exc:
        raise CliError(f"{path}: {exc}") from exc


def _config(args) -> OptimizerConfig:
    kw = {}
    if args.restarts is not None:
        kw["restarts"] = args.restarts
    if args.seed is not None:
        kw["seed"] = args.seed
    try:
        return OptimizerConfig(**kw)
    except ValueError as exc:
        raise CliError(str(exc)) from exc


def _write_json(path: str | None, payload: dict) -> None:
    if path:
        with open(path, "w") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")


def cmd_measure(args, out=None) -> int:
    out = out or sys.stdout
    e = load_ensemble(args.ensemble)
    report = mec(e, args.measure, _config(args))
    rows = [
        ("tau", report.tau),
        ("MEC", report.mec),
        ("MEC^n", report.mec_normalized),
        ("CD", report.deficit),
    ]
    if is_two_block(e):
        rows.append(("C_r", relative_local_coherence(e)))
    print(f"ensemble {e.label or args.ensemble} ({e.d1}x{e.d2}, {len(e)} states), measure {report.measure.value}", file=out)
    for name, value in rows:
        print(f"{name:<6} {_fmt(value)}", file=out)
    _write_json(
        args.json,
        {"ensemble": e.label or args.ensemble, "measure": report.measure.value, **{k: float(v) for k, v in rows}},
    )
    return 0


def cmd_discriminate(args, out=None) -> int:
    out = out or sys.stdout
    e = load_ensemble(args.ensemble)
    try:
        res = success_probability(e, _config(args))
    except NotTwoBlockError as exc:
        raise CliError(f"discrimination needs a two-block 2 x d ensemble: {exc}") from exc
    d = res.config.d
    print(f"configuration  {list(res.config.pairing)}", file=out)
    print("projector directions (columns)", file=out)
    for row in res.projectors.directions:
        print("  " + "  ".join(f"{_fmt_complex(z):>22}" for z in row), file=out)
    print(f"p_succ_worst   {_fmt(res.p_succ_worst)}", file=out)
    print(f"p_succ_avg     {_fmt(res.p_succ_avg)}", file=out)
    print("projector  reduced set  |<f|eta1>|^2  |<f|eta2>|^2", file=out)
    for k in range(d):
        i, j = res.reduced_sets[k]
        o1, o2 = res.overlaps[:, k] ** 2
        print(f"{k:>9}  S_{res.reduced_set_label(k):<3} ({i},{j})  {_fmt(o1):>12}  {_fmt(o2):>12}", file=out)
    _write_json(
        args.json,
        {
            "ensemble": e.label or args.ensemble,
            "configuration": list(res.config.pairing),
            "p_succ_worst": res.p_succ_worst,
            "p_succ_avg": res.p_succ_avg,
            "directions": [[[z.real, z.imag] for z in col] for col in res.projectors.directions.T],
            "reduced_sets": {str(k): list(v) for k, v in res.reduced_sets.items()},
        },
    )
    return 0


_FAMILY_ALIASES = {
    "arb2x2real": Family.ARB2X2_REAL,
    "arb2x2complex": Family.ARB2X2_COMPLEX,
    "arb2x3real": Family.ARB2X3_REAL,
}


def parse_family(text: str) -> Family:
    key = text.lower().replace("-", "").replace("_", "")
    if key not in _FAMILY_ALIASES:
        raise argparse.ArgumentTypeError(f"unknown family {text!r}; choose from {', '.join(f.value for f in Family)}")
    return _FAMILY_ALIASES[key]


def cmd_sweep(args, out=None) -> int:
    out = out or sys.stdout
    try:
        spec = SweepSpec(args.family, args.samples, args.seed if args.seed is not None else 0, args.criterion)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    cfg = _config(argparse.Namespace(restarts=args.restarts, seed=None))
    rows = run_sweep(spec, cfg)
    write_csv(rows, args.out)
    print(f"wrote {len(rows)} rows to {args.out}", file=out)
    if args.svg:
        try:
            write_svg(rows, args.svg, title=f"{spec.family.value}, {spec.samples} samples")
            print(f"wrote {args.svg}", file=out)
        except OSError as exc:
            print(f"warning: could not write SVG: {exc}", file=sys.stderr)
    return 0


def cmd_reproduce(args, out=None) -> int:
    out = out or sys.stdout
    rows = reproduce(_config(args))
    print(format_table(rows), file=out)
    failed = sum(not r.passed for r in rows)
    print(f"{len(rows) - failed}/{len(rows)} within tolerance", file=out)
    return 0 if failed == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="enscoh", description="Coherence measures and one-way discrimination of product ensembles.")
    sub = parser.add_subparsers(dest="command", required=True)

    def optimizer_flags(p):
        p.add_argument("--restarts", type=int, help="optimizer restarts (default depends on dimension)")
        p.add_argument("--seed", type=int, help="random seed")

    p = sub.add_parser("measure", help="tau, MEC, normalized MEC, CD and C_r of an ensemble")
    p.add_argument("ensemble", help=f"one of {', '.join(NAMED_ENSEMBLES)} or a JSON file")
    p.add_argument("--measure", type=CoherenceMeasure.parse, default=CoherenceMeasure.L1, help="l1 or rel")
    p.add_argument("--json", help="also write the report to this file")
    optimizer_flags(p)
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("discriminate", help="one-way discrimination with Bob measuring first")
    p.add_argument("ensemble")
    p.add_argument("--json")
    optimizer_flags(p)
    p.set_defaults(func=cmd_discriminate)

    p = sub.add_parser("sweep", help="random sweep of a two-block family to CSV")
    p.add_argument("family", type=parse_family, help=", ".join(f.value for f in Family))
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--out", required=True, help="CSV path")
    p.add_argument("--svg", help="optional scatter plot path")
    p.add_argument("--criterion", choices=("worst", "avg"), default="worst")
    optimizer_flags(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("reproduce", help="recompute the published reference values")
    optimizer_flags(p)
    p.set_defaults(func=cmd_reproduce)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc.strerror or exc}: {exc.filename or ''}".rstrip(": "), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
