"""Command-line front end: ``count``, ``enumerate``, ``verify``, ``scan`` and ``constants``.

Exit codes: 0 success, 1 a requested check failed, 2 usage error, 3 a
parameter failed validation.  Integers in JSON and CSV output are written
as decimal strings so that large counts survive any reader.
"""
from __future__ import annotations

import argparse
import csv
import inspect
import io
import json
import sys
from typing import Any, Sequence

from . import experiments, oracle, verify
from .core import ferrers, profile_of, to_multiplicity_form
from .errors import ValidationError, require
from .families import FAMILIES, PARAM_ORDER, canonical_params

EXIT_OK, EXIT_CHECK, EXIT_USAGE, EXIT_VALIDATION = 0, 1, 2, 3

# suite keyword arguments the command line can override
SUITE_OPTIONS = ("max_n", "oracle_max_n", "bijection_max_n", "gf_max_n", "d_max", "pairs", "seed")


def _add_params(p: argparse.ArgumentParser, names: Sequence[str] = PARAM_ORDER) -> None:
    for name in names:
        p.add_argument(f"--{name}", type=int)


def _add_output(p: argparse.ArgumentParser, formats: Sequence[str] = ("text", "csv", "json")) -> None:
    p.add_argument("--format", choices=formats, default=formats[0])
    p.add_argument("--output", "-o", help="write here instead of standard output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fixedperim", description="Fixed-perimeter partition toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count a family at one perimeter or over a range")
    p.add_argument("--family", required=True, choices=sorted(FAMILIES))
    _add_params(p)
    p.add_argument("--n", type=int)
    p.add_argument("--n-min", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--method", choices=("auto", "closed", "gf", "oracle"), default="auto")
    _add_output(p)

    p = sub.add_parser("enumerate", help="list partitions of perimeter n in a family")
    p.add_argument("--family", required=True, choices=sorted(k for k, f in FAMILIES.items() if f.constraint))
    _add_params(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--render", choices=("parts", "profile", "ferrers"), default="parts")
    _add_output(p, ("text", "json"))

    p = sub.add_parser("verify", help="run a named identity suite")
    p.add_argument("suite", choices=list(verify.SUITES))
    for opt in SUITE_OPTIONS:
        p.add_argument("--" + opt.replace("_", "-"), type=int, dest=opt)
    p.add_argument("--output", "-o")

    p = sub.add_parser("scan", help="scan a conjectured comparison")
    p.add_argument("kind", choices=("fofd", "kangkim", "prop17"))
    _add_params(p, ("d", "a", "j", "k", "m", "m1", "m2", "a1", "b1", "a2", "b2"))
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--output", "-o")

    p = sub.add_parser("constants", help="alpha_d, A_d and the tipping point")
    p.add_argument("--d", type=int)
    p.add_argument("--d-max", type=int)
    _add_output(p)
    return parser


def _params(args: argparse.Namespace) -> dict[str, int]:
    return {k: getattr(args, k) for k in PARAM_ORDER if getattr(args, k, None) is not None}


def _n_values(args: argparse.Namespace) -> list[int]:
    if args.n is not None:
        require(args.n_min is None and args.n_max is None, "n", "give --n or --n-min/--n-max, not both")
        require(args.n >= 1, "n", "must be >= 1")
        return [args.n]
    require(args.n_max is not None, "n", "give --n or --n-max")
    lo = 1 if args.n_min is None else args.n_min
    require(1 <= lo <= args.n_max, "n_min", "need 1 <= n_min <= n_max")
    return list(range(lo, args.n_max + 1))


def _emit(text: str, path: str | None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if path:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2)


def cmd_count(args: argparse.Namespace) -> int:
    fam = FAMILIES[args.family]
    params = fam.check_params(_params(args))
    ns = _n_values(args)
    values = fam.values(ns, params, args.method)
    pstr = canonical_params(params)
    if args.format == "text":
        out = "\n".join(str(v) if len(ns) == 1 else f"{n} {v}" for n, v in zip(ns, values))
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["family", "params", "n", "value"])
        w.writerows([fam.name, pstr, n, str(v)] for n, v in zip(ns, values))
        out = buf.getvalue()
    else:
        out = _dumps({
            "family": fam.name,
            "params": params,
            "values": [{"n": n, "value": str(v)} for n, v in zip(ns, values)],
        })
    _emit(out, args.output)
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    fam = FAMILIES[args.family]
    params = fam.check_params(_params(args))
    require(1 <= args.n <= oracle.MAX_PERIMETER, "n", f"need 1 <= n <= {oracle.MAX_PERIMETER}")
    c = fam.constraint(**params)
    found = [p for p in oracle.enumerate_perimeter(args.n) if c.accepts(to_multiplicity_form(p))]

    def render(p) -> str:
        if args.render == "profile":
            return profile_of(p).word
        if args.render == "ferrers":
            return ferrers(p)
        return "+".join(map(str, p.parts))

    if args.format == "json":
        out = _dumps({
            "family": fam.name,
            "params": params,
            "n": args.n,
            "count": str(len(found)),
            "partitions": [{"parts": list(p.parts), "profile": profile_of(p).word} for p in found],
        })
    else:
        sep = "\n\n" if args.render == "ferrers" else "\n"
        out = sep.join(render(p) for p in found) if found else ""
    _emit(out, args.output)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    fn = verify.SUITES[args.suite]
    accepted = inspect.signature(fn).parameters
    kwargs = {k: getattr(args, k) for k in SUITE_OPTIONS if getattr(args, k) is not None}
    unknown = sorted(set(kwargs) - set(accepted))
    if unknown:
        raise ValidationError(unknown[0], f"suite {args.suite!r} takes no such option")
    for k, v in kwargs.items():
        require(v >= (0 if k == "seed" else 1), k, "out of range")
    res = fn(**kwargs)
    _emit(_dumps(res.to_dict()), args.output)
    if not res.passed:
        print(_dumps({"failures": res.failures}), file=sys.stderr)
        return EXIT_CHECK
    return EXIT_OK


def cmd_scan(args: argparse.Namespace) -> int:
    def need(*names: str) -> list[int]:
        for name in names:
            require(getattr(args, name) is not None, name, f"scan {args.kind} needs --{name}")
        return [getattr(args, name) for name in names]

    if args.kind == "fofd":
        report = experiments.scan_fofd(*need("j", "k"), args.n_max)
    elif args.kind == "kangkim":
        report = experiments.scan_kangkim(*need("d", "a", "m", "m1", "m2"), args.n_max)
    else:
        try:
            report = experiments.check_prop17(*need("d", "a1", "b1", "a2", "b2"), args.n_max)
        except experiments.Prop17Violation as exc:
            _emit(_dumps(exc.report.to_dict()), args.output)
            print(_dumps({"failures": [str(exc)]}), file=sys.stderr)
            return EXIT_CHECK
    _emit(_dumps(report.to_dict()), args.output)
    if report.violations:
        print(_dumps({"failures": [{"n": n, "diff": str(report.diff_at(n))} for n in report.violations]}),
              file=sys.stderr)
        return EXIT_CHECK
    return EXIT_OK


def cmd_constants(args: argparse.Namespace) -> int:
    if args.d is not None:
        ds = [args.d]
    else:
        require(args.d_max is not None, "d", "give --d or --d-max")
        ds = list(range(1, args.d_max + 1))
    rows = [experiments.asymptotic_constants(d) for d in ds]
    if args.format == "json":
        out = _dumps([
            {"d": c.d, "alpha_d": repr(c.alpha_d), "A_d": repr(c.A_d), "ratio": repr(c.ratio),
             "tipping": c.tipping, "tipping_near_integer": c.tipping_near_integer}
            for c in rows
        ])
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["d", "alpha_d", "A_d", "ratio", "tipping", "tipping_near_integer"])
        w.writerows([c.d, repr(c.alpha_d), repr(c.A_d), repr(c.ratio), c.tipping, c.tipping_near_integer] for c in rows)
        out = buf.getvalue()
    else:
        out = "\n".join(
            f"d={c.d} alpha_d={c.alpha_d:.15g} A_d={c.A_d:.15g} tipping={c.tipping}"
            + (" (ratio within guard band of an integer)" if c.tipping_near_integer else "")
            for c in rows
        )
    _emit(out, args.output)
    return EXIT_OK


COMMANDS = {
    "count": cmd_count,
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
    "scan": cmd_scan,
    "constants": cmd_constants,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)  # exits with status 2 on usage errors
    try:
        return COMMANDS[args.command](args)
    except ValidationError as exc:
        print(json.dumps({"error": "validation", "field": exc.field, "message": exc.message}), file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
