"""Command-line interface: ``littlewood {verify,partition,eval,cache}``.

Exit codes: 0 success, 1 a verified identity failed, 2 usage or
precondition error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import koornwinder
from .errors import LittlewoodError, UnknownIdentity
from .partitions import (
    Partition,
    Variant,
    b_statistic,
    content_poly,
    hook_data,
    hook_multisets,
    hook_poly,
    two_core,
)
from .pfaffian import closed_form_int1, closed_form_int2, pf_formula_P1, pf_formula_P2
from .torus import DensitySpec, Family, integral_I
from .verify import IDENTITIES, Budget, default_suite, run_suite

CACHE_ENV = koornwinder.CACHE_ENV


class UsageError(Exception):
    pass


def default_cache_dir() -> Path:
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "littlewood"


def resolve_cache_dir(args) -> Path | None:
    if getattr(args, "no_cache", False):
        return None
    if args.cache_dir:
        return Path(args.cache_dir)
    env = os.environ.get(CACHE_ENV)
    return Path(env) if env else default_cache_dir()


def _write(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


# --- verify --------------------------------------------------------------------


def cmd_verify(args) -> int:
    if not args.all and not args.identity:
        raise UsageError("choose --all or at least one --identity")
    unknown = [i for i in args.identity or [] if i not in IDENTITIES]
    if unknown:
        raise UsageError(f"unknown identity: {', '.join(unknown)} (known: {', '.join(IDENTITIES)})")
    try:
        budget = Budget(args.vars, args.m, args.x_degree, args.q_order, args.max_size)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.jobs < 1:
        raise UsageError("--jobs must be positive")
    koornwinder.set_cache_dir(resolve_cache_dir(args))
    selection = None if args.all else args.identity
    instances = default_suite(budget, selection)
    config = {
        "budget": {
            "vars": budget.max_n,
            "m": budget.max_m,
            "x_degree": budget.max_degree,
            "q_order": budget.max_order,
            "max_size": budget.max_size,
        },
        "identities": sorted(set(selection)) if selection else "all",
    }
    report = run_suite(instances, budget, jobs=args.jobs, timings=args.timings, config=config)
    text = report.dumps() if args.format == "json" else report.to_markdown()
    _write(text, args.out)
    if args.out:
        failed = sum(1 for r in report.results if not r.passed)
        print(f"{len(report.results) - failed}/{len(report.results)} instances passed; report written to {args.out}")
    return 0 if report.passed else 1


# --- partition -----------------------------------------------------------------


def partition_stats(lam: Partition, z: int = 0) -> dict:
    hm = hook_multisets(lam)
    cells = [
        {"cell": [i, j], "arm": h.arm, "leg": h.leg, "hook": h.hook, "content": h.content}
        for (i, j) in lam.cells()
        for h in [hook_data(lam, (i, j))]
    ]
    core = two_core(lam)
    return {
        "partition": list(lam),
        "size": lam.size(),
        "conjugate": list(lam.conjugate()),
        "cells": cells,
        "hooks": sorted(hm.all.elements(), reverse=True),
        "even_hooks": sorted(hm.even.elements(), reverse=True),
        "odd_hooks": sorted(hm.odd.elements(), reverse=True),
        "two_core": list(core),
        "empty_two_core": not core,
        "b": b_statistic(lam),
        "b_conjugate": b_statistic(lam.conjugate()),
        "H": str(hook_poly(lam, Variant.ALL)),
        "H_even": str(hook_poly(lam, Variant.EVEN)),
        "H_odd": str(hook_poly(lam, Variant.ODD)),
        "z_exponent": z,
        "C": str(content_poly(lam, z, Variant.ALL)),
        "C_even": str(content_poly(lam, z, Variant.EVEN)),
        "C_odd": str(content_poly(lam, z, Variant.ODD)),
    }


def _parse_partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise UsageError(f"cannot parse partition {text!r}: {exc}") from None


def cmd_partition(args) -> int:
    lam = _parse_partition(args.partition)
    if args.z is None:
        # the closed forms evaluate contents at z = q^{2n} with 2n >= length
        args.z = 2 * max(1, (len(lam) + 1) // 2)
    stats = partition_stats(lam, args.z)
    if args.format == "json":
        _write(json.dumps(stats, indent=2, sort_keys=True) + "\n", args.out)
        return 0
    lines = [
        f"partition: {lam}",
        f"size: {stats['size']}",
        f"conjugate: {lam.conjugate()}",
        f"hooks: {stats['hooks']}",
        f"even hooks: {stats['even_hooks']}",
        f"odd hooks: {stats['odd_hooks']}",
        f"contents: {[c['content'] for c in stats['cells']]}",
        f"2-core: {Partition(stats['two_core'])} ({'empty' if stats['empty_two_core'] else 'nonempty'})",
        f"b: {stats['b']}",
        f"b': {stats['b_conjugate']}",
        f"H: {stats['H']}",
        f"H^e: {stats['H_even']}",
        f"H^o: {stats['H_odd']}",
        f"C(q^{args.z}): {stats['C']}",
        f"C^e(q^{args.z}): {stats['C_even']}",
        f"C^o(q^{args.z}): {stats['C_odd']}",
    ]
    _write("\n".join(lines) + "\n", args.out)
    return 0


# --- eval ----------------------------------------------------------------------


def cmd_eval(args) -> int:
    lam = _parse_partition(args.lam)
    if args.n < 1:
        raise UsageError("--n must be positive")
    if args.kind == "pf1":
        value = pf_formula_P1(lam, args.n)
    elif args.kind == "pf2":
        value = pf_formula_P2(lam, args.n)
    elif args.kind == "int1":
        value = closed_form_int1(lam, args.n)
    elif args.kind == "int2":
        value = closed_form_int2(lam, args.n)
    else:
        if args.q_order < 0:
            raise UsageError("--q-order must be nonnegative")
        value = integral_I(lam, DensitySpec(args.n, args.family, args.q_order)).value
    _write(f"{value}\n", args.out)
    return 0


# --- cache ---------------------------------------------------------------------


def cmd_cache(args) -> int:
    directory = resolve_cache_dir(args)
    if directory is None:
        raise UsageError("no cache directory configured")
    if args.action == "path":
        print(directory)
    elif args.action == "info":
        files = sorted(directory.glob("K_v*.json")) if directory.exists() else []
        size = sum(f.stat().st_size for f in files)
        print(f"directory: {directory}")
        print(f"records: {len(files)}")
        print(f"bytes: {size}")
        print(f"format version: {koornwinder.CACHE_VERSION}")
    else:
        removed = koornwinder.KoornwinderCache(directory).clear(disk=True)
        print(f"removed {removed} records from {directory}")
    return 0


# --- parser --------------------------------------------------------------------


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="littlewood", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    cache_opts = argparse.ArgumentParser(add_help=False)
    cache_opts.add_argument("--cache-dir", help=f"cache directory (default: ${CACHE_ENV} or ~/.cache/littlewood)")
    cache_opts.add_argument("--no-cache", action="store_true", help="keep the Koornwinder cache in memory only")

    v = sub.add_parser("verify", parents=[cache_opts], help="run verification suites")
    v.add_argument("--identity", action="append", metavar="ID", help="identity id (repeatable)")
    v.add_argument("--all", action="store_true", help="run the full default suite")
    v.add_argument("--vars", type=_positive, default=4, help="maximum number of variables n")
    v.add_argument("--m", type=_positive, default=2, help="maximum bound m for the bounded identities")
    v.add_argument("--x-degree", type=_positive, default=12, help="maximum x-degree d")
    v.add_argument("--q-order", type=_positive, default=20, help="maximum q-order D")
    v.add_argument("--max-size", type=_positive, default=12, help="maximum |lambda| for sweeps")
    v.add_argument("--jobs", type=int, default=1, help="worker processes")
    v.add_argument("--format", choices=("json", "markdown"), default="json")
    v.add_argument("--out", help="write the report here instead of stdout")
    v.add_argument("--timings", action="store_true", help="include wall-clock seconds (breaks byte-identity)")
    v.set_defaults(func=cmd_verify)

    p = sub.add_parser("partition", help="print partition statistics")
    p.add_argument("partition", help='comma-separated parts, "" for the empty partition')
    p.add_argument("--z", type=int, help="evaluate content polynomials at z = q^Z (default: 2n with 2n >= length)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_partition)

    e = sub.add_parser("eval", help="evaluate a Pfaffian, closed form or torus integral")
    e.add_argument("kind", choices=("pf1", "pf2", "int1", "int2", "integral"))
    e.add_argument("--lambda", dest="lam", required=True, help="partition, comma-separated")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--family", choices=[f.value for f in Family], default=Family.I_QQ.value)
    e.add_argument("--q-order", type=int, default=12)
    e.add_argument("--out")
    e.set_defaults(func=cmd_eval)

    c = sub.add_parser("cache", parents=[cache_opts], help="inspect or clear the Koornwinder cache")
    c.add_argument("action", choices=("info", "clear", "path"))
    c.set_defaults(func=cmd_cache)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, UnknownIdentity) as exc:
        print(f"littlewood: error: {exc}", file=sys.stderr)
        return 2
    except LittlewoodError as exc:
        print(f"littlewood: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
