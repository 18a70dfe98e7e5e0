"""Command line front end: ``pwlie pweights | strings | verify``.

Exit codes: 0 success, 2 invalid arguments, 3 cache write failure (result
still printed), 4 solver failure, 5 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass

from .cache import PWeightCache
from .errors import SolverError
from .polyalg import Specialization
from .pweights import pweights
from .verify import run_verification
from .weights import AffineDominant, AlgebraContext, parse_int_list
from .weylkac import solve_strings

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CACHE = 3
EXIT_SOLVER = 4
EXIT_VERIFY = 5

log = logging.getLogger("pwlie")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    rank: int
    labels: tuple[int, ...]
    horizon: int
    fmt: str = "table"
    spec: Specialization | None = None
    cache_dir: str | None = None
    use_cache: bool = True
    series: bool = False
    modulus: str = "level"

    def __post_init__(self):
        if self.rank < 1:
            raise UsageError("--rank must be at least 1")
        if len(self.labels) != self.rank + 1:
            raise UsageError(f"--labels needs {self.rank + 1} entries for rank {self.rank}")
        if any(a < 0 for a in self.labels) or not any(self.labels):
            raise UsageError("--labels must be non-negative and not all zero")
        if self.horizon < 0:
            raise UsageError("--max-depth must be non-negative")
        if self.spec is not None and self.spec.rank != self.rank:
            raise UsageError(f"--spec needs {self.rank + 1} exponents")

    @property
    def source(self) -> AffineDominant:
        return AffineDominant(self.labels)

    @property
    def ctx(self) -> AlgebraContext:
        return AlgebraContext(self.rank)

    def make_cache(self) -> PWeightCache | None:
        return PWeightCache(self.cache_dir) if self.use_cache else None


def _add_common(p: argparse.ArgumentParser, formats):
    p.add_argument("--rank", type=int, help="N of A_N^(1); defaults to len(labels)-1")
    p.add_argument("--labels", required=True, help="affine labels a0,a1,...,aN")
    p.add_argument("--max-depth", type=int, default=9, dest="max_depth", help="horizon K")
    p.add_argument("--format", choices=formats, default="table", dest="fmt")
    p.add_argument("--cache-dir", help="cache directory (default $PWLIE_CACHE or ~/.cache/pwlie)")
    p.add_argument("--no-cache", action="store_true", help="do not read or write the cache")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pwlie", description="Permutation weights and string functions of A_N^(1)."
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pweights", help="print permutation weight sets by depth")
    _add_common(p, ["table", "json"])

    s = sub.add_parser("strings", help="solve for string function coefficients")
    _add_common(s, ["table", "json", "csv"])
    s.add_argument("--series", action="store_true", help="print q-series instead of a table")
    s.add_argument("--spec", help="specialization exponents t1,...,tN+1 summing to 0")
    s.add_argument(
        "--signature-modulus", choices=["level", "rank"], default="level", dest="modulus"
    )

    v = sub.add_parser("verify", help="check appendix tables and oracle agreement")
    v.add_argument("--only", action="append", help="a2..a10, a2..a5, oracle, signatures, conjugation")
    v.add_argument("--fixtures", help="alternative appendix fixture file")
    v.add_argument("--misprints", help="alternative misprint allowlist")
    v.add_argument("--cache-dir")
    v.add_argument("--no-cache", action="store_true")
    return parser


def _config(args) -> RunConfig:
    try:
        labels = parse_int_list(args.labels)
    except ValueError:
        raise UsageError(f"cannot parse --labels {args.labels!r}")
    rank = args.rank if args.rank is not None else len(labels) - 1
    spec = None
    if getattr(args, "spec", None):
        try:
            spec = Specialization(parse_int_list(args.spec))
        except ValueError as exc:
            raise UsageError(f"bad --spec: {exc}")
    return RunConfig(
        rank=rank,
        labels=labels,
        horizon=args.max_depth,
        fmt=args.fmt,
        spec=spec,
        cache_dir=args.cache_dir,
        use_cache=not args.no_cache,
        series=getattr(args, "series", False),
        modulus=getattr(args, "modulus", "level"),
    )


def _cache_status(cache: PWeightCache | None) -> int:
    if cache is not None and cache.errors:
        for msg in cache.errors:
            print(f"pwlie: {msg}", file=sys.stderr)
        return EXIT_CACHE
    return EXIT_OK


def cmd_pweights(cfg: RunConfig, out=None) -> int:
    out = out or sys.stdout
    cache = cfg.make_cache()
    pws = pweights(cfg.source, cfg.horizon, cfg.ctx, cache)
    if cfg.fmt == "json":
        out.write(json.dumps(pws.to_json(), indent=1) + "\n")
    else:
        for line in pws.display_lines():
            out.write(line + "\n")
    return _cache_status(cache)


def cmd_strings(cfg: RunConfig, out=None) -> int:
    out = out or sys.stdout
    cache = cfg.make_cache()
    try:
        table = solve_strings(cfg.source, cfg.horizon, cfg.ctx, cfg.spec, cache, cfg.modulus)
    except SolverError as exc:
        print(f"pwlie: solver failed: {exc}", file=sys.stderr)
        if exc.order is not None:
            print(f"pwlie: order J={exc.order}, residual {exc.residual}", file=sys.stderr)
        return EXIT_SOLVER
    if cfg.series:
        out.write(table.to_series_text() + "\n")
    elif cfg.fmt == "json":
        out.write(json.dumps(table.to_json(), indent=1) + "\n")
    elif cfg.fmt == "csv":
        out.write(table.to_csv())
    else:
        out.write(table.to_text() + "\n")
    return _cache_status(cache)


def cmd_verify(args, out=None) -> int:
    out = out or sys.stdout
    cache = None if args.no_cache else PWeightCache(args.cache_dir)
    try:
        results = run_verification(args.only, args.fixtures, args.misprints, cache)
    except ValueError as exc:
        raise UsageError(str(exc))
    out.write("; ".join(r.summary() for r in results) + "\n")
    failed = [r for r in results if not r.ok]
    for r in failed:
        for line in r.mismatches:
            out.write(line + "\n")
    return EXIT_VERIFY if failed else EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        if args.command == "verify":
            return cmd_verify(args)
        cfg = _config(args)
        if args.command == "pweights":
            return cmd_pweights(cfg)
        return cmd_strings(cfg)
    except UsageError as exc:
        print(f"pwlie: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
