"""Command line front end.

::

    genkummer betti --n 2                 # 1 0 22 0 1
    genkummer hodge --n 3
    genkummer strata --n 3 --format json
    genkummer decompose --n 4 --format json
    genkummer verify --max-n 10

Exit codes: 0 success, 1 a verification check failed, 2 usage error.
Results are cached under ``--cache-dir`` (default ``$KUMMER_CACHE_DIR``).
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from dataclasses import dataclass
from typing import Sequence

from . import __version__
from .cache import ResultCache
from .kummer import kummer_diamond, product_motive, strata_catalog, verify_suite
from .render import FORMATS, render_betti, render_hodge, render_motive, render_strata, render_verification

__all__ = ["Config", "run", "main", "N_CAP"]

N_CAP = 20
CACHE_ENV = "KUMMER_CACHE_DIR"

log = logging.getLogger("genkummer")


@dataclass(frozen=True)
class Config:
    command: str
    n: int
    format: str = "markdown"
    cache_dir: str | None = None
    verbosity: int = 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="genkummer",
        description="Hodge numbers and motivic decomposition of generalized Kummer varieties.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="markdown")
    common.add_argument("--cache-dir", default=None, help=f"cache directory (default: ${CACHE_ENV})")
    common.add_argument("--no-cache", action="store_true", help="disable the result cache")
    common.add_argument("--unsafe-n", action="store_true", help=f"allow n above {N_CAP}")
    common.add_argument("-v", "--verbose", action="count", default=0)

    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    helps = {
        "decompose": "print the decomposition of h(A x K^[n]) into symmetric-power terms",
        "betti": "print the Betti numbers of K^[n]",
        "hodge": "print the Hodge diamond of K^[n]",
        "strata": "print the strata of K^[n] -> K^(n)",
    }
    for name, text in helps.items():
        p = sub.add_parser(name, parents=[common], help=text, description=text)
        p.add_argument("--n", type=int, required=True)
    p = sub.add_parser("verify", parents=[common], help="run the structural checks for 2 <= n <= max-n")
    p.add_argument("--max-n", type=int, required=True)
    return parser


def _compute(command: str, n: int, fmt: str) -> str:
    if command == "betti":
        return render_betti(kummer_diamond(n), n, fmt)
    if command == "hodge":
        return render_hodge(kummer_diamond(n), n, fmt)
    if command == "strata":
        return render_strata(strata_catalog(n), fmt)
    if command == "decompose":
        return render_motive(product_motive(n), n, fmt)
    raise ValueError(command)


def run(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    logging.basicConfig(
        level=logging.WARNING - 10 * min(args.verbose, 2),
        format="%(levelname)s: %(message)s",
        stream=sys.stderr,
    )
    n = args.max_n if args.command == "verify" else args.n
    lowest = 2 if args.command == "verify" else 1
    if n < lowest or (n > N_CAP and not args.unsafe_n):
        hint = "" if n < lowest else " (pass --unsafe-n to go higher)"
        print(f"genkummer {args.command}: n must be in {lowest}..{N_CAP}, got {n}{hint}", file=sys.stderr)
        return 2

    cache_dir = None if args.no_cache else (args.cache_dir or os.environ.get(CACHE_ENV) or None)
    config = Config(args.command, n, args.format, cache_dir, args.verbose)
    log.debug("%s", config)

    if config.command == "verify":
        report = verify_suite(config.n)
        sys.stdout.write(render_verification(report, config.format))
        return 0 if report.passed else 1

    cache = ResultCache(config.cache_dir)
    key = f"{config.command}|n={config.n}|format={config.format}|version={__version__}"
    out = cache.get(key)
    if out is None:
        out = _compute(config.command, config.n, config.format)
        cache.put(key, out)
    else:
        log.info("cache hit for %s", key)
    sys.stdout.write(out)
    return 0


def main() -> None:
    sys.exit(run())
