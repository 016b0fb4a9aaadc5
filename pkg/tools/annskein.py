#!/usr/bin/env python3
"""
AnnularSkein command-line tool

Computes annular Khovanov skein homology, spectral pages, Euler
polynomials and the Plamenevskaya state of annular diagrams, and runs the
named check suites.

Exit codes: 0 success, 1 a check failed, 2 parse or usage error,
3 capacity exceeded, 4 internal invariant failure.
"""

import argparse
import logging
import logging.config
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional

from pydantic import ValidationError

# Add project root to path so `python tools/annskein.py` works as well as `-m`
sys.path.insert(0, str(Path(__file__).parent.parent))

from config import get_settings
from diagram.parsers import load_annular_pd, parse_braid_word
from invariants.euler import euler_from_homology, euler_statesum
from invariants.homology import khovanov_homology, khovanov_pages, skein_homology
from invariants.plamenevskaya import plamenevskaya
from invariants.render import render_checks, render_grid, render_khovanov, render_pages, render_suite, to_json
from invariants.suites import run_suite
from models.diagram import AnnularDiagram
from models.errors import (
    CapacityError,
    DiagramParseError,
    DisconnectedDiagramError,
    InvariantViolation,
    NotABraidClosureError,
    TargetClassError,
    UnknownSuiteError,
)
from models.results import CheckResult
from models.run_config import ComplexMode, OutputFormat, RunConfig
from skein.complex import prepare_diagram

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3
EXIT_INVARIANT = 4

logger = logging.getLogger("annskein")


def setup_logging(verbose: bool = False) -> logging.Logger:
    """Configure logging from the settings; stdout is left to results."""
    logging.config.dictConfig(get_settings().get_log_config(verbose))
    return logger


def load_diagram(cfg: RunConfig) -> Optional[AnnularDiagram]:
    if cfg.braid is not None:
        return parse_braid_word(cfg.braid)
    if cfg.pd is not None:
        return load_annular_pd(cfg.pd, cfg.cap)
    return None


def _require_diagram(cfg: RunConfig) -> AnnularDiagram:
    d = load_diagram(cfg)
    if d is None:
        raise DiagramParseError("this command needs --braid or --pd")
    return d


def cmd_homology(cfg: RunConfig) -> int:
    d = _require_diagram(cfg)
    if cfg.mode == ComplexMode.KHOVANOV.value:
        ranks = khovanov_homology(d, cfg.reduced, cfg.meridians, cfg.mirror, cfg.cap)
        if cfg.format == OutputFormat.JSON.value:
            print(to_json(ranks.model_dump()), end="")
        else:
            print(render_khovanov(ranks), end="")
        return EXIT_OK

    table = skein_homology(d, cfg.reduced, cfg.meridians, cfg.mirror, not cfg.unshifted, cfg.cap)
    if cfg.format == OutputFormat.JSON.value:
        print(table.to_json())
    else:
        print(render_grid(table), end="")
    return EXIT_OK


def cmd_pages(cfg: RunConfig) -> int:
    d = _require_diagram(cfg)
    report = khovanov_pages(d, cfg.r_max, cfg.reduced, cfg.meridians, cfg.mirror, not cfg.unshifted, cfg.cap)
    if cfg.format == OutputFormat.JSON.value:
        print(to_json(report.model_dump()), end="")
    else:
        print(render_pages(report), end="")
    return EXIT_OK


def cmd_psi(cfg: RunConfig) -> int:
    d = _require_diagram(cfg)
    if cfg.mirror:
        d = prepare_diagram(d, mirror_image=True)
    report = plamenevskaya(d, cfg.cap)
    if cfg.format == OutputFormat.JSON.value:
        print(to_json(report.model_dump(by_alias=True)), end="")
    else:
        print(f"resolution {''.join(map(str, report.word))}  labels {list(report.labels)}")
        print(f"b = {report.strands}, annular grading {report.level} (unshifted {report.unshifted_level})")
        print(render_checks(report.checks), end="")
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def cmd_euler(cfg: RunConfig) -> int:
    d = _require_diagram(cfg)
    if cfg.reduced:
        logger.warning("--reduced is ignored by euler; the polynomial is unreduced")
    prepared = prepare_diagram(d, cfg.meridians, cfg.mirror)
    statesum = euler_statesum(prepared, cfg.cap, shifted=not cfg.unshifted)
    table = skein_homology(d, False, cfg.meridians, cfg.mirror, not cfg.unshifted, cfg.cap)
    from_homology = euler_from_homology(table)
    checks = [CheckResult(
        name="state sum equals homology Euler characteristic at t = -1",
        passed=statesum.at_t_minus_one() == from_homology.at_t_minus_one(),
        detail=str(statesum.at_t_minus_one()),
    )]
    try:
        quotient = statesum.divide_by_nontrivial_circle()
    except ValueError:
        quotient = None

    if cfg.format == OutputFormat.JSON.value:
        document = {
            "statesum": statesum.as_dict(),
            "homology": from_homology.as_dict(),
            "jones": {str(j): c for j, c in statesum.jones().items()},
            "quotient": quotient.as_dict() if quotient is not None else None,
            "checks": [c.model_dump(by_alias=True) for c in checks],
        }
        print(to_json(document), end="")
    else:
        print(f"V(t, q, x) = {statesum}")
        print(f"V(-1, q, x) = {statesum.at_t_minus_one()}")
        if quotient is not None:
            print(f"V / (qx + 1/(qx)) = {quotient}")
        print(f"Jones coefficients by q-degree: {statesum.jones()}")
        print(render_checks(checks), end="")
    return EXIT_OK if all(c.passed for c in checks) else EXIT_CHECK_FAILED


def cmd_check(cfg: RunConfig) -> int:
    diagram = load_diagram(cfg)
    seed = cfg.seed if cfg.seed is not None else get_settings().computation.default_seed
    report = run_suite(
        cfg.suite,
        diagram=diagram,
        count=cfg.random,
        max_crossings=cfg.max_crossings,
        seed=seed,
        cap=cfg.cap,
        progress=cfg.progress,
    )
    if cfg.format == OutputFormat.JSON.value:
        print(to_json({"suite": report.suite, "checks": [r.model_dump(by_alias=True) for r in report.results]}),
              end="")
    else:
        print(render_suite(report), end="")
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


COMMANDS: Dict[str, Callable[[RunConfig], int]] = {
    "homology": cmd_homology,
    "pages": cmd_pages,
    "psi": cmd_psi,
    "euler": cmd_euler,
    "check": cmd_check,
}


def _add_shared_arguments(parser: argparse.ArgumentParser) -> None:
    source = parser.add_mutually_exclusive_group()
    source.add_argument('--braid', help='Braid word, e.g. "3: 1 -2 1 -2"')
    source.add_argument('--pd', type=Path, help='Annular PD document (JSON)')
    parser.add_argument('--reduced', action='store_true', help='Reduced theory (marked circle labelled +)')
    parser.add_argument('--meridians', action='store_true', help='Add two split meridians, the inner one marked')
    parser.add_argument('--mirror', action='store_true', help='Use the mirror image')
    parser.add_argument('--unshifted', action='store_true', help='Skip the normalizing grading shift')
    parser.add_argument('--mode', choices=[m.value for m in ComplexMode], default=ComplexMode.SKEIN.value,
                        help='Skein differential d0 or Khovanov differential d0 + d1')
    parser.add_argument('--r-max', type=int, default=None, help='Last spectral page to show')
    parser.add_argument('--format', choices=[f.value for f in OutputFormat], default=OutputFormat.TABLE.value,
                        help='Output format')
    parser.add_argument('--cap', type=int, default=None, help='Override the cube-size cap')
    parser.add_argument('-v', '--verbose', action='store_true', help='Enable debug logging')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="annskein",
        description="Annular Khovanov skein homology over F2",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Skein homology of the closure of sigma_1^-1
  python -m tools.annskein homology --braid "2: -1"

  # Spectral pages of the annular filtration
  python -m tools.annskein pages --braid "3: 1 -2 1 -2" --reduced

  # Seeded differential check on 50 random diagrams
  python -m tools.annskein check d2 --random 50 --max-crossings 6 --seed 7
        """
    )
    subparsers = parser.add_subparsers(dest='command', help='Available commands')

    for name, text in (
        ('homology', 'Triply graded skein homology, or Khovanov homology with --mode khovanov'),
        ('pages', 'Pages of the annular spectral sequence'),
        ('psi', 'Plamenevskaya state of a braid closure'),
        ('euler', 'Graded Euler polynomial two ways'),
    ):
        _add_shared_arguments(subparsers.add_parser(name, help=text))

    check_parser = subparsers.add_parser('check', help='Run a named check suite')
    check_parser.add_argument('suite', help='Suite name')
    _add_shared_arguments(check_parser)
    check_parser.add_argument('--random', type=int, default=None, help='Number of random cases')
    check_parser.add_argument('--max-crossings', type=int, default=6, help='Crossing bound for random cases')
    check_parser.add_argument('--seed', type=int, default=None, help='Random seed (default from settings)')
    check_parser.add_argument('--no-progress', action='store_true', help='Disable progress bar')
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    settings = get_settings()
    return RunConfig(
        command=args.command,
        suite=getattr(args, 'suite', None),
        braid=args.braid,
        pd=args.pd,
        random=getattr(args, 'random', None),
        max_crossings=getattr(args, 'max_crossings', 6),
        seed=getattr(args, 'seed', None),
        reduced=args.reduced,
        meridians=args.meridians,
        mirror=args.mirror,
        unshifted=args.unshifted,
        mode=args.mode,
        r_max=args.r_max if args.r_max is not None else settings.computation.default_r_max,
        format=args.format,
        cap=args.cap,
        progress=not getattr(args, 'no_progress', False),
    )


def main(argv: Optional[List[str]] = None) -> int:
    """Main CLI entry point."""
    parser = build_parser()
    args = parser.parse_args(argv)

    if not args.command:
        parser.print_help()
        return EXIT_USAGE

    setup_logging(args.verbose)

    try:
        cfg = config_from_args(args)
    except ValidationError as e:
        logger.error(f"Invalid options: {e.errors()[0]['msg']}")
        return EXIT_USAGE

    try:
        return COMMANDS[cfg.command](cfg)
    except (DiagramParseError, UnknownSuiteError, NotABraidClosureError, DisconnectedDiagramError) as e:
        logger.error(str(e))
        return EXIT_USAGE
    except TargetClassError as e:
        logger.error(str(e))
        return EXIT_CHECK_FAILED
    except CapacityError as e:
        logger.error(str(e))
        return EXIT_CAPACITY
    except InvariantViolation as e:
        logger.error(f"Invariant failure: {e.message}")
        if e.witness is not None:
            logger.error(f"Witness: {e.witness}")
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
