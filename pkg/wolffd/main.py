"""
wolffd command line

Subcommands are registered from wolffd.api the way routers are mounted on
an application; each handler returns its exit code.
"""

import argparse
import sys
from typing import List, Optional

from wolffd import __version__
from wolffd.api import norm, radical, solve, verify
from wolffd.core.config import get_settings
from wolffd.core.exceptions import (
    ArgumentError,
    ConvergenceError,
    HypothesisError,
    ParseError,
    RefinementError,
)
from wolffd.utils.logging import configure_logging

EXIT_CONTRACT = 1
EXIT_PARSE = 2
EXIT_HYPOTHESIS = 3
EXIT_REFINEMENT = 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    settings = get_settings()
    parser = _Parser(prog="wolffd", description="Numerical toolkit for ideal membership in Dirichlet-space multipliers")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--threads", type=int, default=settings.threads,
                        help="Worker cap (default from WOLFFD_THREADS)")
    parser.add_argument("--log-level", default=settings.log_level, help="loguru level (default INFO)")
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    # Register commands
    solve.register(subparsers)
    verify.register(subparsers)
    norm.register(subparsers)
    radical.register(subparsers)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.log_level)
    if args.threads < 1:
        parser.error("--threads must be at least 1")
    try:
        return args.handler(args)
    except (ParseError, ArgumentError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except HypothesisError as e:
        print(f"hypothesis violated: {e}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except (RefinementError, ConvergenceError) as e:
        print(f"refinement needed: {e}", file=sys.stderr)
        return EXIT_REFINEMENT
