# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
import argparse
import logging
import sys
import time
from typing import Optional, Sequence

from towerkit.cli.commands import COMMANDS
from towerkit.cli.report import Report, error_report
from towerkit.core.config import Limits, get_default_limits
from towerkit.core.enums import OutputFormat
from towerkit.core.errors import LimitExceeded, TowerkitError
from towerkit.core.logging import configure_logging

log = logging.getLogger("towerkit")

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_LIMIT = 3


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-order", type=_positive, default=None,
                        help="Largest group that may be enumerated.")
    common.add_argument("--iso-limit", type=_positive, default=None,
                        help="Largest group accepted by isomorphism and isoclinism searches.")
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="format", action="store_const", const=OutputFormat.json,
                     help="Write the report as JSON (default).")
    fmt.add_argument("--text", dest="format", action="store_const", const=OutputFormat.text,
                     help="Write the report as tables.")
    common.add_argument("--verify", action="store_true",
                        help="Re-run certificate verification independently.")
    common.add_argument("--debug", action="store_true", help="Log search progress to stderr.")
    common.set_defaults(format=OutputFormat.json)

    parser = argparse.ArgumentParser(
        prog="towerkit", description="Special groups, wreath towers and their certificates.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, parents=[common], help=help, description=help)

    add("analyze", "Structural summary of a group.").add_argument("group")
    p = add("special", "Decide whether a group is special.")
    p.add_argument("group")
    p.add_argument("--shortest", action="store_true", help="Also report the shortest filtration length.")
    add("tower", "Build the toric tower certificate of a special group.").add_argument("group")
    add("untwist", "Untwist a group of class at most two through its free central cover.") \
        .add_argument("group")
    add("fc", "Free central extension of an abelian group.").add_argument(
        "invariants", help="Cyclic orders, e.g. 2,2,4.")
    p = add("isoclinic", "Search for an isoclinism between two groups.")
    p.add_argument("first")
    p.add_argument("second")
    p = add("sylow", "A Sylow subgroup and its special decision.")
    p.add_argument("group")
    p.add_argument("prime", type=_positive)
    add("monomial", "Monomial action of the quaternion triple group.")
    p = add("linear", "Sylow subgroup of PGL_n(F_q) for a prime l.")
    p.add_argument("n", type=_positive)
    p.add_argument("q", type=_positive)
    p.add_argument("prime", type=_positive)
    add("catalog", "List the named groups.")
    return parser


def limits_from_args(args: argparse.Namespace) -> Limits:
    changes = {}
    if args.max_order is not None:
        changes["max_order"] = args.max_order
    if args.iso_limit is not None:
        changes["iso_limit"] = args.iso_limit
    return get_default_limits().replace(**changes)


def _inputs(args: argparse.Namespace) -> list[str]:
    names = ("group", "first", "second", "invariants", "n", "q", "prime")
    return [str(getattr(args, k)) for k in names if getattr(args, k, None) is not None]


def run(args: argparse.Namespace) -> tuple[int, Report]:
    limits = limits_from_args(args)
    start = time.perf_counter()
    try:
        report = COMMANDS[args.command](args, limits)
        code = EXIT_OK
    except LimitExceeded as e:
        report = error_report(args.command, _inputs(args), limits, e.to_dict())
        code = EXIT_LIMIT
    except (TowerkitError, ValueError) as e:
        info = e.to_dict() if isinstance(e, TowerkitError) else {"error": type(e).__name__,
                                                                  "message": str(e)}
        report = error_report(args.command, _inputs(args), limits, info)
        code = EXIT_USAGE
    report.timing = time.perf_counter() - start
    log.debug("%s finished with exit code %d in %.3f s", args.command, code, report.timing)
    return code, report


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.debug)
    code, report = run(args)
    if code != EXIT_OK:
        print(f"towerkit: {report.result['error']['message']}", file=sys.stderr)
    print(report.render(args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
