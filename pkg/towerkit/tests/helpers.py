# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
import json
from typing import Any, Sequence

from towerkit.catalog import build_group
from towerkit.cli.literal import parse_literal
from towerkit.cli.main import build_parser, run
from towerkit.core.config import Limits
from towerkit.groups.group import FiniteGroup
from towerkit.groups.permutation import Permutation

# Limits used by every test unless it needs something else; the defaults.
DEFAULT_LIMITS = Limits()

GROUP_CACHE: dict[str, FiniteGroup] = {}


# Helper that builds a group from a literal (if not already built) and returns it.
def group(source: str, use_cache: bool = True) -> FiniteGroup:
    if use_cache and source in GROUP_CACHE:
        return GROUP_CACHE[source]
    G = build_group(parse_literal(source), DEFAULT_LIMITS)
    if use_cache:
        GROUP_CACHE[source] = G
    return G


def perm(degree: int, *cycles: Sequence[int]) -> Permutation:
    return Permutation.from_cycles(degree, cycles)


# Runs the command line in process and returns (exit code, parsed JSON report).
def run_cli(*argv: str) -> tuple[int, dict[str, Any]]:
    args = build_parser().parse_args(list(argv))
    code, report = run(args)
    return code, json.loads(report.to_json())


def payload(report: dict[str, Any]) -> dict[str, Any]:
    """
    A report without its timing field, for exact comparisons.
    """
    return {k: v for k, v in report.items() if k != "timing"}
