# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
"""
One function per CLI command. Each takes the parsed arguments and the limits in
force and returns a Report; errors propagate to the driver, which maps them to
exit codes.
"""
from argparse import Namespace
from typing import Any, Callable

from typing_extensions import TypeAlias

from towerkit.abelian.abelian import AbelianGroup, abelian_from_group
from towerkit.catalog import CATALOG, build_group
from towerkit.cli.literal import parse_literal
from towerkit.cli.report import Report
from towerkit.core.config import Limits
from towerkit.core.enums import Verdict
from towerkit.core.errors import LimitExceeded, ParseError
from towerkit.core.logging import certificate_table, tower_table
from towerkit.core.utils import prime_divisors, prime_part
from towerkit.extensions.fc import fc_model
from towerkit.extensions.isoclinism import is_isoclinic
from towerkit.fqlin.analysis import analyze_sylow_linear
from towerkit.groups.group import FiniteGroup
from towerkit.groups.structure import (center, conjugacy_classes, derived_series, element_orders,
                                       is_solvable, normal_subgroups, sylow_subgroup)
from towerkit.monomial.action import action_from_q8_triple, type_descriptor, verify_action
from towerkit.special.certificate import SpecialCertificate, verify_certificate
from towerkit.special.search import is_special
from towerkit.tower.tower import build_tower, verify_tower
from towerkit.tower.untwist import untwist_central

TCommand: TypeAlias = Callable[[Namespace, Limits], Report]


def load_group(source: str, limits: Limits) -> FiniteGroup:
    return build_group(parse_literal(source), limits)


def parse_invariants(source: str) -> list[int]:
    """
    A comma separated list of positive integers, e.g. "2,2,4".
    """
    parts = [p.strip() for p in source.split(",")]
    pos = 0
    values = []
    for p in parts:
        if not p.isdigit() or int(p) < 1:
            raise ParseError(f"Expected a positive integer, found {p!r}", pos, ["integer"])
        values.append(int(p))
        pos += len(p) + 1
    return values


def _structure(G: FiniteGroup, limits: Limits) -> dict[str, Any]:
    res: dict[str, Any] = {
        "order": G.order,
        "degree": G.degree,
        "abelian": G.is_abelian(),
        "exponent": G.exponent(),
        "center_order": center(G).order,
        "derived_series_orders": [N.order for N in derived_series(G, limits)],
        "solvable": is_solvable(G, limits),
        "class_sizes": sorted(len(c) for c in conjugacy_classes(G)),
        "element_orders": {str(k): v for k, v in element_orders(G).items()},
        "sylow_orders": {str(p): prime_part(G.order, p) for p in prime_divisors(G.order)},
    }
    if G.is_abelian():
        res["invariant_factors"] = list(abelian_from_group(G).invariant_factors)
    return res


def cmd_analyze(args: Namespace, limits: Limits) -> Report:
    G = load_group(args.group, limits)
    result = _structure(G, limits)
    try:
        result["normal_subgroup_count"] = len(normal_subgroups(G, limits))
    except LimitExceeded as e:
        result["normal_subgroup_count"] = None
        result["limits_hit"] = {"normal_subgroup_count": e.message}
    return Report("analyze", [args.group], limits, result)


def cmd_special(args: Namespace, limits: Limits) -> Report:
    G = load_group(args.group, limits)
    res = is_special(G, limits, shortest=args.shortest)
    result = res.to_dict()
    tables = []
    if isinstance(res, SpecialCertificate):
        tables.append(certificate_table(res))
        if args.verify:
            result["verification"] = verify_certificate(res).to_dict()
    return Report("special", [args.group], limits, result, tables)


def cmd_tower(args: Namespace, limits: Limits) -> Report:
    G = load_group(args.group, limits)
    res = is_special(G, limits)
    if not isinstance(res, SpecialCertificate):
        return Report("tower", [args.group], limits, {"special": res.to_dict(),
                                                      "verdict": res.verdict.name})
    tc = build_tower(G, res, limits)
    result = tc.to_dict()
    result["verdict"] = res.verdict.name
    if args.verify:
        result["verification"] = verify_tower(tc, limits).to_dict()
    return Report("tower", [args.group], limits, result, [tower_table(tc)])


def cmd_untwist(args: Namespace, limits: Limits) -> Report:
    G = load_group(args.group, limits)
    report = untwist_central(G, limits)
    result = report.to_dict()
    tables = []
    if report.tower is not None:
        tables.append(tower_table(report.tower))
    if args.verify and isinstance(report.special, SpecialCertificate):
        result["certificate_verification"] = verify_certificate(report.special).to_dict()
    return Report("untwist", [args.group], limits, result, tables)


def cmd_fc(args: Namespace, limits: Limits) -> Report:
    A = AbelianGroup.from_cyclic_orders(parse_invariants(args.invariants))
    F, G = fc_model(A, limits)
    result = F.to_dict()
    result["literal"] = "fc(" + ",".join(str(d) for d in A.invariant_factors) + ")" \
        if not A.is_trivial() else "fc(1)"
    result["permutation_degree"] = G.degree
    result["derived_order"] = F.commutator_part.order
    if args.verify:
        result["verification"] = F.verify().to_dict()
    return Report("fc", [args.invariants], limits, result)


def cmd_isoclinic(args: Namespace, limits: Limits) -> Report:
    G = load_group(args.first, limits)
    H = load_group(args.second, limits)
    witness = is_isoclinic(G, H, limits)
    result: dict[str, Any] = {"isoclinic": witness is not None}
    if witness is not None:
        result["witness"] = witness.to_dict()
        if args.verify:
            result["verification"] = witness.verify().to_dict()
    return Report("isoclinic", [args.first, args.second], limits, result)


def cmd_sylow(args: Namespace, limits: Limits) -> Report:
    G = load_group(args.group, limits)
    S = sylow_subgroup(G, args.prime, limits).as_group(f"sylow({args.group},{args.prime})")
    special = is_special(S, limits)
    result: dict[str, Any] = {
        "group_order": G.order,
        "prime": args.prime,
        "order": S.order,
        "structure": _structure(S, limits),
        "special": special.verdict == Verdict.special,
        "verdict": special.verdict.name,
        "certificate": special.to_dict(),
    }
    if args.verify and isinstance(special, SpecialCertificate):
        result["verification"] = verify_certificate(special).to_dict()
    return Report("sylow", [args.group, str(args.prime)], limits, result)


def cmd_monomial(args: Namespace, limits: Limits) -> Report:
    act = action_from_q8_triple(limits)
    result = act.to_dict()
    result["sign_diagonal"] = all(f.is_sign_diagonal() for f in act.assignment.values())
    result["type"] = type_descriptor(act).to_dict()
    if args.verify:
        result["verification"] = verify_action(act).to_dict()
    return Report("monomial", [], limits, result)


def cmd_linear(args: Namespace, limits: Limits) -> Report:
    report = analyze_sylow_linear(args.n, args.q, args.prime, limits)
    inputs = [str(args.n), str(args.q), str(args.prime)]
    return Report("linear", inputs, limits, report.to_dict())


def cmd_catalog(args: Namespace, limits: Limits) -> Report:
    entries = [CATALOG[name].to_dict() for name in sorted(CATALOG)]
    literals = [
        {"usage": "perm: (0 1 2)(3 4); (0 1)", "description": "group generated by permutations"},
        {"usage": "abelian: d1,...,dk", "description": "finite abelian group, cyclic model"},
    ]
    return Report("catalog", [], limits, {"entries": entries, "literals": literals})


#: Command name -> implementation.
COMMANDS: dict[str, TCommand] = {
    "analyze": cmd_analyze,
    "special": cmd_special,
    "tower": cmd_tower,
    "untwist": cmd_untwist,
    "fc": cmd_fc,
    "isoclinic": cmd_isoclinic,
    "sylow": cmd_sylow,
    "monomial": cmd_monomial,
    "linear": cmd_linear,
    "catalog": cmd_catalog,
}
