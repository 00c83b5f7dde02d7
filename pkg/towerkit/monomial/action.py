# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
import logging
from collections import Counter
from typing import Any, Mapping, Optional

from towerkit.core.config import Limits
from towerkit.core.errors import VerificationFailed, VerificationResult
from towerkit.extensions.quaternion import fc_in_quaternions
from towerkit.groups.group import FiniteGroup, Subgroup
from towerkit.groups.permutation import Permutation
from towerkit.groups.structure import quotient_group
from towerkit.monomial.gaussian import QUATERNION_MATRICES
from towerkit.monomial.maps import MonomialMap, compose, mobius_to_monomial

log = logging.getLogger("towerkit")


class MonomialAction:
    """
    A group acting by monomial maps, one per element. `labels` names selected
    elements (for example the generators) in reports.
    """

    def __init__(self, group: FiniteGroup, assignment: Mapping[Permutation, MonomialMap],
                 labels: Optional[Mapping[Permutation, str]] = None):
        super().__init__()
        self.group = group
        self.assignment: dict[Permutation, MonomialMap] = dict(assignment)
        self.labels: dict[Permutation, str] = dict(labels or {})

    @property
    def n(self) -> int:
        return self.assignment[self.group.identity].n

    def __call__(self, x: Permutation) -> MonomialMap:
        return self.assignment[x]

    def label(self, x: Permutation) -> str:
        return self.labels.get(x, str(x))

    def is_faithful(self) -> bool:
        return len(set(self.assignment.values())) == self.group.order

    def to_dict(self) -> dict[str, Any]:
        return {
            "group_order": self.group.order,
            "coordinates": self.n,
            "faithful": self.is_faithful(),
            "maps": {self.labels[x]: str(self.assignment[x]) for x in sorted(self.labels)},
        }


def verify_action(act: MonomialAction) -> VerificationResult:
    """
    Every element has a map on the same coordinates, the identity acts trivially
    and rho(xy) == rho(x) o rho(y) for all pairs.
    """
    G = act.group
    checks = 0
    if set(act.assignment) != set(G.elements):
        return VerificationResult.failed("Assignment is not defined on every element")
    n = act.n
    if any(f.n != n for f in act.assignment.values()):
        return VerificationResult.failed("Maps act on different numbers of coordinates")
    if not act.assignment[G.identity].is_identity():
        return VerificationResult.failed("Identity does not act trivially")
    for x in G.elements:
        fx = act.assignment[x]
        for y in G.elements:
            checks += 1
            if act.assignment[x * y] != compose(fx, act.assignment[y]):
                return VerificationResult.failed(
                    f"rho({act.label(x)} {act.label(y)}) != rho({act.label(x)}) o rho({act.label(y)})",
                    checks)
    return VerificationResult.success(checks)


def action_from_q8_triple(limits: Optional[Limits] = None) -> MonomialAction:
    """
    The subgroup of Q8^3 generated by g1 = (1, i, i), g2 = (i, 1, j), g3 = (j, j, 1)
    acts on three coordinates through the projective action of the quaternion
    matrices in each factor. The scalars {+-1}^3 act trivially, and the induced
    action of the quotient (Z/2)^3 is faithful.
    """
    triple = fc_in_quaternions(limits)
    F = triple.group

    def lift_map(x: Permutation) -> MonomialMap:
        maps = [mobius_to_monomial(QUATERNION_MATRICES[u]) for u in triple.components(x)]
        return MonomialMap([m.coefficients[0] for m in maps],
                           [[maps[i].exponents[0][0] if i == j else 0 for j in range(3)]
                            for i in range(3)])

    scalars = Subgroup(F, triple.scalar_subgroup_members())
    Q, proj = quotient_group(F, scalars, limits)
    assignment: dict[Permutation, MonomialMap] = {}
    for x in F.elements:
        f = lift_map(x)
        known = assignment.setdefault(proj(x), f)
        if known != f:
            raise VerificationFailed("Scalar classes act by different monomial maps")

    labels = {proj(g): f"g{k + 1}" for k, g in enumerate(triple.generators)}
    labels.setdefault(Q.identity, "1")
    act = MonomialAction(Q, assignment, labels)
    res = verify_action(act)
    if not res:
        raise VerificationFailed(f"Quaternion triple action: {res.failure}")
    if not act.is_faithful():
        raise VerificationFailed("Quaternion triple action is not faithful")
    log.debug("action_from_q8_triple: %d maps, %d checks", len(assignment), res.checks)
    return act


class TypeDescriptor:
    """
    Per element the number of coordinates it moves, and the multiset of these
    counts over the group.
    """

    def __init__(self, per_element: dict[str, int], multiset: dict[int, int]):
        super().__init__()
        self.per_element = per_element
        self.multiset = multiset

    def to_dict(self) -> dict[str, Any]:
        return {"per_element": dict(self.per_element),
                "multiset": {str(k): v for k, v in sorted(self.multiset.items())}}


def type_descriptor(act: MonomialAction) -> TypeDescriptor:
    per_element = {act.label(x): act.assignment[x].moved_coordinates() for x in act.group.elements}
    multiset = Counter(act.assignment[x].moved_coordinates() for x in act.group.elements)
    return TypeDescriptor(per_element, dict(sorted(multiset.items())))
