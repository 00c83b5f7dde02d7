# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
from typing import Any, Optional

from towerkit.abelian.abelian import AbelianGroup, abelian_from_group
from towerkit.core.enums import Verdict
from towerkit.core.errors import VerificationResult
from towerkit.groups.group import FiniteGroup, Subgroup
from towerkit.groups.hom import GroupHom


class SpecialStep:
    """
    One extension G/G_(i+1) -> G/G_i of a special filtration: the projection p_i,
    its abelian kernel G_i/G_(i+1) and a section s_i with image `complement`.
    """

    def __init__(self, index: int, subgroup: Subgroup, next_subgroup: Subgroup,
                 kernel_structure: AbelianGroup,
                 projection_before: GroupHom, projection_after: GroupHom,
                 step_map: GroupHom, kernel: Subgroup, complement: Subgroup, section: GroupHom):
        super().__init__()

        #: i
        self.index = index

        #: G_i
        self.subgroup = subgroup

        #: G_(i+1)
        self.next_subgroup = next_subgroup

        #: A_i = G_i / G_(i+1)
        self.kernel_structure = kernel_structure

        #: G -> G/G_i
        self.projection_before = projection_before

        #: G -> G/G_(i+1)
        self.projection_after = projection_after

        #: p_i: G/G_(i+1) -> G/G_i
        self.step_map = step_map

        #: ker p_i, the image of G_i in G/G_(i+1)
        self.kernel = kernel

        #: Complement to the kernel in G/G_(i+1).
        self.complement = complement

        #: s_i: G/G_i -> G/G_(i+1)
        self.section = section

    @property
    def quotient_before(self) -> FiniteGroup:
        return self.projection_before.codomain

    @property
    def quotient_after(self) -> FiniteGroup:
        return self.projection_after.codomain

    def to_dict(self) -> dict[str, Any]:
        return {
            "index": self.index,
            "subgroup_order": self.subgroup.order,
            "next_subgroup_order": self.next_subgroup.order,
            "kernel_structure": str(self.kernel_structure),
            "quotient_before_order": self.quotient_before.order,
            "quotient_after_order": self.quotient_after.order,
            "complement_order": self.complement.order,
            "section": {str(g): str(self.section(g)) for g in self.quotient_before.generators},
        }


class SpecialCertificate:
    """
    A filtration G = G_0 > G_1 > ... > G_r = 1 by subgroups normal in G, with an
    abelian kernel and a splitting for every step.
    """

    def __init__(self, group: FiniteGroup, chain: list[Subgroup], steps: list[SpecialStep],
                 explored_chain_count: int = 0, shortest_length: Optional[int] = None):
        super().__init__()
        self.group = group
        self.chain = chain
        self.steps = steps

        #: Chain prefixes explored by the search that produced this certificate.
        self.explored_chain_count = explored_chain_count

        #: Length of the shortest special filtration, when it was asked for.
        self.shortest_length = shortest_length

    verdict = Verdict.special

    @property
    def length(self) -> int:
        return len(self.steps)

    @property
    def chain_orders(self) -> list[int]:
        return [N.order for N in self.chain]

    def to_dict(self) -> dict[str, Any]:
        return {
            "verdict": self.verdict.name,
            "group_order": self.group.order,
            "length": self.length,
            "shortest_length": self.shortest_length,
            "chain_orders": self.chain_orders,
            "explored_chain_count": self.explored_chain_count,
            "steps": [s.to_dict() for s in self.steps],
        }


class SpecialFailure:
    """
    No special filtration was found. With no limits hit the search was exhaustive
    and G is not special; otherwise the answer is inconclusive.
    """

    def __init__(self, group: FiniteGroup, explored_chain_count: int, limits_hit: list[str],
                 reason: str):
        super().__init__()
        self.group = group
        self.explored_chain_count = explored_chain_count
        self.limits_hit = limits_hit
        self.reason = reason

    @property
    def exhaustive(self) -> bool:
        return len(self.limits_hit) == 0

    @property
    def verdict(self) -> Verdict:
        return Verdict.not_special if self.exhaustive else Verdict.inconclusive

    def to_dict(self) -> dict[str, Any]:
        return {
            "verdict": self.verdict.name,
            "group_order": self.group.order,
            "explored_chain_count": self.explored_chain_count,
            "exhaustive": self.exhaustive,
            "limits_hit": list(self.limits_hit),
            "reason": self.reason,
        }


def _check_normal(G: FiniteGroup, N: Subgroup) -> bool:
    for g in G.generators:
        ginv = g.inverse()
        for n in N.members:
            if g * n * ginv not in N.members:
                return False
    return True


def verify_certificate(cert: SpecialCertificate) -> VerificationResult:
    """
    Re-check every condition of a special filtration from the stored data alone:
    the chain runs from G to 1 through subgroups normal in G, each projection is a
    homomorphism with the right kernel, each step map is induced by them, each
    kernel is abelian of the recorded structure, and each section is a homomorphism
    splitting its step.
    """
    G = cert.group
    chain = cert.chain
    checks = 0
    if len(chain) == 0:
        return VerificationResult.failed("Empty chain")
    if chain[0].members != frozenset(G.elements):
        return VerificationResult.failed("Chain does not start at G")
    if not chain[-1].is_trivial():
        return VerificationResult.failed("Chain does not end at the trivial subgroup")
    if len(cert.steps) != len(chain) - 1:
        return VerificationResult.failed(
            f"{len(cert.steps)} steps recorded for a chain of length {len(chain) - 1}")
    for a, b in zip(chain, chain[1:]):
        if not b.members < a.members:
            return VerificationResult.failed(f"Chain is not strictly decreasing at order {a.order}")
    for N in chain:
        checks += N.order
        if not _check_normal(G, N):
            return VerificationResult.failed(f"Subgroup of order {N.order} is not normal in G", checks)

    for i, step in enumerate(cert.steps):
        where = f"step {i}"
        if step.index != i:
            return VerificationResult.failed(f"{where}: recorded index {step.index}", checks)
        if step.subgroup.members != chain[i].members or step.next_subgroup.members != chain[i + 1].members:
            return VerificationResult.failed(f"{where}: subgroups differ from the chain", checks)

        for name, proj, N in (("G -> G/G_i", step.projection_before, chain[i]),
                              ("G -> G/G_(i+1)", step.projection_after, chain[i + 1])):
            res = proj.validate()
            checks += res.checks
            if not res:
                return VerificationResult.failed(f"{where}: {name}: {res.failure}", checks)
            if proj.kernel().members != N.members:
                return VerificationResult.failed(f"{where}: kernel of {name} is not the chain subgroup", checks)
            if not proj.is_surjective():
                return VerificationResult.failed(f"{where}: {name} is not surjective", checks)

        p = step.step_map
        res = p.validate()
        checks += res.checks
        if not res:
            return VerificationResult.failed(f"{where}: p_i: {res.failure}", checks)
        for x in G.elements:
            checks += 1
            if p(step.projection_after(x)) != step.projection_before(x):
                return VerificationResult.failed(f"{where}: p_i is not induced by the projections", checks)

        image = {step.projection_after(x) for x in chain[i].members}
        if p.kernel().members != image or step.kernel.members != image:
            return VerificationResult.failed(f"{where}: kernel of p_i is not G_i/G_(i+1)", checks)
        kernel_elements = step.kernel.elements
        for a in kernel_elements:
            for b in kernel_elements:
                checks += 1
                if a * b != b * a:
                    return VerificationResult.failed(f"{where}: kernel is not abelian", checks)
        if abelian_from_group(step.kernel.as_group()) != step.kernel_structure:
            return VerificationResult.failed(f"{where}: kernel structure differs from the recorded one", checks)

        s = step.section
        if s.domain is not step.quotient_before or s.codomain is not step.quotient_after:
            return VerificationResult.failed(f"{where}: section has the wrong domain or codomain", checks)
        res = s.validate()
        checks += res.checks
        if not res:
            return VerificationResult.failed(f"{where}: section: {res.failure}", checks)
        for y in step.quotient_before.elements:
            checks += 1
            if p(s(y)) != y:
                return VerificationResult.failed(f"{where}: p_i o s_i is not the identity", checks)
        if set(s.image_map.values()) != step.complement.members:
            return VerificationResult.failed(f"{where}: section image is not the complement", checks)
    return VerificationResult.success(checks)
