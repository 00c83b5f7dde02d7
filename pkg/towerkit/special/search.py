# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
import logging
from typing import Optional, Union

from typing_extensions import TypeAlias

from towerkit.abelian.abelian import abelian_from_group
from towerkit.core.config import Limits, resolve_limits
from towerkit.core.errors import LimitExceeded
from towerkit.groups.group import FiniteGroup, Subgroup
from towerkit.groups.hom import GroupHom
from towerkit.groups.search import find_complement
from towerkit.groups.structure import derived_subgroup, is_solvable, normal_subgroups, quotient_group
from towerkit.special.certificate import SpecialCertificate, SpecialFailure, SpecialStep

log = logging.getLogger("towerkit")

SpecialResult: TypeAlias = Union[SpecialCertificate, SpecialFailure]


class _Budget(Exception):
    pass


class _ChainSearch:
    """
    Shared state of one search: quotients by normal subgroups, step outcomes and
    failed chain tails, all keyed by subgroup.
    """

    def __init__(self, G: FiniteGroup, normals: list[Subgroup], limits: Limits):
        super().__init__()
        self.G = G
        self.normals = normals
        self.limits = limits
        self.explored = 0
        self._quotients: dict[Subgroup, tuple[FiniteGroup, GroupHom]] = {}
        self._steps: dict[tuple[Subgroup, Subgroup], Optional[Subgroup]] = {}
        self._derived: dict[Subgroup, frozenset] = {}
        self.failed: set[Subgroup] = set()
        self.shortest: dict[Subgroup, Optional[int]] = {}

    def quotient(self, N: Subgroup) -> tuple[FiniteGroup, GroupHom]:
        q = self._quotients.get(N)
        if q is None:
            q = quotient_group(self.G, N, self.limits)
            self._quotients[N] = q
        return q

    def candidates(self, Gi: Subgroup) -> list[Subgroup]:
        """
        Proper subgroups N of G_i, normal in G, with G_i/N abelian: smallest first,
        ties by larger exponent, then canonical order.
        """
        D = self._derived.get(Gi)
        if D is None:
            D = derived_subgroup(Gi.as_group(), self.limits).members
            self._derived[Gi] = D
        cands = [N for N in self.normals if D <= N.members and N.members < Gi.members]
        cands.sort(key=lambda N: (N.order, -N.as_group().exponent(), N.sort_key()))
        return cands

    def step_complement(self, Gi: Subgroup, N: Subgroup) -> Optional[Subgroup]:
        """
        A complement to G_i/N in G/N, or None.
        """
        key = (Gi, N)
        if key in self._steps:
            return self._steps[key]
        self.explored += 1
        if self.explored > self.limits.special_max_chains:
            raise _Budget()
        Q, proj = self.quotient(N)
        kernel = Subgroup(Q, {proj(x) for x in Gi.members})
        H = find_complement(Q, kernel, self.limits)
        self._steps[key] = H
        return H

    def search(self, Gi: Subgroup) -> Optional[list[Subgroup]]:
        """
        Depth-first: the first chain from G_i down to 1 in candidate order.
        """
        if Gi.is_trivial():
            return [Gi]
        if Gi in self.failed:
            return None
        for N in self.candidates(Gi):
            if self.step_complement(Gi, N) is None:
                continue
            tail = self.search(N)
            if tail is not None:
                return [Gi] + tail
        self.failed.add(Gi)
        return None

    def shortest_length(self, Gi: Subgroup) -> Optional[int]:
        if Gi.is_trivial():
            return 0
        if Gi in self.shortest:
            return self.shortest[Gi]
        best: Optional[int] = None
        for N in self.candidates(Gi):
            if self.step_complement(Gi, N) is None:
                continue
            tail = self.shortest_length(N)
            if tail is not None and (best is None or tail + 1 < best):
                best = tail + 1
        self.shortest[Gi] = best
        return best

    def build_step(self, index: int, Gi: Subgroup, N: Subgroup) -> SpecialStep:
        Qb, pb = self.quotient(Gi)
        Qa, pa = self.quotient(N)
        step_images = {}
        for x in self.G.elements:
            step_images[pa(x)] = pb(x)
        p = GroupHom(Qa, Qb, step_images)
        kernel = Subgroup(Qa, {pa(x) for x in Gi.members})
        H = self.step_complement(Gi, N)
        assert H is not None
        section = GroupHom(Qb, Qa, {p(h): h for h in H.members})
        structure = abelian_from_group(kernel.as_group())
        return SpecialStep(index, Gi, N, structure, pb, pa, p, kernel, H, section)


def is_special(G: FiniteGroup, limits: Optional[Limits] = None,
               shortest: bool = False) -> SpecialResult:
    """
    Decide whether G has a filtration G = G_0 > ... > G_r = 1 by subgroups normal
    in G such that every G_i/G_(i+1) is abelian and every projection
    G/G_(i+1) -> G/G_i splits. Returns the first certificate in the deterministic
    search order, or a failure that records whether the search was exhaustive.
    With `shortest`, the length of a shortest filtration is also computed.
    """
    lim = resolve_limits(limits)
    if G.order == 1:
        return SpecialCertificate(G, [G.whole()], [], 0, 0 if shortest else None)
    try:
        if not is_solvable(G, lim):
            return SpecialFailure(G, 0, [], "group is not solvable")
        normals = normal_subgroups(G, lim)
    except LimitExceeded as e:
        return SpecialFailure(G, 0, [e.limit_name], e.message)

    state = _ChainSearch(G, normals, lim)
    try:
        chain = state.search(G.whole())
        if chain is None:
            log.debug("is_special: no filtration after %d steps", state.explored)
            return SpecialFailure(G, state.explored, [], "every chain of normal subgroups fails")
        steps = [state.build_step(i, a, b) for i, (a, b) in enumerate(zip(chain, chain[1:]))]
        best = state.shortest_length(G.whole()) if shortest else None
    except _Budget:
        return SpecialFailure(G, state.explored, ["special_max_chains"],
                              f"search budget of {lim.special_max_chains} steps exhausted")
    except LimitExceeded as e:
        return SpecialFailure(G, state.explored, [e.limit_name], e.message)

    log.debug("is_special: chain %s after %d steps", [N.order for N in chain], state.explored)
    return SpecialCertificate(G, chain, steps, state.explored, best)
