# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
import logging
from typing import Any, Optional

from towerkit.core.config import Limits, resolve_limits
from towerkit.core.errors import LimitExceeded, VerificationResult
from towerkit.groups.group import FiniteGroup
from towerkit.groups.hom import GroupHom, try_extend_from_generators
from towerkit.groups.permutation import Permutation
from towerkit.groups.search import iter_isomorphisms
from towerkit.groups.structure import center, commutator, derived_subgroup, quotient_group

log = logging.getLogger("towerkit")


class _CommutatorTable:
    """
    Central quotient of G with a lift of every class and the commutator of any two
    classes (well defined on G/Z(G)).
    """

    def __init__(self, G: FiniteGroup, limits: Optional[Limits]):
        super().__init__()
        self.group = G
        self.quotient, self.projection = quotient_group(G, center(G), limits)
        self.derived = derived_subgroup(G, limits).as_group()
        self.lift: dict[Permutation, Permutation] = {}
        for x in G.elements:
            self.lift.setdefault(self.projection(x), x)

    def commutator(self, u: Permutation, v: Permutation) -> Permutation:
        return commutator(self.lift[u], self.lift[v])


class IsoclinismWitness:
    """
    A pair of isomorphisms G/Z(G) -> H/Z(H) and [G,G] -> [H,H] compatible with the
    commutator maps.
    """

    def __init__(self, G: FiniteGroup, H: FiniteGroup, central_quotient_iso: GroupHom,
                 derived_iso: GroupHom, g_projection: GroupHom, h_projection: GroupHom):
        super().__init__()
        self.G = G
        self.H = H
        self.central_quotient_iso = central_quotient_iso
        self.derived_iso = derived_iso
        self.g_projection = g_projection
        self.h_projection = h_projection

    def verify(self) -> VerificationResult:
        """
        Both maps are validated isomorphisms and
        derived_iso([x, y]) == [x', y'] for all classes x, y of G/Z(G), where x', y'
        are lifts of their images.
        """
        checks = 0
        for f in (self.central_quotient_iso, self.derived_iso):
            res = f.validate()
            if not res:
                return VerificationResult.failed(str(res.failure), checks + res.checks)
            checks += res.checks
            if not f.is_isomorphism():
                return VerificationResult.failed(f"{f} is not bijective", checks)
        if self.g_projection.kernel().members != center(self.G).members:
            return VerificationResult.failed("G projection kernel is not the center", checks)
        if self.h_projection.kernel().members != center(self.H).members:
            return VerificationResult.failed("H projection kernel is not the center", checks)

        lift_g: dict[Permutation, Permutation] = {}
        for x in self.G.elements:
            lift_g.setdefault(self.g_projection(x), x)
        lift_h: dict[Permutation, Permutation] = {}
        for x in self.H.elements:
            lift_h.setdefault(self.h_projection(x), x)

        phi = self.central_quotient_iso
        psi = self.derived_iso
        for u in phi.domain.elements:
            for v in phi.domain.elements:
                checks += 1
                c = commutator(lift_g[u], lift_g[v])
                expected = commutator(lift_h[phi(u)], lift_h[phi(v)])
                if psi(c) != expected:
                    return VerificationResult.failed(
                        f"Commutator compatibility fails for classes {u}, {v}", checks)
        return VerificationResult.success(checks)

    def to_dict(self) -> dict[str, Any]:
        return {"central_quotient_order": self.central_quotient_iso.domain.order,
                "derived_order": self.derived_iso.domain.order}


def is_isoclinic(G: FiniteGroup, H: FiniteGroup,
                 limits: Optional[Limits] = None) -> Optional[IsoclinismWitness]:
    """
    Search for an isoclinism. Every isomorphism phi of the central quotients is
    tried in turn; phi forces psi([x, y]) = [x', y'] on commutators, which must be
    consistent and extend to an isomorphism of the derived subgroups.
    """
    lim = resolve_limits(limits)
    tg = _CommutatorTable(G, lim)
    th = _CommutatorTable(H, lim)
    for grp in (tg.quotient, th.quotient, tg.derived, th.derived):
        if grp.order > lim.iso_limit:
            raise LimitExceeded("iso_limit", lim.iso_limit, grp.order, "is_isoclinic")
    if tg.quotient.order != th.quotient.order or tg.derived.order != th.derived.order:
        return None

    Q = tg.quotient.elements
    tried = 0
    for phi in iter_isomorphisms(tg.quotient, th.quotient, lim):
        tried += 1
        forced: dict[Permutation, Permutation] = {}
        consistent = True
        for u in Q:
            for v in Q:
                c = tg.commutator(u, v)
                c2 = th.commutator(phi(u), phi(v))
                known = forced.setdefault(c, c2)
                if known != c2:
                    consistent = False
                    break
            if not consistent:
                break
        if not consistent:
            continue
        image_map = try_extend_from_generators(
            tg.derived.identity, th.derived.identity, list(forced.items()), injective=True)
        if image_map is None or len(image_map) != tg.derived.order:
            continue
        if any(image_map[c] != c2 for c, c2 in forced.items()):
            continue
        psi = GroupHom(tg.derived, th.derived, image_map)
        witness = IsoclinismWitness(G, H, phi, psi, tg.projection, th.projection)
        res = witness.verify()
        assert res, f"Isoclinism witness failed re-verification: {res.failure}"
        log.debug("is_isoclinic: witness after %d central quotient isomorphisms", tried)
        return witness
    log.debug("is_isoclinic: none after %d central quotient isomorphisms", tried)
    return None
