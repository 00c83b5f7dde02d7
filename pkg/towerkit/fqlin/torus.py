# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
import logging
from typing import Any, Optional

from towerkit.core.config import Limits, resolve_limits
from towerkit.core.errors import VerificationFailed
from towerkit.fqlin.groups import MatrixGroup, pgl
from towerkit.groups.group import FiniteGroup, Subgroup
from towerkit.groups.hom import GroupHom
from towerkit.groups.search import is_isomorphic
from towerkit.groups.structure import quotient_group
from towerkit.products.products import symmetric_group

log = logging.getLogger("towerkit")


def split_torus(G: MatrixGroup) -> Subgroup:
    """
    Diagonal matrices (modulo scalars in a projective group).
    """
    return Subgroup(G.group, [x for x in G.group.elements if G.underlying(x).is_diagonal()])


class TorusNormalizer:
    """
    The monomial subgroup N(T) of PGL_n(F_q), the split torus T and the Weyl
    quotient N(T)/T with an isomorphism onto the symmetric group on n points.
    """

    def __init__(self, group: MatrixGroup, normalizer: Subgroup, torus: Subgroup,
                 weyl: FiniteGroup, weyl_isomorphism: GroupHom):
        super().__init__()
        self.group = group
        self.normalizer = normalizer
        self.torus = torus
        self.weyl = weyl
        self.weyl_isomorphism = weyl_isomorphism

    def to_dict(self) -> dict[str, Any]:
        return {"group": self.group.name, "normalizer_order": self.normalizer.order,
                "torus_order": self.torus.order, "weyl_order": self.weyl.order}


def torus_normalizer_split(n: int, q: int, limits: Optional[Limits] = None) -> TorusNormalizer:
    """
    Monomial matrices modulo scalars in PGL_n(F_q): the normaliser of the split
    maximal torus. Its quotient by the torus is checked to be the symmetric group
    on n points.
    """
    lim = resolve_limits(limits)
    G = pgl(n, q, lim)
    N = Subgroup(G.group, [x for x in G.group.elements if G.underlying(x).is_monomial()])
    N.check_closed()
    T = split_torus(G)
    NG = N.as_group(f"torus_normalizer({n},{q})")
    T_in_N = Subgroup(NG, T.members)
    if not T_in_N.is_normal() or not T_in_N.is_abelian():
        raise VerificationFailed(f"Split torus is not an abelian normal subgroup of N(T) in {G.name}")
    W, _ = quotient_group(NG, T_in_N, lim)
    iso = is_isomorphic(W, symmetric_group(n, lim), lim)
    if iso is None:
        raise VerificationFailed(f"N(T)/T in {G.name} is not the symmetric group on {n} points")
    log.debug("torus_normalizer_split(%d, %d): |N| = %d, |T| = %d", n, q, N.order, T.order)
    return TorusNormalizer(G, N, T, W, iso)
