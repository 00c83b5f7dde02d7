# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
import logging
from typing import Any, Optional

from sympy import isprime

from towerkit.core.config import Limits, resolve_limits
from towerkit.core.enums import Verdict
from towerkit.fqlin.groups import MatrixGroup, pgl
from towerkit.fqlin.unitriangular import unitriangular
from towerkit.groups.group import Subgroup
from towerkit.groups.search import is_isomorphic
from towerkit.groups.structure import sylow_subgroup
from towerkit.special.search import SpecialResult, is_special

log = logging.getLogger("towerkit")


class LinearSylowReport:
    """
    A Sylow l-subgroup of PGL_n(F_q) with the outcome of the special search on it,
    and for l = p whether it is isomorphic to the unitriangular group.
    """

    def __init__(self, n: int, q: int, l: int, group: MatrixGroup, sylow: Subgroup,
                 special: SpecialResult, unitriangular_isomorphic: Optional[bool]):
        super().__init__()
        self.n = n
        self.q = q
        self.l = l
        self.group = group
        self.sylow = sylow
        self.special = special
        self.unitriangular_isomorphic = unitriangular_isomorphic

    @property
    def verdict(self) -> Verdict:
        return self.special.verdict

    def to_dict(self) -> dict[str, Any]:
        return {
            "group": self.group.name,
            "group_order": self.group.group.order,
            "prime": self.l,
            "defining_characteristic": self.l == self.group.field.p,
            "sylow_order": self.sylow.order,
            "sylow_abelian": self.sylow.is_abelian(),
            "verdict": self.verdict.name,
            "special": self.special.to_dict(),
            "unitriangular_isomorphic": self.unitriangular_isomorphic,
        }


def analyze_sylow_linear(n: int, q: int, l: int, limits: Optional[Limits] = None) -> LinearSylowReport:
    """
    Compute Syl_l(PGL_n(F_q)) and decide whether it is special. In the defining
    characteristic the Sylow subgroup is also compared with U_n(F_q).
    """
    if not isprime(l):
        raise ValueError(f"{l} is not prime")
    lim = resolve_limits(limits)
    G = pgl(n, q, lim)
    S = sylow_subgroup(G.group, l, lim)
    P = S.as_group(f"sylow({G.name},{l})")
    special = is_special(P, lim)
    iso: Optional[bool] = None
    if l == G.field.p:
        U = unitriangular(n, q, lim).top.group
        iso = is_isomorphic(P, U, lim) is not None
    log.debug("analyze_sylow_linear(%d, %d, %d): |S| = %d, %s", n, q, l, S.order, special.verdict.name)
    return LinearSylowReport(n, q, l, G, S, special, iso)
