# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
import logging
from typing import Optional

from sympy import isprime

from towerkit.core.config import Limits, resolve_limits
from towerkit.core.errors import LimitExceeded
from towerkit.core.utils import digits, legendre_valuation
from towerkit.groups.group import FiniteGroup, close_group
from towerkit.groups.permutation import Permutation, direct_sum
from towerkit.products.products import cyclic_group
from towerkit.products.wreath import WreathProduct

log = logging.getLogger("towerkit")


def _iterated_wreath(k: int, l: int, limits: Optional[Limits]) -> FiniteGroup:
    """
    C_l wr C_l wr ... (k factors) on l^k points.
    """
    C = cyclic_group(l)
    P = C
    for _ in range(k - 1):
        W = WreathProduct(P, C, limits)
        P = close_group(W.generators, limits=limits)
    return P


def sylow_symmetric(n: int, l: int, limits: Optional[Limits] = None) -> FiniteGroup:
    """
    A Sylow l-subgroup of the symmetric group on n points: writing
    n = sum a_k l^k, it is the direct product of a_k copies of the k-fold iterated
    wreath product of C_l, acting on consecutive blocks of l^k points.
    """
    if not isprime(l):
        raise ValueError(f"{l} is not prime")
    if n < 1:
        raise ValueError(f"Need at least one point, got {n}")
    lim = resolve_limits(limits)
    expected = l ** legendre_valuation(n, l)
    if expected > lim.max_order:
        raise LimitExceeded("max_order", lim.max_order, expected, f"sylow_symmetric({n},{l})")

    factors: list[FiniteGroup] = []
    for k, a in enumerate(digits(n, l)):
        if k == 0 or a == 0:
            continue
        P = _iterated_wreath(k, l, lim)
        factors += [P] * a

    used = sum(P.degree for P in factors)
    gens = []
    offset = 0
    for P in factors:
        for g in P.nontrivial_generators:
            parts = [Permutation.identity(offset), g, Permutation.identity(n - offset - P.degree)]
            gens.append(direct_sum(parts))
        offset += P.degree
    assert used <= n
    if len(gens) == 0:
        gens = [Permutation.identity(n)]

    G = close_group(gens, name=f"sylow(sym({n}),{l})", limits=lim)
    assert G.order == expected, f"Order {G.order} differs from l^v_l(n!) = {expected}"
    log.debug("sylow_symmetric(%d, %d): order %d from %d blocks", n, l, G.order, len(factors))
    return G
