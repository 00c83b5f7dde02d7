# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
import logging
from collections import Counter
from typing import Iterator, Optional

from towerkit.core.config import Limits, resolve_limits
from towerkit.core.errors import LimitExceeded, NotNormal
from towerkit.groups.group import FiniteGroup, Subgroup, closure, greedy_generators
from towerkit.groups.hom import GroupHom, try_extend_from_generators
from towerkit.groups.permutation import Permutation
from towerkit.groups.structure import (center, class_size_map, derived_subgroup,
                                       quotient_group)

log = logging.getLogger("towerkit")


def small_generating_set(G: FiniteGroup) -> list[Permutation]:
    """
    The shorter of the supplied generators and a greedy generating set.
    """
    cached = G._cache.get("small_gens")
    if cached is None:
        greedy = greedy_generators(G.elements, G.identity)
        supplied = G.nontrivial_generators
        cached = greedy if len(greedy) <= len(supplied) else supplied
        G._cache["small_gens"] = cached
    assert isinstance(cached, list)
    return cached


def _element_keys(G: FiniteGroup) -> dict[Permutation, tuple[int, int]]:
    sizes = class_size_map(G)
    return {x: (x.order(), sizes[x]) for x in G.elements}


def _invariants_match(G: FiniteGroup, H: FiniteGroup) -> bool:
    if G.order != H.order:
        return False
    if G.is_abelian() != H.is_abelian():
        return False
    if Counter(_element_keys(G).values()) != Counter(_element_keys(H).values()):
        return False
    if center(G).order != center(H).order:
        return False
    if derived_subgroup(G).order != derived_subgroup(H).order:
        return False
    return True


def iter_isomorphisms(G: FiniteGroup, H: FiniteGroup,
                      limits: Optional[Limits] = None) -> Iterator[GroupHom]:
    """
    Enumerate every isomorphism G -> H in a deterministic order. Images are chosen
    for a small generating set of G, candidates restricted to elements with the same
    order and class size, and each partial assignment is extended over the subgroup
    it generates so inconsistent or non-injective prefixes are cut immediately.
    """
    lim = resolve_limits(limits)
    for grp in (G, H):
        if grp.order > lim.iso_limit:
            raise LimitExceeded("iso_limit", lim.iso_limit, grp.order, "isomorphism search")
    if not _invariants_match(G, H):
        return

    gens = small_generating_set(G)
    if len(gens) == 0:
        yield GroupHom(G, H, {G.identity: H.identity})
        return

    gkeys = _element_keys(G)
    hkeys = _element_keys(H)
    candidates = [[y for y in H.elements if hkeys[y] == gkeys[g]] for g in gens]

    def recurse(depth: int, chosen: list[Permutation]) -> Iterator[GroupHom]:
        if depth == len(gens):
            image_map = try_extend_from_generators(
                G.identity, H.identity, list(zip(gens, chosen)), injective=True)
            if image_map is not None and len(image_map) == G.order:
                yield GroupHom(G, H, image_map)
            return
        for y in candidates[depth]:
            trial = chosen + [y]
            partial = try_extend_from_generators(
                G.identity, H.identity, list(zip(gens[:depth+1], trial)), injective=True)
            if partial is None:
                continue
            yield from recurse(depth + 1, trial)

    yield from recurse(0, [])


def is_isomorphic(G: FiniteGroup, H: FiniteGroup,
                  limits: Optional[Limits] = None) -> Optional[GroupHom]:
    """
    An isomorphism G -> H, or None if the groups are not isomorphic.
    """
    return next(iter_isomorphisms(G, H, limits), None)


def find_complement(Gq: FiniteGroup, A: Subgroup,
                    limits: Optional[Limits] = None) -> Optional[Subgroup]:
    """
    A subgroup H with H & A = 1 and |H||A| = |Gq|, or None after exhausting every
    candidate. Any complement maps isomorphically onto Gq/A, so it is generated by
    lifts of a generating set of the quotient; lifts are tried in canonical order
    and a partial choice is abandoned as soon as the subgroup it generates meets A
    or outgrows its image in the quotient.
    """
    lim = resolve_limits(limits)
    if Gq.order > lim.iso_limit:
        raise LimitExceeded("iso_limit", lim.iso_limit, Gq.order, "find_complement")
    if A.parent is not Gq:
        raise ValueError("Subgroup does not belong to this group")
    if not A.is_normal():
        raise NotNormal(f"Subgroup of order {A.order} is not normal")
    if A.is_trivial():
        return Gq.whole()
    if A.is_whole():
        return Gq.trivial_subgroup()

    Q, proj = quotient_group(Gq, A, limits)
    qgens = small_generating_set(Q)
    if len(qgens) > lim.complement_generators:
        raise LimitExceeded("complement_generators", lim.complement_generators,
                            len(qgens), "find_complement")

    fibres: dict[Permutation, list[Permutation]] = {q: [] for q in qgens}
    for x in Gq.elements:
        q = proj(x)
        if q in fibres and x.order() == q.order():
            fibres[q].append(x)

    target = Gq.order // A.order
    prefix_orders = [len(closure(qgens[:i+1], Q.identity)) for i in range(len(qgens))]

    def recurse(depth: int, chosen: list[Permutation]) -> Optional[set[Permutation]]:
        if depth == len(qgens):
            return None
        for x in fibres[qgens[depth]]:
            trial = chosen + [x]
            members = _bounded_closure(trial, Gq.identity, prefix_orders[depth])
            if members is None:
                continue
            if any(m in A.members and not m.is_identity() for m in members):
                continue
            if depth + 1 == len(qgens):
                if len(members) == target:
                    return members
                continue
            res = recurse(depth + 1, trial)
            if res is not None:
                return res
        return None

    found = recurse(0, [])
    if found is None:
        log.debug("find_complement: no complement to subgroup of order %d in group of order %d",
                  A.order, Gq.order)
        return None
    H = Subgroup(Gq, found)
    assert H.order * A.order == Gq.order
    assert all(h not in A.members or h.is_identity() for h in H.members)
    return H


def _bounded_closure(gens: list[Permutation], identity: Permutation,
                     bound: int) -> Optional[set[Permutation]]:
    try:
        return closure(gens, identity, bound)
    except LimitExceeded:
        return None
