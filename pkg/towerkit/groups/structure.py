# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
import logging
from collections import Counter
from typing import Iterable, Optional

from sympy import isprime, multiplicity

from towerkit.core.config import Limits, resolve_limits
from towerkit.core.errors import LimitExceeded, NotNormal
from towerkit.groups.group import FiniteGroup, Subgroup, closure
from towerkit.groups.hom import GroupHom, _extend_from_generators
from towerkit.groups.permutation import Permutation

log = logging.getLogger("towerkit")


def commutator(a: Permutation, b: Permutation) -> Permutation:
    """
    Returns ``a b a^-1 b^-1``.
    """
    return a * b * a.inverse() * b.inverse()


def centralizer(G: FiniteGroup, elements: Iterable[Permutation]) -> Subgroup:
    elems = list(elements)
    members = [z for z in G.elements if all(z * g == g * z for g in elems)]
    return Subgroup(G, members)


def center(G: FiniteGroup) -> Subgroup:
    """
    Elements commuting with every element; checking the generators suffices.
    """
    cached = G._cache.get("center")
    if cached is None:
        cached = centralizer(G, G.nontrivial_generators)
        G._cache["center"] = cached
    assert isinstance(cached, Subgroup)
    return cached


def normalizer(G: FiniteGroup, H: Subgroup) -> Subgroup:
    gens = H.generators
    members = []
    for g in G.elements:
        ginv = g.inverse()
        if all(g * h * ginv in H.members for h in gens):
            members.append(g)
    return Subgroup(G, members)


def normal_closure(G: FiniteGroup, elements: Iterable[Permutation],
                   limits: Optional[Limits] = None) -> Subgroup:
    """
    Smallest normal subgroup of G containing the given elements.
    """
    max_order = resolve_limits(limits).max_order
    gens = [x for x in elements if not x.is_identity()]
    members = closure(gens, G.identity, max_order, "normal_closure")
    changed = True
    while changed:
        changed = False
        for g in G.nontrivial_generators:
            ginv = g.inverse()
            for s in list(gens):
                c = g * s * ginv
                if c not in members:
                    gens.append(c)
                    members = closure(gens, G.identity, max_order, "normal_closure")
                    changed = True
    return Subgroup(G, members, gens)


def derived_subgroup(G: FiniteGroup, limits: Optional[Limits] = None) -> Subgroup:
    """
    The commutator subgroup [G, G]: normal closure of generator commutators.
    """
    cached = G._cache.get("derived")
    if cached is None:
        gens = G.nontrivial_generators
        comms = [commutator(a, b) for i, a in enumerate(gens) for b in gens[i+1:]]
        cached = normal_closure(G, comms, limits)
        G._cache["derived"] = cached
    assert isinstance(cached, Subgroup)
    return cached


def derived_series(G: FiniteGroup, limits: Optional[Limits] = None) -> list[Subgroup]:
    """
    G = G^(0) >= G^(1) >= ... down to the first repeated term, as subgroups of G.
    """
    series = [G.whole()]
    current = G
    while True:
        d = derived_subgroup(current, limits)
        nxt = Subgroup(G, d.members, d.generators)
        if nxt.order == series[-1].order:
            break
        series.append(nxt)
        current = d.as_group()
    return series


def is_solvable(G: FiniteGroup, limits: Optional[Limits] = None) -> bool:
    return derived_series(G, limits)[-1].is_trivial()


def is_class_at_most_two(G: FiniteGroup) -> bool:
    return derived_subgroup(G).members <= center(G).members


def conjugacy_classes(G: FiniteGroup) -> list[list[Permutation]]:
    """
    Partition of G into conjugacy classes, each in canonical order, classes ordered
    by size then first element.
    """
    cached = G._cache.get("classes")
    if cached is None:
        gens = [(g, g.inverse()) for g in G.nontrivial_generators]
        seen: set[Permutation] = set()
        classes: list[list[Permutation]] = []
        for x in G.elements:
            if x in seen:
                continue
            orbit = {x}
            frontier = [x]
            while frontier:
                y = frontier.pop()
                for g, ginv in gens:
                    c = g * y * ginv
                    if c not in orbit:
                        orbit.add(c)
                        frontier.append(c)
            seen |= orbit
            classes.append(sorted(orbit))
        classes.sort(key=lambda c: (len(c), c[0].images))
        cached = classes
        G._cache["classes"] = cached
    assert isinstance(cached, list)
    return cached


def class_size_map(G: FiniteGroup) -> dict[Permutation, int]:
    res: dict[Permutation, int] = {}
    for c in conjugacy_classes(G):
        for x in c:
            res[x] = len(c)
    return res


def element_orders(G: FiniteGroup) -> dict[int, int]:
    """
    Multiset of element orders as {order: count}, sorted by order.
    """
    counts = Counter(x.order() for x in G.elements)
    return dict(sorted(counts.items()))


def normal_subgroups(G: FiniteGroup, limits: Optional[Limits] = None) -> list[Subgroup]:
    """
    Every normal subgroup of G, sorted by canonical subgroup order. Each normal
    subgroup is a union of conjugacy classes, hence a join of the normal closures of
    single classes; the joins are enumerated until no new subgroup appears.
    """
    lim = resolve_limits(limits)
    if G.order > lim.iso_limit:
        raise LimitExceeded("iso_limit", lim.iso_limit, G.order, "normal_subgroups")
    cached = G._cache.get("normal_subgroups")
    if cached is not None:
        assert isinstance(cached, list)
        return cached

    class_closures: list[Subgroup] = []
    seen_closures: set[frozenset[Permutation]] = set()
    for c in conjugacy_classes(G):
        if c[0].is_identity():
            continue
        members = closure(c, G.identity)
        key = frozenset(members)
        if key not in seen_closures:
            seen_closures.add(key)
            class_closures.append(Subgroup(G, members))

    trivial = G.trivial_subgroup()
    found: dict[frozenset[Permutation], Subgroup] = {trivial.members: trivial}
    queue = [trivial]
    while queue:
        N = queue.pop()
        for M in class_closures:
            if M.members <= N.members:
                continue
            gens = list(N.generators) + list(M.generators)
            members = frozenset(closure(gens, G.identity))
            if members not in found:
                J = Subgroup(G, members, gens)
                found[members] = J
                queue.append(J)

    result = sorted(found.values(), key=lambda s: s.sort_key())
    for N in result:
        assert N.is_normal(), "Join of normal subgroups is not conjugation stable"
    log.debug("normal_subgroups: %d found in group of order %d", len(result), G.order)
    G._cache["normal_subgroups"] = result
    return result


def quotient_group(G: FiniteGroup, N: Subgroup,
                   limits: Optional[Limits] = None) -> tuple[FiniteGroup, GroupHom]:
    """
    Realise G/N as a permutation group on the left cosets of N (degree = index)
    and return it with the validated projection, whose kernel is exactly N.
    """
    if N.parent is not G:
        raise ValueError("Subgroup does not belong to this group")
    if not N.is_normal():
        raise NotNormal(f"Subgroup of order {N.order} is not normal in {G}")

    coset_of: dict[Permutation, int] = {}
    reps: list[Permutation] = []
    for x in G.elements:
        if x in coset_of:
            continue
        k = len(reps)
        reps.append(x)
        for n in N.elements:
            coset_of[x * n] = k
    index = len(reps)
    assert index * N.order == G.order

    def action(x: Permutation) -> Permutation:
        return Permutation([coset_of[x * r] for r in reps], check=False)

    gen_images = [action(g) for g in G.generators]
    image_map = _extend_from_generators(G.identity, Permutation.identity(index),
                                        list(zip(G.generators, gen_images)))
    assert len(image_map) == G.order
    name = f"{G.name}/N{N.order}" if G.name else ""
    Q = FiniteGroup.trusted(index, gen_images, set(image_map.values()), name)
    assert Q.order == index, "Coset action is not regular on cosets"
    proj = GroupHom(G, Q, image_map, check=False)
    kernel = {x for x, y in image_map.items() if y.is_identity()}
    assert kernel == N.members, "Projection kernel differs from N"
    return Q, proj


def sylow_subgroup(G: FiniteGroup, l: int, limits: Optional[Limits] = None) -> Subgroup:
    """
    A Sylow l-subgroup of G. Starting from the trivial group, an l-subgroup P that is
    not yet Sylow always has an element g of its normalizer outside P with g^l in P;
    adjoining the first such g multiplies |P| by l.
    """
    if not isprime(l):
        raise ValueError(f"{l} is not prime")
    lim = resolve_limits(limits)
    if G.order > lim.max_order:
        raise LimitExceeded("max_order", lim.max_order, G.order, "sylow_subgroup")
    target = l ** multiplicity(l, G.order)
    gens: list[Permutation] = []
    members: set[Permutation] = {G.identity}
    while len(members) < target:
        found = None
        for g in G.elements:
            if g in members or (g ** l) not in members:
                continue
            ginv = g.inverse()
            if all(g * h * ginv in members for h in gens):
                found = g
                break
        assert found is not None, "Sylow extension step found no candidate"
        gens.append(found)
        members = closure(gens, G.identity, target, "sylow_subgroup")
    assert len(members) == target
    return Subgroup(G, members, gens)
