# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
from collections import deque
from typing import Mapping, Optional, Sequence, Union

from towerkit.core.config import Limits, resolve_limits
from towerkit.core.errors import LimitExceeded, NotAHomomorphism, NotAnAction
from towerkit.groups.group import FiniteGroup, close_group
from towerkit.groups.hom import GroupHom, hom_from_images
from towerkit.groups.permutation import Permutation, direct_sum
from towerkit.groups.regular import regular_representation

#: Automorphism data for one generator of the acting group: a GroupHom N -> N, or
#: the images of N's generators (mapping or sequence aligned with N.generators).
AutomorphismData = Union[GroupHom, Mapping[Permutation, Permutation], Sequence[Permutation]]


def cyclic_group(n: int) -> FiniteGroup:
    """
    Z/n as the rotation of n points.
    """
    if n < 1:
        raise ValueError(f"Cyclic group order must be positive, got {n}")
    gen = Permutation([(i + 1) % n for i in range(n)], check=False)
    elements = [gen ** k for k in range(n)]
    return FiniteGroup.trusted(n, [gen], elements, f"cyc({n})")


def direct_product(G: FiniteGroup, H: FiniteGroup, limits: Optional[Limits] = None) -> FiniteGroup:
    """
    G x H acting on the disjoint union of the point sets.
    """
    lim = resolve_limits(limits)
    if G.order * H.order > lim.max_order:
        raise LimitExceeded("max_order", lim.max_order, G.order * H.order, "direct_product")
    eg = Permutation.identity(G.degree)
    eh = Permutation.identity(H.degree)
    gens = [direct_sum([g, eh]) for g in G.nontrivial_generators] + \
        [direct_sum([eg, h]) for h in H.nontrivial_generators]
    if len(gens) == 0:
        gens = [direct_sum([eg, eh])]
    elements = [direct_sum([g, h]) for g in G.elements for h in H.elements]
    name = f"direct({G.name},{H.name})" if G.name and H.name else ""
    return FiniteGroup.trusted(G.degree + H.degree, gens, elements, name)


def _as_automorphism(N: FiniteGroup, data: AutomorphismData) -> GroupHom:
    try:
        if isinstance(data, GroupHom):
            alpha = data
            res = alpha.validate()
            if not res:
                raise NotAHomomorphism(str(res.failure))
        else:
            alpha = hom_from_images(N, N, data)
    except (NotAHomomorphism, ValueError) as e:
        raise NotAnAction(f"Action datum is not an endomorphism of N: {e}") from e
    if alpha.domain.elements != N.elements or not alpha.is_isomorphism():
        raise NotAnAction("Action datum is not an automorphism of N")
    return alpha


def semidirect_product(N: FiniteGroup, H: FiniteGroup,
                       action: Mapping[Permutation, AutomorphismData],
                       limits: Optional[Limits] = None) -> FiniteGroup:
    """
    N x| H for an action given on the generators of H. The action is first extended
    to all of H and checked to be a homomorphism H -> Aut(N); the product
    (n, h)(n', h') = (n a_h(n'), h h') is then realised on the points of N's
    element list (affine action x -> n a_h(x)) next to H's own points, which is
    faithful because H is.
    """
    lim = resolve_limits(limits)
    if N.order * H.order > lim.max_order:
        raise LimitExceeded("max_order", lim.max_order, N.order * H.order, "semidirect_product")

    gens = H.nontrivial_generators
    alphas: dict[Permutation, dict[Permutation, Permutation]] = {}
    for h in gens:
        if h not in action:
            raise NotAnAction(f"No action given for generator {h}")
        alphas[h] = _as_automorphism(N, action[h]).image_map

    # Extend to all of H; a word reaching the same element twice must act the same way.
    full: dict[Permutation, dict[Permutation, Permutation]] = {
        H.identity: {x: x for x in N.elements}}
    frontier = deque([H.identity])
    while frontier:
        h = frontier.popleft()
        ah = full[h]
        for g in gens:
            ag = alphas[g]
            gh = g * h
            composed = {x: ag[ah[x]] for x in N.elements}
            known = full.get(gh)
            if known is None:
                full[gh] = composed
                frontier.append(gh)
            elif known != composed:
                raise NotAnAction(f"Action is not a homomorphism: two words for {gh} act differently")
    assert len(full) == H.order

    index = {x: i for i, x in enumerate(N.elements)}
    size = N.order

    def realise(n: Permutation, h: Permutation) -> Permutation:
        ah = full[h]
        images = [index[n * ah[x]] for x in N.elements]
        images += [size + p for p in h.images]
        return Permutation(images, check=False)

    elements = [realise(n, h) for n in N.elements for h in H.elements]
    generators = [realise(n, H.identity) for n in N.nontrivial_generators] + \
        [realise(N.identity, h) for h in gens]
    if len(generators) == 0:
        generators = [realise(N.identity, H.identity)]
    G = FiniteGroup.trusted(size + H.degree, generators, elements)
    assert G.order == N.order * H.order, "Semidirect realisation is not faithful"
    return G


def symmetric_group(n: int, limits: Optional[Limits] = None) -> FiniteGroup:
    """
    S_n on n points, generated by a transposition and an n-cycle.
    """
    if n < 1:
        raise ValueError(f"Degree must be positive, got {n}")
    if n == 1:
        e = Permutation.identity(1)
        return FiniteGroup.trusted(1, [e], [e], "sym(1)")
    gens = [Permutation.from_cycles(n, [(0, 1)]), Permutation.from_cycles(n, [tuple(range(n))])]
    return close_group(gens, name=f"sym({n})", limits=limits)


def alternating_group(n: int, limits: Optional[Limits] = None) -> FiniteGroup:
    """
    A_n on n points, generated by the 3-cycles (0 1 k).
    """
    if n < 1:
        raise ValueError(f"Degree must be positive, got {n}")
    if n < 3:
        e = Permutation.identity(n)
        return FiniteGroup.trusted(n, [e], [e], f"alt({n})")
    gens = [Permutation.from_cycles(n, [(0, 1, k)]) for k in range(2, n)]
    return close_group(gens, name=f"alt({n})", limits=limits)


def dihedral_group(n: int) -> FiniteGroup:
    """
    Symmetries of the regular n-gon (order 2n) on its vertices. The vertex action
    is not faithful for n <= 2, so Z/2 and the Klein four group are given on 2 and
    4 points.
    """
    if n < 1:
        raise ValueError(f"Dihedral parameter must be positive, got {n}")
    if n == 1:
        return close_group([Permutation.from_cycles(2, [(0, 1)])], name="dihedral(1)")
    if n == 2:
        gens = [Permutation.from_cycles(4, [(0, 1), (2, 3)]), Permutation.from_cycles(4, [(0, 2), (1, 3)])]
        return close_group(gens, name="dihedral(2)")
    rot = Permutation([(i + 1) % n for i in range(n)], check=False)
    ref = Permutation([(-i) % n for i in range(n)], check=False)
    return close_group([rot, ref], name=f"dihedral({n})")


def heisenberg_group(p: int, limits: Optional[Limits] = None) -> FiniteGroup:
    """
    Upper unitriangular 3x3 matrices over Z/p, written (a, b, c) for the entries
    above the diagonal with (a, b, c)(a', b', c') = (a + a', b + b', c + c' + ab'),
    in its left regular permutation model.
    """
    if p < 2:
        raise ValueError(f"Heisenberg modulus must be at least 2, got {p}")
    lim = resolve_limits(limits)
    if p ** 3 > lim.max_order:
        raise LimitExceeded("max_order", lim.max_order, p ** 3, f"heisenberg_group({p})")
    elements = [(a, b, c) for a in range(p) for b in range(p) for c in range(p)]

    def mul(x: tuple[int, int, int], y: tuple[int, int, int]) -> tuple[int, int, int]:
        return ((x[0] + y[0]) % p, (x[1] + y[1]) % p, (x[2] + y[2] + x[0] * y[1]) % p)

    G, _ = regular_representation(elements, mul, [(1, 0, 0), (0, 1, 0)], f"heis({p})")
    return G
