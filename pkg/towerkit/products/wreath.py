# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
import itertools
import logging
from typing import Optional, Sequence

from towerkit.core.config import Limits, resolve_limits
from towerkit.core.errors import LimitExceeded
from towerkit.groups.group import FiniteGroup, Subgroup
from towerkit.groups.hom import GroupHom
from towerkit.groups.permutation import Permutation, direct_sum

log = logging.getLogger("towerkit")


class WreathProduct:
    """
    Regular wreath product N wr H = N^|H| x| H. The product acts on |H| blocks of
    N.degree points, block c belonging to the element H.elements[c]. A base element
    (n_c) acts on block c by n_c; the top element h moves block c to the block of
    h * H.elements[c] (left regular action). Relabelling block c by the inverse of
    H.elements[c] gives the right regular form, c -> c * h^-1, so both conventions
    describe the same group. Every element is written base * top.

    The structure (generators, element, decompose) is available for any sizes; the
    full element list is only enumerated on demand, within limits.
    """

    def __init__(self, base: FiniteGroup, top: FiniteGroup, limits: Optional[Limits] = None):
        super().__init__()

        #: N
        self.base = base

        #: H
        self.top = top

        #: Points per block.
        self.block_size = base.degree

        #: Number of blocks (= |H|).
        self.blocks = top.order

        self.degree = self.block_size * self.blocks
        self.order = base.order ** top.order * top.order

        self._limits = limits
        self._top_index = {h: i for i, h in enumerate(top.elements)}
        self._base_identity = Permutation.identity(base.degree)
        self._product: Optional[FiniteGroup] = None

    def top_perm(self, h: Permutation) -> Permutation:
        d = self.block_size
        images = []
        for c, e in enumerate(self.top.elements):
            target = self._top_index[h * e] * d
            images.extend(target + x for x in range(d))
        return Permutation(images, check=False)

    def base_perm(self, components: Sequence[Permutation]) -> Permutation:
        """
        Base element from one component per block (in H.elements order).
        """
        if len(components) != self.blocks:
            raise ValueError(f"Expected {self.blocks} base components, got {len(components)}")
        return direct_sum(components)

    def element(self, components: Sequence[Permutation], h: Permutation) -> Permutation:
        return self.base_perm(components) * self.top_perm(h)

    def decompose(self, p: Permutation) -> tuple[list[Permutation], Permutation]:
        """
        Inverse of `element`: split a product element into base components and top.
        """
        d = self.block_size
        h = self.top.elements[p(0) // d]
        base = p * self.top_perm(h).inverse()
        return [base.restrict(c * d, d) for c in range(self.blocks)], h

    def in_block(self, n: Permutation, block: int = 0) -> Permutation:
        comps = [self._base_identity] * self.blocks
        comps[block] = n
        return self.base_perm(comps)

    @property
    def generators(self) -> list[Permutation]:
        """
        N's generators in the identity block plus H's generators on the blocks; the
        transitive top action moves the first to every other block.
        """
        gens = [self.in_block(n) for n in self.base.nontrivial_generators]
        gens += [self.top_perm(h) for h in self.top.nontrivial_generators]
        if len(gens) == 0:
            gens = [Permutation.identity(self.degree)]
        return gens

    @property
    def product(self) -> FiniteGroup:
        """
        The full group, enumerated as all base * top combinations.
        """
        if self._product is None:
            lim = resolve_limits(self._limits)
            if self.order > lim.max_order:
                raise LimitExceeded("max_order", lim.max_order, self.order,
                                    f"wreath product of orders {self.base.order} and {self.top.order}")
            tops = [self.top_perm(h) for h in self.top.elements]
            elements = []
            for comps in itertools.product(self.base.elements, repeat=self.blocks):
                b = self.base_perm(comps)
                elements.extend(b * t for t in tops)
            name = f"wreath({self.base.name},{self.top.name})" \
                if self.base.name and self.top.name else ""
            self._product = FiniteGroup.trusted(self.degree, self.generators, elements, name)
            assert self._product.order == self.order
            log.debug("wreath product of order %d enumerated", self.order)
        return self._product

    def base_group(self) -> FiniteGroup:
        """
        N^|H| as a group on the same points.
        """
        gens = [self.in_block(n, c) for c in range(self.blocks) for n in self.base.nontrivial_generators]
        elements = [self.base_perm(comps)
                    for comps in itertools.product(self.base.elements, repeat=self.blocks)]
        if len(gens) == 0:
            gens = [Permutation.identity(self.degree)]
        return FiniteGroup.trusted(self.degree, gens, elements)

    def base_subgroup(self) -> Subgroup:
        G = self.product
        return Subgroup(G, self.base_group().elements)

    def base_embedding(self) -> GroupHom:
        B = self.base_group()
        return GroupHom(B, self.product, {x: x for x in B.elements})

    def top_embedding(self) -> GroupHom:
        return GroupHom(self.top, self.product, {h: self.top_perm(h) for h in self.top.elements})


def wreath_regular(N: FiniteGroup, H: FiniteGroup, limits: Optional[Limits] = None) -> WreathProduct:
    """
    N wr H with H permuting the |H| coordinates regularly; the product is enumerated
    and both embeddings are validated.
    """
    W = WreathProduct(N, H, limits)
    W.product
    base = W.base_embedding()
    top = W.top_embedding()
    assert base.is_injective() and top.is_injective()
    common = set(base.image_map.values()) & set(top.image_map.values())
    assert common == {W.product.identity}, "Base and top meet nontrivially"
    return W
