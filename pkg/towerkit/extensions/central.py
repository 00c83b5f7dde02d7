# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
import logging
from typing import Any, Optional

from towerkit.abelian.abelian import (AbelianBasis, AbelianGroup, Coordinates, abelian_basis,
                                      abelian_from_group)
from towerkit.core.config import Limits, resolve_limits
from towerkit.core.errors import LimitExceeded, VerificationResult
from towerkit.extensions.fc import FcElement, FcGroup
from towerkit.groups.group import FiniteGroup, Subgroup
from towerkit.groups.hom import GroupHom
from towerkit.groups.permutation import Permutation, direct_sum
from towerkit.groups.structure import center, derived_subgroup, quotient_group

log = logging.getLogger("towerkit")


class CentralExtensionData:
    """
    A central extension 1 -> Z -> G -> A -> 1 with A abelian, given by G and the
    central subgroup Z. The map G -> A is available in invariant-factor
    coordinates through `coordinates`.
    """

    def __init__(self, group: FiniteGroup, central_kernel: Subgroup,
                 abelian_quotient: AbelianGroup, limits: Optional[Limits] = None):
        super().__init__()

        #: G^c
        self.group = group

        #: Z, central in G^c.
        self.central_kernel = central_kernel

        #: A = G^c / Z
        self.abelian_quotient = abelian_quotient

        self._limits = limits
        self._quotient: Optional[tuple[FiniteGroup, GroupHom, AbelianBasis]] = None

    def quotient_map(self) -> tuple[FiniteGroup, GroupHom, AbelianBasis]:
        """
        G/Z as a permutation group, the projection, and a basis of G/Z whose
        structure is `abelian_quotient`.
        """
        if self._quotient is None:
            Q, proj = quotient_group(self.group, self.central_kernel, self._limits)
            basis = abelian_basis(Q)
            assert basis.structure == self.abelian_quotient, \
                f"Quotient basis {basis.structure} differs from {self.abelian_quotient}"
            self._quotient = (Q, proj, basis)
        return self._quotient

    def coordinates(self, x: Permutation) -> Coordinates:
        _, proj, basis = self.quotient_map()
        return basis.coords(proj(x))

    def validate(self) -> VerificationResult:
        checks = 0
        zc = center(self.group)
        if not self.central_kernel.members <= zc.members:
            return VerificationResult.failed("Kernel is not central")
        Q, _, _ = self.quotient_map()
        checks += Q.order
        if not Q.is_abelian():
            return VerificationResult.failed("Quotient by the kernel is not abelian", checks)
        if abelian_from_group(Q) != self.abelian_quotient:
            return VerificationResult.failed("Quotient structure differs from the recorded one", checks)
        return VerificationResult.success(checks)

    def to_dict(self) -> dict[str, Any]:
        return {"group_order": self.group.order, "central_kernel_order": self.central_kernel.order,
                "abelian_quotient": str(self.abelian_quotient)}


def detect_central_extension(G: FiniteGroup,
                             limits: Optional[Limits] = None) -> Optional[CentralExtensionData]:
    """
    Recognise G as a central extension of an abelian group. Abelian G is taken as
    the extension of A = G by the trivial group; a group of class two uses the full
    center. Returns None for class greater than two.
    """
    if G.is_abelian():
        return CentralExtensionData(G, G.trivial_subgroup(), abelian_from_group(G), limits)
    Z = center(G)
    if not derived_subgroup(G, limits).members <= Z.members:
        return None
    Q, _ = quotient_group(G, Z, limits)
    return CentralExtensionData(G, Z, abelian_from_group(Q), limits)


class PullbackCover:
    """
    The fibre product E = F^c(A) x_A G^c with its projection onto G^c. The kernel
    {((0, z), 1)} is a copy of the exterior square of A, central in E.
    """

    def __init__(self, data: CentralExtensionData, fc: FcGroup, group: FiniteGroup,
                 projection: GroupHom, kernel: Subgroup, pairs: dict[Permutation, tuple[FcElement, Permutation]]):
        super().__init__()
        self.data = data
        self.fc = fc

        #: E
        self.group = group

        #: E -> G^c
        self.projection = projection

        #: ker(E -> G^c)
        self.kernel = kernel

        #: Each element of E as its pair (f, g).
        self.pairs = pairs

    def verify(self) -> VerificationResult:
        """
        Exactness of 1 -> kernel -> E -> G^c -> 1 plus compatibility of the two maps
        to A, re-checked on every element.
        """
        checks = 0
        res = self.projection.validate()
        if not res:
            return VerificationResult.failed(f"Projection: {res.failure}", res.checks)
        checks += res.checks
        if not self.projection.is_surjective():
            return VerificationResult.failed("Projection is not surjective", checks)
        if self.projection.kernel().members != self.kernel.members:
            return VerificationResult.failed("Kernel differs from the projection kernel", checks)
        if self.kernel.order != self.fc.commutator_part.order:
            return VerificationResult.failed(
                f"Kernel order {self.kernel.order} differs from |A ^ A| = {self.fc.commutator_part.order}",
                checks)
        zc = center(self.group)
        if not self.kernel.members <= zc.members:
            return VerificationResult.failed("Kernel is not central", checks)
        if not self.kernel.is_abelian():
            return VerificationResult.failed("Kernel is not abelian", checks)
        for x, (f, g) in self.pairs.items():
            checks += 1
            if self.projection(x) != g:
                return VerificationResult.failed(f"Projection of {x} is not its G^c component", checks)
            if self.fc.project(f) != self.data.coordinates(g):
                return VerificationResult.failed(f"Components of {x} have different images in A", checks)
        return VerificationResult.success(checks)

    def to_dict(self) -> dict[str, Any]:
        return {"cover_order": self.group.order, "kernel_order": self.kernel.order,
                "fc_order": self.fc.order, "base_order": self.data.group.order,
                "abelian_quotient": str(self.data.abelian_quotient),
                "exterior_square": str(self.fc.commutator_part)}


def pullback_cover(data: CentralExtensionData, limits: Optional[Limits] = None) -> PullbackCover:
    """
    Build E = {(f, g) : f and g have the same image in A} on the regular points of
    F^c(A) next to the points of G^c. E is generated by the pairs ((rho(g), 0), g)
    for generators g of G^c together with the central wedge units.
    """
    lim = resolve_limits(limits)
    A = data.abelian_quotient
    F = FcGroup(A)
    Gc = data.group
    size = F.order * data.central_kernel.order
    if size > lim.max_order:
        raise LimitExceeded("max_order", lim.max_order, size, "pullback_cover")
    res = F.verify()
    assert res, f"F^c({A}) failed verification: {res.failure}"

    fc_rows: dict[FcElement, Permutation] = {}

    def row(f: FcElement) -> Permutation:
        p = fc_rows.get(f)
        if p is None:
            p = Permutation(F.regular_row(f), check=False)
            fc_rows[f] = p
        return p

    zs = sorted({z for a, z in F.elements() if a == A.zero})

    pairs: dict[Permutation, tuple[FcElement, Permutation]] = {}
    for g in Gc.elements:
        a = data.coordinates(g)
        for z in zs:
            f = (a, z)
            pairs[direct_sum([row(f), g])] = (f, g)
    assert len(pairs) == size

    e_gc = Gc.identity
    gens = [direct_sum([row((data.coordinates(g), F.identity[1])), g]) for g in Gc.nontrivial_generators]
    gens += [direct_sum([row(F.wedge_unit(k)), e_gc]) for k in range(len(F.pairs))]
    if len(gens) == 0:
        gens = [direct_sum([row(F.identity), e_gc])]
    name = f"cover({Gc.name})" if Gc.name else ""
    E = FiniteGroup.trusted(F.order + Gc.degree, gens, pairs.keys(), name)

    image_map = {x: g for x, (_, g) in pairs.items()}
    projection = GroupHom(E, Gc, image_map)
    kernel = Subgroup(E, [x for x, g in image_map.items() if g == e_gc])
    cover = PullbackCover(data, F, E, projection, kernel, pairs)
    log.debug("pullback_cover: |E| = %d over |G^c| = %d, kernel %d", E.order, Gc.order, kernel.order)
    return cover
