# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
from collections import deque
from typing import Mapping, Optional, Sequence, Union

from towerkit.core.errors import NotAHomomorphism, VerificationResult
from towerkit.groups.group import FiniteGroup, Subgroup
from towerkit.groups.permutation import Permutation


class GroupHom:
    """
    A homomorphism between two FiniteGroups, stored as a total map on domain
    elements. Construction validates the map: it must be total, land in the codomain,
    send the identity to the identity and satisfy f(g*x) == f(g)*f(x) for every
    domain generator g and every element x. As every element is a product of
    generators, that identity implies f(x*y) == f(x)*f(y) for all pairs.
    """

    def __init__(self, domain: FiniteGroup, codomain: FiniteGroup,
                 image_map: Mapping[Permutation, Permutation], check: bool = True):
        super().__init__()

        #: Source group.
        self.domain = domain

        #: Target group.
        self.codomain = codomain

        #: Image of every domain element.
        self.image_map: dict[Permutation, Permutation] = dict(image_map)

        if check:
            res = self.validate()
            if not res:
                raise NotAHomomorphism(str(res.failure))

    @staticmethod
    def unchecked(domain: FiniteGroup, codomain: FiniteGroup,
                  image_map: Mapping[Permutation, Permutation]) -> 'GroupHom':
        """
        Build without validation, e.g. when loading a certificate that will be
        re-verified independently.
        """
        return GroupHom(domain, codomain, image_map, check=False)

    def __call__(self, x: Permutation) -> Permutation:
        return self.image_map[x]

    def __repr__(self) -> str:
        return f"GroupHom({self.domain} -> {self.codomain})"

    def validate(self) -> VerificationResult:
        """
        Re-check the homomorphism property from scratch.
        """
        checks = 0
        if len(self.image_map) != self.domain.order:
            return VerificationResult.failed(
                f"Map is defined on {len(self.image_map)} of {self.domain.order} elements")
        for x in self.domain.elements:
            y = self.image_map.get(x)
            if y is None:
                return VerificationResult.failed(f"No image for {x}")
            if y not in self.codomain:
                return VerificationResult.failed(f"Image {y} of {x} outside codomain")
        if not self.image_map[self.domain.identity].is_identity():
            return VerificationResult.failed("Identity is not mapped to identity")
        for g in self.domain.nontrivial_generators:
            fg = self.image_map[g]
            for x in self.domain.elements:
                checks += 1
                if self.image_map[g * x] != fg * self.image_map[x]:
                    return VerificationResult.failed(
                        f"f({g} * {x}) != f({g}) * f({x})", checks)
        return VerificationResult.success(checks)

    def verify_exhaustive(self) -> VerificationResult:
        """
        Check f(x*y) == f(x)*f(y) on every pair. Quadratic; meant for tests.
        """
        checks = 0
        for x in self.domain.elements:
            fx = self.image_map[x]
            for y in self.domain.elements:
                checks += 1
                if self.image_map[x * y] != fx * self.image_map[y]:
                    return VerificationResult.failed(f"f({x} * {y}) != f({x}) * f({y})", checks)
        return VerificationResult.success(checks)

    def kernel(self) -> Subgroup:
        members = [x for x, y in self.image_map.items() if y.is_identity()]
        return Subgroup(self.domain, members)

    def image(self) -> Subgroup:
        return Subgroup(self.codomain, set(self.image_map.values()),
                        [self.image_map[g] for g in self.domain.generators])

    def is_injective(self) -> bool:
        return len(set(self.image_map.values())) == self.domain.order

    def is_surjective(self) -> bool:
        return len(set(self.image_map.values())) == self.codomain.order

    def is_isomorphism(self) -> bool:
        return self.domain.order == self.codomain.order and self.is_injective()

    def compose(self, first: 'GroupHom') -> 'GroupHom':
        """
        Returns ``self o first`` (apply `first`, then self).
        """
        assert first.codomain is self.codomain or first.codomain.elements == self.domain.elements
        return GroupHom(first.domain, self.codomain,
                        {x: self.image_map[y] for x, y in first.image_map.items()},
                        check=False)

    def inverse(self) -> 'GroupHom':
        if not self.is_isomorphism():
            raise ValueError("Only isomorphisms can be inverted")
        return GroupHom(self.codomain, self.domain,
                        {y: x for x, y in self.image_map.items()}, check=False)

    def restrict(self, sub: Subgroup) -> 'GroupHom':
        grp = sub.as_group()
        return GroupHom(grp, self.codomain, {x: self.image_map[x] for x in grp.elements},
                        check=False)


def hom_from_images(domain: FiniteGroup, codomain: FiniteGroup,
                    generator_images: Union[Mapping[Permutation, Permutation],
                                            Sequence[Permutation]]) -> GroupHom:
    """
    Extend images of a generating set to a homomorphism by word reconstruction.
    `generator_images` is either a mapping from generators to images or a sequence
    aligned with ``domain.generators``. Every edge x -> g*x of the Cayley graph is
    checked, so an inconsistent assignment raises NotAHomomorphism.
    """
    if isinstance(generator_images, Mapping):
        pairs = list(generator_images.items())
    else:
        if len(generator_images) != len(domain.generators):
            raise ValueError(f"Expected {len(domain.generators)} generator images, "
                             f"got {len(generator_images)}")
        pairs = list(zip(domain.generators, generator_images))

    for g, y in pairs:
        if g not in domain:
            raise ValueError(f"{g} is not an element of the domain")
        if y not in codomain:
            raise NotAHomomorphism(f"Image {y} of {g} is not in the codomain")

    image_map = _extend_from_generators(domain.identity, codomain.identity, pairs)
    if len(image_map) != domain.order:
        raise ValueError(f"Generators given reach {len(image_map)} of "
                         f"{domain.order} elements")
    return GroupHom(domain, codomain, image_map, check=False)


def _extend_from_generators(identity: Permutation, target_identity: Permutation,
                            pairs: Sequence[tuple[Permutation, Permutation]],
                            injective: bool = False) -> dict[Permutation, Permutation]:
    image_map = {identity: target_identity}
    used = {target_identity}
    frontier = deque([identity])
    while frontier:
        x = frontier.popleft()
        fx = image_map[x]
        for g, fg in pairs:
            y = g * x
            fy = fg * fx
            known = image_map.get(y)
            if known is None:
                if injective and fy in used:
                    raise NotAHomomorphism(f"Map is not injective at {y}")
                image_map[y] = fy
                used.add(fy)
                frontier.append(y)
            elif known != fy:
                raise NotAHomomorphism(
                    f"Inconsistent images for {y}: {known} and {fy} (relation fails)")
    return image_map


def try_extend_from_generators(identity: Permutation, target_identity: Permutation,
                               pairs: Sequence[tuple[Permutation, Permutation]],
                               injective: bool = False) -> Optional[dict[Permutation, Permutation]]:
    """
    As hom_from_images on the subgroup generated by the pairs, returning None
    instead of raising when the assignment is inconsistent.
    """
    try:
        return _extend_from_generators(identity, target_identity, pairs, injective)
    except NotAHomomorphism:
        return None
