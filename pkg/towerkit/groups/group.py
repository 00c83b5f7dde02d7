# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
from collections import deque
from math import lcm
from typing import TYPE_CHECKING, Iterable, Iterator, Optional, Sequence

from towerkit.core.config import Limits, resolve_limits
from towerkit.core.errors import DegreeMismatch, LimitExceeded
from towerkit.groups.permutation import Permutation

if TYPE_CHECKING:
    from towerkit.groups.hom import GroupHom


def closure(generators: Sequence[Permutation], identity: Permutation,
            max_order: Optional[int] = None, where: str = "closure") -> set[Permutation]:
    """
    Breadth-first closure of a set of permutations under composition. In a finite
    group right multiplication by the generators reaches every element, inverses
    included.
    """
    elements = {identity}
    frontier = deque([identity])
    gens = [g for g in generators if not g.is_identity()]
    while frontier:
        x = frontier.popleft()
        for g in gens:
            y = x * g
            if y not in elements:
                elements.add(y)
                if max_order is not None and len(elements) > max_order:
                    raise LimitExceeded("max_order", max_order, len(elements), where)
                frontier.append(y)
    return elements


class FiniteGroup:
    """
    A concrete finite permutation group with every element enumerated in canonical
    (lexicographic) order. Construct with `close_group`, or `FiniteGroup.trusted`
    when the element set is already known to be closed.
    """

    def __init__(self, degree: int, generators: Sequence[Permutation],
                 elements: Iterable[Permutation], name: str = ""):
        super().__init__()

        #: Number of points acted on.
        self.degree = degree

        #: Generators, as supplied (identity generators are kept).
        self.generators: tuple[Permutation, ...] = tuple(generators)

        #: All elements in canonical order; the identity is always first.
        self.elements: tuple[Permutation, ...] = tuple(sorted(elements))

        #: Optional human readable name, e.g. from the catalog.
        self.name = name

        self._index = {x: i for i, x in enumerate(self.elements)}
        self._cache: dict[str, object] = {}

        assert len(self.elements) > 0 and self.elements[0].is_identity()
        for g in self.generators:
            assert g in self._index, "Generator outside element set"

    @staticmethod
    def trusted(degree: int, generators: Sequence[Permutation],
                elements: Iterable[Permutation], name: str = "") -> 'FiniteGroup':
        """
        Wrap an element set known to be a group (regular representations, products).
        Only cheap consistency checks are performed.
        """
        return FiniteGroup(degree, generators, elements, name)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Permutation:
        return self.elements[0]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.elements)

    def __contains__(self, x: object) -> bool:
        return x in self._index

    def index_of(self, x: Permutation) -> int:
        return self._index[x]

    def __repr__(self) -> str:
        nm = f"{self.name}, " if self.name else ""
        return f"FiniteGroup({nm}order={self.order}, degree={self.degree})"

    @property
    def nontrivial_generators(self) -> list[Permutation]:
        res = [g for g in self.generators if not g.is_identity()]
        return res

    def is_abelian(self) -> bool:
        cached = self._cache.get("abelian")
        if cached is None:
            gens = self.nontrivial_generators
            cached = all(a * b == b * a for i, a in enumerate(gens) for b in gens[i+1:])
            self._cache["abelian"] = cached
        return bool(cached)

    def element_order(self, x: Permutation) -> int:
        return x.order()

    def exponent(self) -> int:
        return lcm(1, *[x.order() for x in self.elements])

    def whole(self) -> 'Subgroup':
        return Subgroup(self, self.elements, self.generators)

    def trivial_subgroup(self) -> 'Subgroup':
        return Subgroup(self, [self.identity], [])

    def subgroup(self, members: Iterable[Permutation],
                 generators: Optional[Sequence[Permutation]] = None,
                 check: bool = True) -> 'Subgroup':
        """
        Wrap a set of members as a subgroup. With `check`, closure is verified.
        """
        sub = Subgroup(self, members, generators)
        if check:
            sub.check_closed()
        return sub

    def subgroup_generated(self, generators: Iterable[Permutation],
                           limits: Optional[Limits] = None) -> 'Subgroup':
        gens = list(generators)
        for g in gens:
            if g not in self._index:
                raise ValueError(f"{g} is not an element of {self}")
        members = closure(gens, self.identity, resolve_limits(limits).max_order,
                          "subgroup_generated")
        return Subgroup(self, members, gens)


class Subgroup:
    """
    A subgroup of a FiniteGroup, stored as its member set. Equality and hashing are
    by parent and members, so subgroups can key memo tables.
    """

    def __init__(self, parent: FiniteGroup, members: Iterable[Permutation],
                 generators: Optional[Sequence[Permutation]] = None):
        super().__init__()

        #: Ambient group.
        self.parent = parent

        #: Member set.
        self.members: frozenset[Permutation] = frozenset(members)

        self._generators = tuple(generators) if generators is not None else None
        self._sorted: Optional[tuple[Permutation, ...]] = None
        self._as_group: Optional[FiniteGroup] = None

        assert parent.identity in self.members, "Subgroup must contain the identity"
        assert parent.order % len(self.members) == 0, \
            f"Lagrange violated: {len(self.members)} does not divide {parent.order}"

    @property
    def order(self) -> int:
        return len(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, x: object) -> bool:
        return x in self.members

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.elements)

    @property
    def elements(self) -> tuple[Permutation, ...]:
        """
        Members in canonical order.
        """
        if self._sorted is None:
            self._sorted = tuple(sorted(self.members))
        return self._sorted

    @property
    def generators(self) -> tuple[Permutation, ...]:
        """
        A generating set; computed greedily when none was supplied.
        """
        if self._generators is None:
            self._generators = tuple(greedy_generators(self.elements, self.parent.identity))
        return self._generators

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.parent is other.parent and self.members == other.members

    def __hash__(self) -> int:
        return hash(self.members)

    def __le__(self, other: 'Subgroup') -> bool:
        return self.members <= other.members

    def __lt__(self, other: 'Subgroup') -> bool:
        return self.members < other.members

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order}, of {self.parent})"

    def sort_key(self) -> tuple[int, tuple[tuple[int, ...], ...]]:
        """
        Canonical order for subgroup lists: by order, then member images.
        """
        return (self.order, tuple(x.images for x in self.elements))

    def is_trivial(self) -> bool:
        return len(self.members) == 1

    def is_whole(self) -> bool:
        return len(self.members) == self.parent.order

    def is_abelian(self) -> bool:
        gens = [g for g in self.generators if not g.is_identity()]
        return all(a * b == b * a for i, a in enumerate(gens) for b in gens[i+1:])

    def is_normal(self) -> bool:
        """
        Conjugation stability under every generator of the parent, checked on the
        subgroup generators.
        """
        for g in self.parent.generators:
            ginv = g.inverse()
            for h in self.generators:
                if g * h * ginv not in self.members:
                    return False
        return True

    def check_closed(self):
        gens = self.generators
        for x in self.members:
            for g in gens:
                if x * g not in self.members:
                    raise ValueError("Member set is not closed under products")

    def as_group(self, name: str = "") -> FiniteGroup:
        """
        The subgroup as a FiniteGroup in its own right (same degree and points).
        """
        if self._as_group is None:
            self._as_group = FiniteGroup.trusted(self.parent.degree, self.generators,
                                                 self.members, name)
        return self._as_group

    def inclusion(self) -> 'GroupHom':
        from towerkit.groups.hom import GroupHom
        grp = self.as_group()
        return GroupHom(grp, self.parent, {x: x for x in grp.elements})


def greedy_generators(elements: Sequence[Permutation], identity: Permutation) -> list[Permutation]:
    """
    Pick a small generating set: repeatedly take the element of largest order not
    yet generated (canonical order breaks ties).
    """
    remaining = sorted(elements, key=lambda x: (-x.order(), x.images))
    target = len(elements)
    gens: list[Permutation] = []
    generated: set[Permutation] = {identity}
    for x in remaining:
        if len(generated) == target:
            break
        if x in generated:
            continue
        gens.append(x)
        generated = closure(gens, identity)
    return gens


def close_group(generators: Sequence[Permutation], max_order: Optional[int] = None,
                name: str = "", limits: Optional[Limits] = None) -> FiniteGroup:
    """
    Enumerate the group generated by permutations of a common degree.
    """
    if len(generators) == 0:
        raise ValueError("At least one generator is required")
    degree = generators[0].degree
    for g in generators:
        if g.degree != degree:
            raise DegreeMismatch(
                f"Generators have degrees {generators[0].degree} and {g.degree}")
    if max_order is None:
        max_order = resolve_limits(limits).max_order
    if max_order < 1:
        raise ValueError("max_order must be at least 1")
    elements = closure(generators, Permutation.identity(degree), max_order,
                       f"close_group({name})" if name else "close_group")
    return FiniteGroup(degree, generators, elements, name)
