# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
import itertools
import logging
from collections import deque
from math import gcd, prod
from typing import Iterator, Sequence

import numpy as np
from sympy import factorint, multiplicity

from towerkit.abelian.snf import IntMatrix, smith_normal_form, unimodular_inverse
from towerkit.core.errors import NotAbelian
from towerkit.core.utils import invariants_from_primary, prime_divisors, prime_part
from towerkit.groups.group import FiniteGroup
from towerkit.groups.permutation import Permutation, direct_sum
from towerkit.groups.regular import regular_representation
from towerkit.groups.search import small_generating_set

log = logging.getLogger("towerkit")

Coordinates = tuple[int, ...]


class AbelianGroup:
    """
    Finite abelian group in invariant-factor form Z/d_1 + ... + Z/d_n with
    d_1 | d_2 | ... | d_n and every d_i >= 2. The trivial group has no factors.
    Elements are coordinate tuples with entry i taken mod d_i.
    """

    def __init__(self, invariant_factors: Sequence[int]):
        super().__init__()
        factors = tuple(int(d) for d in invariant_factors)
        for d in factors:
            if d < 2:
                raise ValueError(f"Invariant factor {d} must be at least 2; "
                                 "use AbelianGroup.from_cyclic_orders to normalise")
        for a, b in zip(factors, factors[1:]):
            if b % a != 0:
                raise ValueError(f"Invariant factors {factors} do not form a divisor chain")

        #: d_1 | d_2 | ... | d_n
        self.invariant_factors: tuple[int, ...] = factors

    @staticmethod
    def from_cyclic_orders(orders: Sequence[int]) -> 'AbelianGroup':
        """
        Normalise a direct sum of cyclic groups of arbitrary orders.
        """
        orders = [int(d) for d in orders]
        for d in orders:
            if d < 1:
                raise ValueError(f"Cyclic order {d} must be positive")
        nontrivial = [d for d in orders if d > 1]
        if len(nontrivial) == 0:
            return AbelianGroup(())
        D, _, _ = smith_normal_form(IntMatrix.diagonal(nontrivial))
        return AbelianGroup([d for d in D.diagonal_entries() if d > 1])

    @staticmethod
    def trivial() -> 'AbelianGroup':
        return AbelianGroup(())

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def rank(self) -> int:
        """
        Number of invariant factors (minimal number of generators).
        """
        return len(self.invariant_factors)

    def exponent(self) -> int:
        return self.invariant_factors[-1] if self.invariant_factors else 1

    def is_trivial(self) -> bool:
        return len(self.invariant_factors) == 0

    def is_cyclic(self) -> bool:
        return len(self.invariant_factors) <= 1

    def primary_decomposition(self) -> dict[int, list[int]]:
        """
        Prime-power cyclic orders per prime, computed on demand from the invariant
        factors.
        """
        res: dict[int, list[int]] = {}
        for d in self.invariant_factors:
            for p, e in factorint(d).items():
                res.setdefault(p, []).append(p ** e)
        return {p: sorted(v) for p, v in sorted(res.items())}

    @property
    def zero(self) -> Coordinates:
        return (0,) * self.rank

    def elements(self) -> Iterator[Coordinates]:
        """
        All elements as coordinate tuples, in lexicographic order.
        """
        return itertools.product(*[range(d) for d in self.invariant_factors])

    def add(self, a: Coordinates, b: Coordinates) -> Coordinates:
        return tuple((x + y) % d for x, y, d in zip(a, b, self.invariant_factors))

    def neg(self, a: Coordinates) -> Coordinates:
        return tuple((-x) % d for x, d in zip(a, self.invariant_factors))

    def scale(self, k: int, a: Coordinates) -> Coordinates:
        return tuple((k * x) % d for x, d in zip(a, self.invariant_factors))

    def reduce(self, a: Sequence[int]) -> Coordinates:
        return tuple(int(x) % d for x, d in zip(a, self.invariant_factors))

    def unit(self, i: int) -> Coordinates:
        return tuple(1 if j == i else 0 for j in range(self.rank))

    def cycle_permutation(self, c: Sequence[int]) -> Permutation:
        """
        The element with coordinates c in the cycle model of `permutation_group`.
        """
        if self.is_trivial():
            return Permutation.identity(1)
        return direct_sum([Permutation([(x + k) % d for x in range(d)], check=False)
                           for k, d in zip(self.reduce(c), self.invariant_factors)])

    def cycle_coordinates(self, p: Permutation) -> Coordinates:
        """
        Inverse of `cycle_permutation`.
        """
        res = []
        offset = 0
        for d in self.invariant_factors:
            res.append(p(offset) - offset)
            offset += d
        return tuple(res)

    def permutation_group(self) -> tuple[FiniteGroup, list[Permutation]]:
        """
        Small faithful model: one cycle of length d_i per factor, side by side.
        Returns the group and the basis permutations (one per factor).
        """
        if self.is_trivial():
            e = Permutation.identity(1)
            return FiniteGroup.trusted(1, [e], [e], str(self)), []
        basis = [self.cycle_permutation(self.unit(i)) for i in range(self.rank)]
        degree = sum(self.invariant_factors)
        elements = [self.cycle_permutation(c) for c in self.elements()]
        return FiniteGroup.trusted(degree, basis, elements, str(self)), basis

    def regular_group(self) -> tuple[FiniteGroup, dict[Coordinates, Permutation]]:
        """
        Left regular permutation model (degree = order).
        """
        elements = list(self.elements())
        gens = [self.unit(i) for i in range(self.rank)]
        return regular_representation(elements, self.add, gens, str(self))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AbelianGroup):
            return NotImplemented
        return self.invariant_factors == other.invariant_factors

    def __hash__(self) -> int:
        return hash(self.invariant_factors)

    def __str__(self) -> str:
        if self.is_trivial():
            return "abelian: 1"
        return "abelian: " + ",".join(str(d) for d in self.invariant_factors)

    def __repr__(self) -> str:
        return f"AbelianGroup({list(self.invariant_factors)})"

    def to_dict(self) -> dict[str, object]:
        return {"invariant_factors": list(self.invariant_factors), "order": self.order}


def exterior_square(A: AbelianGroup) -> AbelianGroup:
    """
    The exterior square, generated by e_i ^ e_j for i < j with e_i ^ e_j of order
    gcd(d_i, d_j) = d_i.
    """
    d = A.invariant_factors
    return AbelianGroup.from_cyclic_orders(
        [gcd(d[i], d[j]) for i in range(len(d)) for j in range(i + 1, len(d))])


def abelian_from_group(G: FiniteGroup) -> AbelianGroup:
    """
    Invariant factors of an abelian permutation group. For each prime l dividing
    |G| the counts c_k = #{g : g^(l^k) = 1} give the number of l-primary factors of
    exponent at least k as log_l(c_k / c_(k-1)); the primary parts are then merged.
    """
    if not G.is_abelian():
        raise NotAbelian(f"{G} is not abelian")
    orders = [x.order() for x in G.elements]
    primary: dict[int, list[int]] = {}
    for l in prime_divisors(G.order):
        part = prime_part(G.order, l)
        counts = [1]
        while counts[-1] < part:
            k = len(counts)
            counts.append(sum(1 for o in orders if (l ** k) % o == 0))
        at_least = [multiplicity(l, counts[k] // counts[k - 1]) for k in range(1, len(counts))]
        at_least.append(0)
        powers: list[int] = []
        for k in range(1, len(counts)):
            powers += [l ** k] * (at_least[k - 1] - at_least[k])
        primary[l] = powers
    result = AbelianGroup(invariants_from_primary(primary))
    assert result.order == G.order, "Layer counts do not account for the whole group"
    return result


class AbelianBasis:
    """
    An explicit isomorphism between an abelian permutation group and its
    invariant-factor model: basis elements f_1..f_n of orders d_1..d_n and the
    coordinate map x -> (c_1..c_n) with x = f_1^c_1 ... f_n^c_n.
    """

    def __init__(self, group: FiniteGroup, structure: AbelianGroup,
                 basis: Sequence[Permutation], coordinates: dict[Permutation, Coordinates]):
        super().__init__()
        self.group = group
        self.structure = structure
        self.basis: tuple[Permutation, ...] = tuple(basis)
        self.coordinates = coordinates
        self._elements = {c: x for x, c in coordinates.items()}

    def coords(self, x: Permutation) -> Coordinates:
        return self.coordinates[x]

    def element(self, c: Sequence[int]) -> Permutation:
        return self._elements[self.structure.reduce(c)]


def abelian_basis(G: FiniteGroup) -> AbelianBasis:
    """
    Basis and coordinates for an abelian group. Words in a small generating set
    h_1..h_k give a surjection Z^k -> G; collisions in the breadth-first enumeration
    span its relation lattice L. If D = U R V is the Smith form of a relation matrix
    R, coordinates are v V mod d and the basis elements are the rows of V^-1.
    """
    if not G.is_abelian():
        raise NotAbelian(f"{G} is not abelian")
    gens = small_generating_set(G)
    k = len(gens)
    if k == 0:
        return AbelianBasis(G, AbelianGroup.trivial(), [], {G.identity: ()})

    words: dict[Permutation, tuple[int, ...]] = {G.identity: (0,) * k}
    relations: set[tuple[int, ...]] = set()
    frontier = deque([G.identity])
    while frontier:
        x = frontier.popleft()
        v = words[x]
        for j, h in enumerate(gens):
            y = h * x
            w = tuple(c + (1 if i == j else 0) for i, c in enumerate(v))
            known = words.get(y)
            if known is None:
                words[y] = w
                frontier.append(y)
            else:
                rel = tuple(a - b for a, b in zip(w, known))
                if any(rel):
                    relations.add(rel)
    assert len(words) == G.order

    D, _, V = smith_normal_form(IntMatrix(sorted(relations)))
    diag = D.diagonal_entries()
    assert len(diag) == k and all(d > 0 for d in diag), "Relation lattice is not of full rank"
    Vinv = unimodular_inverse(V)
    keep = [i for i in range(k) if diag[i] > 1]
    structure = AbelianGroup([diag[i] for i in keep])

    basis = []
    for i in keep:
        f = G.identity
        for j, h in enumerate(gens):
            f = f * (h ** Vinv[i, j])
        basis.append(f)

    Varr = V.array
    coordinates: dict[Permutation, Coordinates] = {}
    for x, v in words.items():
        y = np.array(v, dtype=object).dot(Varr)
        coordinates[x] = tuple(int(y[i]) % diag[i] for i in keep)

    assert structure.order == G.order
    assert len(set(coordinates.values())) == G.order, "Coordinate map is not injective"
    for f, d in zip(basis, structure.invariant_factors):
        assert f.order() == d, "Basis element order differs from its invariant factor"
    log.debug("abelian_basis: %s from %d generators, %d relations", structure, k, len(relations))
    return AbelianBasis(G, structure, basis, coordinates)
