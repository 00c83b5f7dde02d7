# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
from math import lcm
from typing import Iterable, Sequence

from towerkit.core.errors import DegreeMismatch


class Permutation:
    """
    A bijection of {0..n-1}, stored as its tuple of images. Permutations are
    immutable, hashable and ordered lexicographically by images, which gives every
    group a canonical element order.

    Products follow function composition: ``(p * q)(i) == p(q(i))``, so ``q`` is
    applied first.
    """

    __slots__ = ("images", "_hash")

    def __init__(self, images: Sequence[int], check: bool = True):
        super().__init__()
        self.images: tuple[int, ...] = tuple(images)
        if check and sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"Images {self.images} are not a bijection of "
                             f"0..{len(self.images)-1}")
        self._hash = hash(self.images)

    @staticmethod
    def identity(degree: int) -> 'Permutation':
        return Permutation(range(degree), check=False)

    @staticmethod
    def from_cycles(degree: int, cycles: Iterable[Sequence[int]]) -> 'Permutation':
        """
        Build a permutation from cycles, e.g. ``from_cycles(4, [(0, 1), (2, 3)])``.
        Points not mentioned are fixed.
        """
        images = list(range(degree))
        seen: set[int] = set()
        for cycle in cycles:
            for point in cycle:
                if point < 0 or point >= degree:
                    raise ValueError(f"Point {point} outside 0..{degree-1}")
                if point in seen:
                    raise ValueError(f"Point {point} appears in more than one cycle")
                seen.add(point)
            for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]):
                images[a] = b
        return Permutation(images, check=False)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: 'Permutation') -> 'Permutation':
        if len(other.images) != len(self.images):
            raise DegreeMismatch(
                f"Cannot compose permutations of degree {self.degree} and {other.degree}")
        mine = self.images
        return Permutation([mine[i] for i in other.images], check=False)

    def inverse(self) -> 'Permutation':
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv, check=False)

    def __pow__(self, k: int) -> 'Permutation':
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self, by: 'Permutation') -> 'Permutation':
        """
        Returns ``by * self * by^-1``.
        """
        return by * self * by.inverse()

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self, fixpoints: bool = False) -> list[tuple[int, ...]]:
        seen = [False] * len(self.images)
        res: list[tuple[int, ...]] = []
        for start in range(len(self.images)):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            nxt = self.images[start]
            while nxt != start:
                cycle.append(nxt)
                seen[nxt] = True
                nxt = self.images[nxt]
            if len(cycle) > 1 or fixpoints:
                res.append(tuple(cycle))
        return res

    def order(self) -> int:
        return lcm(1, *[len(c) for c in self.cycles()])

    def restrict(self, offset: int, size: int) -> 'Permutation':
        """
        Restrict to the block of points offset..offset+size-1, which must be
        invariant, renumbered from 0.
        """
        images = [self.images[offset + i] - offset for i in range(size)]
        return Permutation(images)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __lt__(self, other: 'Permutation') -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        cyc = self.cycles()
        if len(cyc) == 0:
            return "()"
        return "".join("(" + " ".join(str(x) for x in c) + ")" for c in cyc)

    def __repr__(self) -> str:
        return f"Permutation({str(self)}, degree={self.degree})"


def direct_sum(perms: Sequence[Permutation]) -> Permutation:
    """
    Place permutations side by side on consecutive blocks of points.
    """
    images: list[int] = []
    offset = 0
    for p in perms:
        images.extend(offset + i for i in p.images)
        offset += p.degree
    return Permutation(images, check=False)
