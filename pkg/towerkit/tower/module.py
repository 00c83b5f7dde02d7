# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
import logging
from typing import Sequence

import numpy as np
import numpy.typing as npt

from towerkit.abelian.abelian import AbelianBasis, AbelianGroup, Coordinates
from towerkit.groups.group import FiniteGroup, closure
from towerkit.groups.hom import GroupHom
from towerkit.groups.permutation import Permutation

log = logging.getLogger("towerkit")

IntArray = npt.NDArray[np.int64]


class ConjugationModule:
    """
    An abelian normal subgroup A of G/G_(i+1) as a module over G/G_i, which acts
    by conjugation through a section s: g . a = s(g) a s(g)^-1. Elements of A are
    handled in the coordinates of `basis`; the action of g is the integer matrix
    whose row j holds the coordinates of g . f_j.
    """

    def __init__(self, basis: AbelianBasis, acting: FiniteGroup, section: GroupHom):
        super().__init__()
        self.basis = basis
        self.acting = acting
        self.section = section
        self.structure: AbelianGroup = basis.structure
        self.moduli = np.array(self.structure.invariant_factors, dtype=np.int64)

        self.matrices: dict[Permutation, IntArray] = {}
        for g in acting.elements:
            rows = [self.act(g, f) for f in basis.basis]
            self.matrices[g] = np.array([list(self.basis.coords(y)) for y in rows],
                                        dtype=np.int64).reshape(self.structure.rank, self.structure.rank)

    def act(self, g: Permutation, a: Permutation) -> Permutation:
        sg = self.section(g)
        return sg * a * sg.inverse()

    def act_coords(self, g: Permutation, c: IntArray) -> IntArray:
        return (c.dot(self.matrices[g])) % self.moduli

    def orbit(self, a: Permutation) -> list[Permutation]:
        return sorted({self.act(g, a) for g in self.acting.elements})

    def greedy_generators(self) -> list[Permutation]:
        """
        Module generators chosen greedily: each new generator is the element (in
        canonical order among ties) whose orbit enlarges the generated submodule
        the most. Small, not certified minimal.
        """
        G = self.basis.group
        spanning: list[Permutation] = []
        chosen: list[Permutation] = []
        current = {G.identity}
        while len(current) < G.order:
            best = None
            best_span: set[Permutation] = set()
            for a in G.elements:
                if a in current:
                    continue
                span = closure(spanning + self.orbit(a), G.identity)
                if best is None or len(span) > len(best_span):
                    best = a
                    best_span = span
            assert best is not None
            chosen.append(best)
            spanning += self.orbit(best)
            current = best_span
        return chosen


class FreeModuleCover:
    """
    The free module B = (Z/m)[Q]^r over the acting group Q, with basis e_(k,q), and
    the map beta: B -> A, e_(k,q) -> q . a_k. Vectors of B are coordinate arrays
    laid out block by block: position c*r + k holds the coefficient of
    e_(k, Q.elements[c]). Q acts by g . e_(k,q) = e_(k,gq).
    """

    def __init__(self, module: ConjugationModule, generators: Sequence[Permutation], exponent: int):
        super().__init__()
        self.module = module
        self.generators = list(generators)
        self.exponent = exponent
        self.rank = len(self.generators)
        Q = module.acting
        self.blocks = Q.order
        self.dimension = self.rank * self.blocks

        #: B as an abelian group.
        self.structure = AbelianGroup.from_cyclic_orders([exponent] * self.dimension)

        rows = []
        for q in Q.elements:
            for a in self.generators:
                rows.append(list(module.basis.coords(module.act(q, a))))

        #: Row c*r + k holds the A-coordinates of beta(e_(k, Q.elements[c])).
        self.beta_matrix: IntArray = np.array(rows, dtype=np.int64).reshape(
            self.dimension, module.structure.rank)

        index = {q: c for c, q in enumerate(Q.elements)}
        self._sources: dict[Permutation, IntArray] = {}
        for g in Q.elements:
            src = np.zeros(self.dimension, dtype=np.int64)
            for c, q in enumerate(Q.elements):
                target = index[g * q]
                for k in range(self.rank):
                    src[target * self.rank + k] = c * self.rank + k
            self._sources[g] = src

    @property
    def order(self) -> int:
        return self.exponent ** self.dimension

    def act(self, g: Permutation, b: IntArray) -> IntArray:
        """
        g . b for one vector or a stack of vectors.
        """
        return b[..., self._sources[g]]

    def beta_coords(self, b: IntArray, beta_matrix: IntArray) -> IntArray:
        return b.dot(beta_matrix) % self.module.moduli

    def beta(self, b: Sequence[int], beta_matrix: IntArray) -> Permutation:
        c = self.beta_coords(np.array(b, dtype=np.int64), beta_matrix)
        return self.module.basis.element(tuple(int(x) for x in c))

    def all_vectors(self) -> IntArray:
        """
        Every vector of B, in lexicographic order (only for small B).
        """
        grids = np.indices([self.exponent] * self.dimension).reshape(self.dimension, -1)
        return grids.T.astype(np.int64)

    def block(self, b: Sequence[int], c: int) -> Coordinates:
        return tuple(int(x) for x in b[c * self.rank:(c + 1) * self.rank])
