# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
import itertools
import logging
from collections import deque
from math import gcd, prod
from typing import Optional, Sequence, Union

import numpy as np

from towerkit.core.config import Limits, resolve_limits
from towerkit.core.errors import LimitExceeded, NotInvertible, VerificationFailed
from towerkit.fqlin.field import FqField, Table
from towerkit.fqlin.matrix import MatFq, ProjMatFq, scale_rows
from towerkit.groups.group import FiniteGroup, close_group
from towerkit.groups.permutation import Permutation

log = logging.getLogger("towerkit")

AnyMatrix = Union[MatFq, ProjMatFq]


def gl_order(n: int, q: int) -> int:
    return prod(q ** n - q ** i for i in range(n))


def sl_order(n: int, q: int) -> int:
    return gl_order(n, q) // (q - 1)


def pgl_order(n: int, q: int) -> int:
    return sl_order(n, q)


def psl_order(n: int, q: int) -> int:
    return sl_order(n, q) // gcd(n, q - 1)


def unitriangular_order(n: int, q: int) -> int:
    return q ** (n * (n - 1) // 2)


def vector_points(field: FqField, n: int, projective: bool) -> Table:
    """
    Nonzero vectors of F_q^n in lexicographic order, or only those whose first
    nonzero entry is 1 (the points of projective space).
    """
    vs = [v for v in itertools.product(range(field.q), repeat=n) if any(v)]
    if projective:
        vs = [v for v in vs if v[next(i for i, x in enumerate(v) if x)] == 1]
    return np.array(vs, dtype=np.int64).reshape(len(vs), n)


class MatrixGroup:
    """
    A matrix group over F_q together with its permutation action on nonzero
    vectors (linear groups) or projective points (projective groups), keeping the
    correspondence between matrices and permutations in both directions.
    """

    def __init__(self, field: FqField, n: int, generators: Sequence[MatFq], projective: bool,
                 name: str, expected_order: int, limits: Optional[Limits] = None):
        super().__init__()
        lim = resolve_limits(limits)
        if expected_order > lim.max_order:
            raise LimitExceeded("max_order", lim.max_order, expected_order, name)

        self.field = field
        self.n = n
        self.projective = projective
        self.name = name

        #: Points acted on, one per row.
        self.points = vector_points(field, n, projective)
        self._weights = field.q ** np.arange(n, dtype=np.int64)
        self._point_index = np.full(field.q ** n, -1, dtype=np.int64)
        self._point_index[self.points.dot(self._weights)] = np.arange(len(self.points))

        for g in generators:
            if not g.is_invertible():
                raise NotInvertible(f"Generator {g} of {name} is singular")
        self.generator_matrices: list[AnyMatrix] = [self._wrap(g) for g in generators]
        perms = [self.permutation(g) for g in generators]
        if len(perms) == 0:
            perms = [Permutation.identity(len(self.points))]
            self.generator_matrices = [self._wrap(MatFq.identity(field, n))]

        #: The permutation group.
        self.group: FiniteGroup = close_group(perms, lim.max_order, name, lim)
        if self.group.order != expected_order:
            raise VerificationFailed(
                f"{name} has order {self.group.order}, expected {expected_order}")

        self._matrix_of: dict[Permutation, AnyMatrix] = self._close_matrices(perms)
        self._perm_of: dict[AnyMatrix, Permutation] = {m: x for x, m in self._matrix_of.items()}
        log.debug("%s: order %d on %d points", name, self.group.order, len(self.points))

    def _wrap(self, m: MatFq) -> AnyMatrix:
        return ProjMatFq(m) if self.projective else m

    def _close_matrices(self, perms: list[Permutation]) -> dict[Permutation, AnyMatrix]:
        """
        Matrix of every element, found along the closure: perm(M) perm(A) = perm(MA).
        """
        e = self.group.identity
        res: dict[Permutation, AnyMatrix] = {e: self._wrap(MatFq.identity(self.field, self.n))}
        frontier = deque([e])
        while frontier:
            x = frontier.popleft()
            for g, a in zip(perms, self.generator_matrices):
                y = x * g
                if y not in res:
                    res[y] = res[x] @ a  # type: ignore[operator]
                    frontier.append(y)
        assert len(res) == self.group.order
        return res

    def permutation(self, m: AnyMatrix) -> Permutation:
        """
        The permutation by which an invertible matrix moves the points.
        """
        mat = m.matrix if isinstance(m, ProjMatFq) else m
        images = mat.apply(self.points)
        if self.projective:
            images = scale_rows(self.field, images)
        return Permutation(self._point_index[images.dot(self._weights)].tolist(), check=False)

    def matrix(self, x: Permutation) -> AnyMatrix:
        return self._matrix_of[x]

    def element(self, m: AnyMatrix) -> Permutation:
        if isinstance(m, MatFq):
            m = self._wrap(m)
        return self._perm_of[m]

    def underlying(self, x: Permutation) -> MatFq:
        m = self._matrix_of[x]
        return m.matrix if isinstance(m, ProjMatFq) else m

    def __repr__(self) -> str:
        return f"MatrixGroup({self.name}, order {self.group.order})"


def _transvections(field: FqField, n: int, lower: bool = True) -> list[MatFq]:
    """
    I + t E_(i,i+1) (and I + t E_(i+1,i) if `lower`) for t in a basis of F_q over F_p.
    """
    gens = []
    for t in field.additive_basis():
        for i in range(n - 1):
            gens.append(MatFq.elementary(field, n, i, i + 1, t))
            if lower:
                gens.append(MatFq.elementary(field, n, i + 1, i, t))
    return gens


def _primitive_diagonal(field: FqField, n: int) -> MatFq:
    return MatFq.diagonal(field, [field.primitive] + [1] * (n - 1))


def _check_args(n: int, q: int, limits: Optional[Limits]) -> FqField:
    if n < 1:
        raise ValueError(f"Matrix size must be positive, got {n}")
    return FqField(q, limits)


def gl(n: int, q: int, limits: Optional[Limits] = None) -> MatrixGroup:
    """
    GL_n(F_q) on the q^n - 1 nonzero vectors, generated by transvections and a
    primitive diagonal matrix. The order is checked against prod(q^n - q^i).
    """
    F = _check_args(n, q, limits)
    gens = _transvections(F, n) + [_primitive_diagonal(F, n)]
    return MatrixGroup(F, n, gens, False, f"gl({n},{q})", gl_order(n, q), limits)


def sl(n: int, q: int, limits: Optional[Limits] = None) -> MatrixGroup:
    F = _check_args(n, q, limits)
    return MatrixGroup(F, n, _transvections(F, n), False, f"sl({n},{q})", sl_order(n, q), limits)


def pgl(n: int, q: int, limits: Optional[Limits] = None) -> MatrixGroup:
    """
    PGL_n(F_q) on the points of projective (n-1)-space.
    """
    F = _check_args(n, q, limits)
    gens = _transvections(F, n) + [_primitive_diagonal(F, n)]
    return MatrixGroup(F, n, gens, True, f"pgl({n},{q})", pgl_order(n, q), limits)


def psl(n: int, q: int, limits: Optional[Limits] = None) -> MatrixGroup:
    F = _check_args(n, q, limits)
    return MatrixGroup(F, n, _transvections(F, n), True, f"psl({n},{q})", psl_order(n, q), limits)
