# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
from typing import Sequence

import numpy as np

from towerkit.core.errors import DimensionMismatch
from towerkit.fqlin.field import FqField, Table

Rows = tuple[tuple[int, ...], ...]


def reduce_sum(field: FqField, terms: Table, axis: int) -> Table:
    """
    Field sum along one axis of an array of field elements.
    """
    terms = np.moveaxis(terms, axis, 0)
    acc = terms[0]
    for t in terms[1:]:
        acc = field.add_table[acc, t]
    return acc


def scale_rows(field: FqField, vectors: Table) -> Table:
    """
    Scale each nonzero row so its first nonzero entry is 1 (projective canonical form).
    """
    lead_index = np.argmax(vectors != 0, axis=-1)
    lead = np.take_along_axis(vectors, lead_index[..., None], axis=-1)
    return field.mul_table[field.inv_table[lead], vectors]


class MatFq:
    """
    An immutable n x n matrix over F_q.
    """

    def __init__(self, field: FqField, rows: Sequence[Sequence[int]]):
        super().__init__()
        self.field = field
        self.rows: Rows = tuple(tuple(int(x) for x in r) for r in rows)
        self.n = len(self.rows)
        if any(len(r) != self.n for r in self.rows):
            raise DimensionMismatch(f"Matrix rows have lengths {[len(r) for r in self.rows]}")
        self._hash = hash(self.rows)

    @staticmethod
    def identity(field: FqField, n: int) -> 'MatFq':
        return MatFq(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def diagonal(field: FqField, entries: Sequence[int]) -> 'MatFq':
        n = len(entries)
        return MatFq(field, [[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def elementary(field: FqField, n: int, i: int, j: int, t: int) -> 'MatFq':
        """
        The transvection I + t E_ij (i != j).
        """
        rows = [[1 if a == b else 0 for b in range(n)] for a in range(n)]
        rows[i][j] = t
        return MatFq(field, rows)

    @property
    def array(self) -> Table:
        return np.array(self.rows, dtype=np.int64).reshape(self.n, self.n)

    def __getitem__(self, index: tuple[int, int]) -> int:
        return self.rows[index[0]][index[1]]

    def __matmul__(self, other: 'MatFq') -> 'MatFq':
        if other.n != self.n:
            raise DimensionMismatch(f"Cannot multiply {self.n}x{self.n} by {other.n}x{other.n}")
        F = self.field
        prods = F.mul_table[self.array[:, :, None], other.array[None, :, :]]
        return MatFq(F, reduce_sum(F, prods, 1).tolist())

    def apply(self, vectors: Table) -> Table:
        """
        M v for every row v of `vectors` (shape (..., n)).
        """
        F = self.field
        prods = F.mul_table[vectors[..., None, :], self.array]
        return reduce_sum(F, prods, -1)

    def scale(self, c: int) -> 'MatFq':
        return MatFq(self.field, self.field.mul_table[c, self.array].tolist())

    def determinant(self) -> int:
        """
        Gaussian elimination over F_q.
        """
        F = self.field
        a = self.array.copy()
        det = 1
        for col in range(self.n):
            pivots = np.flatnonzero(a[col:, col])
            if len(pivots) == 0:
                return 0
            r = col + int(pivots[0])
            if r != col:
                a[[col, r]] = a[[r, col]]
                det = F.neg(det)
            pivot = int(a[col, col])
            det = F.mul(det, pivot)
            inv = F.inv(pivot)
            for below in range(col + 1, self.n):
                factor = F.mul(int(a[below, col]), inv)
                if factor:
                    sub = F.mul_table[factor, a[col]]
                    a[below] = F.add_table[a[below], F.neg_table[sub]]
        return det

    def is_invertible(self) -> bool:
        return self.determinant() != 0

    def is_diagonal(self) -> bool:
        return all(self.rows[i][j] == 0 for i in range(self.n) for j in range(self.n) if i != j)

    def is_monomial(self) -> bool:
        """
        Exactly one nonzero entry in every row and every column.
        """
        nz = self.array != 0
        return bool(np.all(nz.sum(axis=0) == 1) and np.all(nz.sum(axis=1) == 1))

    def is_unitriangular(self) -> bool:
        return all(self.rows[i][j] == (1 if i == j else 0)
                   for i in range(self.n) for j in range(i + 1))

    def truncate(self) -> 'MatFq':
        """
        Drop the last row and column.
        """
        return MatFq(self.field, [r[:-1] for r in self.rows[:-1]])

    def embed(self) -> 'MatFq':
        """
        Block diagonal diag(M, 1).
        """
        rows = [list(r) + [0] for r in self.rows] + [[0] * self.n + [1]]
        return MatFq(self.field, rows)

    def projective(self) -> 'ProjMatFq':
        return ProjMatFq(self)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, MatFq) and other.field == self.field and other.rows == self.rows

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        return "[" + "; ".join(" ".join(str(x) for x in r) for r in self.rows) + "]"

    def __repr__(self) -> str:
        return f"MatFq({self.field.q}, {self})"


class ProjMatFq:
    """
    The class of an invertible matrix modulo scalars, stored in the canonical
    representative whose first nonzero entry (row-major) is 1.
    """

    def __init__(self, matrix: MatFq):
        super().__init__()
        flat = matrix.array.reshape(-1)
        lead = int(flat[np.flatnonzero(flat)[0]])
        self.matrix = matrix.scale(matrix.field.inv(lead))

    @property
    def field(self) -> FqField:
        return self.matrix.field

    @property
    def n(self) -> int:
        return self.matrix.n

    def __matmul__(self, other: 'ProjMatFq') -> 'ProjMatFq':
        return ProjMatFq(self.matrix @ other.matrix)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ProjMatFq) and other.matrix == self.matrix

    def __hash__(self) -> int:
        return hash(("proj", self.matrix))

    def __str__(self) -> str:
        return str(self.matrix)

    def __repr__(self) -> str:
        return f"ProjMatFq({self.field.q}, {self.matrix})"
