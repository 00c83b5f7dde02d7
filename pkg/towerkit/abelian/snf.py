# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
from typing import Any, Sequence, Union

import numpy as np
import numpy.typing as npt


class IntMatrix:
    """
    Exact integer matrix. Entries are Python ints held in a numpy object array, so
    products and pivots never overflow.
    """

    def __init__(self, entries: Union[Sequence[Sequence[int]], npt.NDArray[Any]],
                 rows: int = -1, cols: int = -1):
        super().__init__()
        data = np.array(entries, dtype=object)
        if data.size == 0 and rows >= 0 and cols >= 0:
            data = np.zeros((rows, cols), dtype=object)
        if data.ndim != 2:
            raise ValueError("IntMatrix needs a rectangular 2D array of integers")
        for v in data.flat:
            if not isinstance(v, (int, np.integer)):
                raise ValueError(f"Entry {v!r} is not an integer")
        self._data = np.vectorize(int, otypes=[object])(data) if data.size else data

    @staticmethod
    def identity(n: int) -> 'IntMatrix':
        data = np.zeros((n, n), dtype=object)
        for i in range(n):
            data[i, i] = 1
        return IntMatrix(data)

    @staticmethod
    def diagonal(values: Sequence[int], rows: int = -1, cols: int = -1) -> 'IntMatrix':
        rows = len(values) if rows < 0 else rows
        cols = len(values) if cols < 0 else cols
        data = np.zeros((rows, cols), dtype=object)
        for i, v in enumerate(values):
            data[i, i] = int(v)
        return IntMatrix(data)

    @property
    def rows(self) -> int:
        return int(self._data.shape[0])

    @property
    def cols(self) -> int:
        return int(self._data.shape[1])

    @property
    def array(self) -> npt.NDArray[Any]:
        """
        Underlying object array (a copy, the matrix is immutable).
        """
        return self._data.copy()

    def __getitem__(self, idx: tuple[int, int]) -> int:
        return int(self._data[idx])

    def __matmul__(self, other: 'IntMatrix') -> 'IntMatrix':
        if self.cols != other.rows:
            raise ValueError(f"Shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        return IntMatrix(self._data.dot(other._data), self.rows, other.cols)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self._data.shape == other._data.shape and bool((self._data == other._data).all())

    def __hash__(self) -> int:
        return hash(tuple(map(tuple, self.tolist())))

    def tolist(self) -> list[list[int]]:
        return [[int(v) for v in row] for row in self._data]

    def diagonal_entries(self) -> list[int]:
        return [int(self._data[i, i]) for i in range(min(self.rows, self.cols))]

    def is_diagonal(self) -> bool:
        for i in range(self.rows):
            for j in range(self.cols):
                if i != j and self._data[i, j] != 0:
                    return False
        return True

    def determinant(self) -> int:
        """
        Exact determinant by fraction-free (Bareiss) elimination.
        """
        if self.rows != self.cols:
            raise ValueError("Determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        a = self.tolist()
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
                if swap is None:
                    return 0
                a[k], a[swap] = a[swap], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def __repr__(self) -> str:
        return f"IntMatrix({self.tolist()})"


def smith_normal_form(M: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """
    Smith normal form D = U M V with U, V unimodular and D diagonal, d_1 | d_2 | ...,
    all d_i >= 0 (zeros last). The pivot is always the nonzero entry of least
    absolute value in the remaining block; rows and columns are reduced against it
    until it divides everything below and to the right.
    """
    if M.rows == 0 or M.cols == 0:
        raise ValueError("Smith normal form of an empty matrix")
    A = M.array
    m, n = M.rows, M.cols
    U = IntMatrix.identity(m).array
    V = IntMatrix.identity(n).array

    for t in range(min(m, n)):
        while True:
            block = A[t:, t:]
            nonzero = [(abs(int(block[i, j])), i, j) for i in range(m - t) for j in range(n - t)
                       if block[i, j] != 0]
            if len(nonzero) == 0:
                break
            _, pi, pj = min(nonzero)
            pi += t
            pj += t
            if pi != t:
                A[[t, pi]] = A[[pi, t]]
                U[[t, pi]] = U[[pi, t]]
            if pj != t:
                A[:, [t, pj]] = A[:, [pj, t]]
                V[:, [t, pj]] = V[:, [pj, t]]

            pivot = A[t, t]
            clean = True
            for i in range(t + 1, m):
                q = A[i, t] // pivot
                if q != 0:
                    A[i, :] = A[i, :] - q * A[t, :]
                    U[i, :] = U[i, :] - q * U[t, :]
                if A[i, t] != 0:
                    clean = False
            for j in range(t + 1, n):
                q = A[t, j] // pivot
                if q != 0:
                    A[:, j] = A[:, j] - q * A[:, t]
                    V[:, j] = V[:, j] - q * V[:, t]
                if A[t, j] != 0:
                    clean = False
            if not clean:
                continue

            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if A[i, j] % pivot != 0), None)
            if bad is None:
                break
            A[t, :] = A[t, :] + A[bad[0], :]
            U[t, :] = U[t, :] + U[bad[0], :]

        if A[t, t] < 0:
            A[t, :] = -A[t, :]
            U[t, :] = -U[t, :]

    D, Um, Vm = IntMatrix(A), IntMatrix(U), IntMatrix(V)
    assert Um @ M @ Vm == D, "Smith normal form does not reproduce D = U M V"
    assert D.is_diagonal()
    assert abs(Um.determinant()) == 1 and abs(Vm.determinant()) == 1, "Transform not unimodular"
    diag = D.diagonal_entries()
    for a, b in zip(diag, diag[1:]):
        assert (a == 0 and b == 0) or (a != 0 and b % a == 0), "Divisibility chain broken"
    return D, Um, Vm


def unimodular_inverse(M: IntMatrix) -> IntMatrix:
    """
    Inverse of a unimodular integer matrix (exact, via the Smith transform of M).
    """
    D, U, V = smith_normal_form(M)
    if D != IntMatrix.identity(M.rows):
        raise ValueError("Matrix is not unimodular")
    # D = U M V = I  =>  M^-1 = V U
    return V @ U
