# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
from typing import Any, Sequence

from towerkit.abelian.snf import IntMatrix, unimodular_inverse
from towerkit.core.errors import DimensionMismatch, NotInvertible, NotMonomial
from towerkit.monomial.gaussian import (ONE, ZERO, Gaussian, Matrix2, format_gaussian, gaussian,
                                        is_sign, power)


class MonomialMap:
    """
    x -> (c_1 x^(a_1), ..., c_n x^(a_n)) where x^(a_i) = prod_j x_j^(a_ij), with
    exact Gaussian rational coefficients and an integer exponent matrix of
    determinant +-1. Composition is substitution: (f o g)(x) = f(g(x)).
    """

    def __init__(self, coefficients: Sequence[Any], exponents: Sequence[Sequence[int]]):
        super().__init__()
        self.coefficients: tuple[Gaussian, ...] = tuple(gaussian(c) for c in coefficients)
        self.exponents: tuple[tuple[int, ...], ...] = tuple(tuple(int(a) for a in r) for r in exponents)
        n = len(self.coefficients)
        if len(self.exponents) != n or any(len(r) != n for r in self.exponents):
            raise DimensionMismatch(f"{n} coefficients for an exponent matrix of shape "
                                    f"{[len(r) for r in self.exponents]}")
        if any(c == ZERO for c in self.coefficients):
            raise NotInvertible("Monomial coefficients must be nonzero")
        if n and abs(IntMatrix(self.exponents).determinant()) != 1:
            raise NotInvertible(f"Exponent matrix {self.exponents} is not unimodular")
        self._key = (tuple((c.x, c.y) for c in self.coefficients), self.exponents)

    @staticmethod
    def identity(n: int) -> 'MonomialMap':
        return MonomialMap([1] * n, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def diagonal(signs: Sequence[Any], exponents: Sequence[int]) -> 'MonomialMap':
        """
        x_i -> c_i x_i^(e_i).
        """
        n = len(exponents)
        return MonomialMap(signs, [[exponents[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def n(self) -> int:
        return len(self.coefficients)

    @property
    def signs(self) -> tuple[int, ...]:
        if not all(is_sign(c) for c in self.coefficients):
            raise ValueError(f"{self} has coefficients outside +-1")
        return tuple(1 if c == ONE else -1 for c in self.coefficients)

    def is_identity(self) -> bool:
        return self == MonomialMap.identity(self.n)

    def is_sign_diagonal(self) -> bool:
        """
        Diagonal exponents in {1, -1} and coefficients in {1, -1}.
        """
        return all(is_sign(c) for c in self.coefficients) and \
            all(a in (1, -1) if i == j else a == 0
                for i, r in enumerate(self.exponents) for j, a in enumerate(r))

    def moved_coordinates(self) -> int:
        """
        Number of coordinates whose image is not x_i itself.
        """
        return sum(1 for i, (c, r) in enumerate(zip(self.coefficients, self.exponents))
                   if c != ONE or any(a != (1 if i == j else 0) for j, a in enumerate(r)))

    def evaluate(self, point: Sequence[Any]) -> tuple[Gaussian, ...]:
        if len(point) != self.n:
            raise DimensionMismatch(f"Point of length {len(point)} for a map on {self.n} coordinates")
        xs = [gaussian(x) for x in point]
        res = []
        for c, r in zip(self.coefficients, self.exponents):
            y = c
            for x, a in zip(xs, r):
                y = y * power(x, a)
            res.append(y)
        return tuple(res)

    def compose(self, other: 'MonomialMap') -> 'MonomialMap':
        return compose(self, other)

    def inverse(self) -> 'MonomialMap':
        """
        x = (y / c)^(A^-1), so the inverse has exponents B = A^-1 and coefficients
        prod_i c_i^(-B_ki).
        """
        B = unimodular_inverse(IntMatrix(self.exponents))
        rows = [[int(B[k, i]) for i in range(self.n)] for k in range(self.n)]
        coeffs = []
        for row in rows:
            y = ONE
            for c, b in zip(self.coefficients, row):
                y = y * power(c, -b)
            coeffs.append(y)
        return MonomialMap(coeffs, rows)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, MonomialMap) and other._key == self._key

    def __hash__(self) -> int:
        return hash(self._key)

    def format_coordinate(self, i: int) -> str:
        c = self.coefficients[i]
        num = []
        den = []
        for j, a in enumerate(self.exponents[i]):
            name = f"x{j + 1}"
            term = name if abs(a) == 1 else f"{name}^{abs(a)}"
            if a > 0:
                num.append(term)
            elif a < 0:
                den.append(term)
        body = "*".join(num)
        if is_sign(c):
            numerator = ("" if c == ONE else "-") + (body or "1")
        else:
            numerator = f"({format_gaussian(c)})" + ("*" + body if body else "")
        if den:
            numerator += "/" + "*".join(den)
        return f"x{i + 1} -> {numerator}"

    def __str__(self) -> str:
        return ", ".join(self.format_coordinate(i) for i in range(self.n))

    def __repr__(self) -> str:
        return f"MonomialMap({self})"

    def to_dict(self) -> dict[str, Any]:
        return {"map": [self.format_coordinate(i) for i in range(self.n)],
                "sign_diagonal": self.is_sign_diagonal()}


def compose(f: MonomialMap, g: MonomialMap) -> MonomialMap:
    """
    f o g. With g(x)_j = c'_j x^(a'_j): exponents multiply, A A', and coefficient i
    is c_i prod_j c'_j^(a_ij).
    """
    if f.n != g.n:
        raise DimensionMismatch(f"Cannot compose maps on {f.n} and {g.n} coordinates")
    n = f.n
    exps = [[sum(f.exponents[i][k] * g.exponents[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)]
    coeffs = []
    for c, row in zip(f.coefficients, f.exponents):
        y = c
        for c2, a in zip(g.coefficients, row):
            y = y * power(c2, a)
        coeffs.append(y)
    return MonomialMap(coeffs, exps)


def mobius_to_monomial(m: Matrix2) -> MonomialMap:
    """
    The action x -> (m00 x + m01)/(m10 x + m11) of an invertible 2 x 2 matrix as a
    monomial map on one coordinate: diagonal matrices give (m00/m11) x,
    antidiagonal ones (m01/m10) / x. Coefficients outside +-1 are kept; such maps
    are not sign-diagonal.
    """
    (a, b), (c, d) = m
    if a * d - b * c == ZERO:
        raise NotInvertible("Matrix is singular")
    if b == ZERO and c == ZERO:
        return MonomialMap([a / d], [[1]])
    if a == ZERO and d == ZERO:
        return MonomialMap([b / c], [[-1]])
    raise NotMonomial("Matrix is neither diagonal nor antidiagonal")
