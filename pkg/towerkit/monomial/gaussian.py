# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
from typing import Any, Sequence

from sympy.polys.domains import QQ_I
from typing_extensions import TypeAlias

#: An exact Gaussian rational a + bi (an element of sympy's QQ_I).
Gaussian: TypeAlias = Any

#: A 2 x 2 matrix of Gaussian rationals, as rows.
Matrix2: TypeAlias = tuple[tuple[Gaussian, Gaussian], tuple[Gaussian, Gaussian]]

ZERO = QQ_I(0, 0)
ONE = QQ_I(1, 0)
MINUS_ONE = QQ_I(-1, 0)
I = QQ_I(0, 1)


def gaussian(value: Any) -> Gaussian:
    """
    Convert an int, a (real, imaginary) pair or a Gaussian rational.
    """
    if isinstance(value, tuple):
        return QQ_I(*value)
    if isinstance(value, int):
        return QQ_I(value, 0)
    return QQ_I.convert(value)


def power(x: Gaussian, k: int) -> Gaussian:
    """
    x^k for any integer k; negative powers need x != 0.
    """
    if k < 0:
        if x == ZERO:
            raise ZeroDivisionError("0 has no inverse")
        x = ONE / x
        k = -k
    res = ONE
    for _ in range(k):
        res = res * x
    return res


def is_sign(x: Gaussian) -> bool:
    return x == ONE or x == MINUS_ONE


def format_gaussian(x: Gaussian) -> str:
    return str(QQ_I.to_sympy(x))


def matrix(rows: Sequence[Sequence[Any]]) -> Matrix2:
    (a, b), (c, d) = rows
    return ((gaussian(a), gaussian(b)), (gaussian(c), gaussian(d)))


def matmul(m: Matrix2, n: Matrix2) -> Matrix2:
    return tuple(tuple(m[i][0] * n[0][j] + m[i][1] * n[1][j] for j in range(2))
                 for i in range(2))  # type: ignore[return-value]


def scale(c: Gaussian, m: Matrix2) -> Matrix2:
    return tuple(tuple(c * x for x in row) for row in m)  # type: ignore[return-value]


def mobius(m: Matrix2, x: Gaussian) -> Gaussian:
    """
    (m00 x + m01) / (m10 x + m11), evaluated exactly.
    """
    den = m[1][0] * x + m[1][1]
    if den == ZERO:
        raise ZeroDivisionError(f"Pole of the Moebius map at {format_gaussian(x)}")
    return (m[0][0] * x + m[0][1]) / den


#: The standard two-dimensional representation of the quaternion units.
QUATERNION_MATRICES: dict[str, Matrix2] = {}


def _fill_quaternion_matrices():
    base = {
        "1": matrix([[1, 0], [0, 1]]),
        "i": matrix([[(0, 1), 0], [0, (0, -1)]]),
        "j": matrix([[0, 1], [-1, 0]]),
    }
    base["k"] = matmul(base["i"], base["j"])
    for name, m in base.items():
        QUATERNION_MATRICES[name] = m
        QUATERNION_MATRICES["-" + name] = scale(MINUS_ONE, m)


_fill_quaternion_matrices()
