# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
from itertools import combinations
from math import gcd, prod

import pytest

import towerkit.tests.helpers as helpers
from towerkit.abelian.abelian import AbelianGroup, abelian_basis, abelian_from_group, exterior_square
from towerkit.abelian.snf import IntMatrix, smith_normal_form, unimodular_inverse
from towerkit.core.errors import NotAbelian

MATRICES = [
    [[2, 4, 4], [-6, 6, 12], [10, -4, -16]],
    [[6, 0], [0, 4]],
    [[1, 2, 3], [4, 5, 6]],
    [[2, 4], [1, 2]],
    [[0, 0], [0, 9]],
    [[12, 18, 30], [8, 0, 20]],
]


def determinantal_divisors(rows: list[list[int]]) -> list[int]:
    """
    Oracle: d_1...d_k is the gcd of all k x k minors.
    """
    m, n = len(rows), len(rows[0])
    res: list[int] = []
    prev = 1
    for k in range(1, min(m, n) + 1):
        g = 0
        for r in combinations(range(m), k):
            for c in combinations(range(n), k):
                g = gcd(g, IntMatrix([[rows[i][j] for j in c] for i in r]).determinant())
        if g == 0:
            res += [0] * (min(m, n) - k + 1)
            break
        res.append(g // prev)
        prev = g
    return res


@pytest.mark.parametrize("rows", MATRICES)
def test_smith_normal_form(rows: list[list[int]]):
    M = IntMatrix(rows)
    D, U, V = smith_normal_form(M)
    assert U @ M @ V == D
    assert D.is_diagonal()
    assert abs(U.determinant()) == 1
    assert abs(V.determinant()) == 1
    assert D.diagonal_entries() == determinantal_divisors(rows)


def test_smith_known_values():
    D, _, _ = smith_normal_form(IntMatrix(MATRICES[0]))
    assert D.diagonal_entries() == [2, 6, 12]


def test_unimodular_inverse():
    M = IntMatrix([[2, 1], [1, 1]])
    inv = unimodular_inverse(M)
    assert inv.tolist() == [[1, -1], [-1, 2]]
    assert M @ inv == IntMatrix.identity(2)
    with pytest.raises(ValueError, match="not unimodular"):
        unimodular_inverse(IntMatrix([[2, 0], [0, 1]]))


@pytest.mark.parametrize("orders,factors", [
    ([6, 4], (2, 12)),
    ([2, 3], (6,)),
    ([1, 1], ()),
    ([4, 2, 2], (2, 2, 4)),
    ([9, 3, 6], (3, 3, 18)),
])
def test_from_cyclic_orders(orders: list[int], factors: tuple[int, ...]):
    A = AbelianGroup.from_cyclic_orders(orders)
    assert A.invariant_factors == factors
    assert A.order == prod(orders)


def test_invariant_factors_must_divide():
    with pytest.raises(ValueError, match="divisor chain"):
        AbelianGroup([2, 3])
    with pytest.raises(ValueError):
        AbelianGroup.from_cyclic_orders([0, 2])


def test_names_and_primary_parts():
    A = AbelianGroup.from_cyclic_orders([6, 4])
    assert str(A) == "abelian: 2,12"
    assert str(AbelianGroup.trivial()) == "abelian: 1"
    assert A.primary_decomposition() == {2: [2, 4], 3: [3]}
    assert A.exponent() == 12
    assert A.rank == 2


@pytest.mark.parametrize("factors,expected", [
    ((2, 4, 4), (2, 2, 4)),
    ((3, 3), (3,)),
    ((5,), ()),
    ((2, 2, 2), (2, 2, 2)),
    ((2, 6), (2,)),
])
def test_exterior_square(factors: tuple[int, ...], expected: tuple[int, ...]):
    assert exterior_square(AbelianGroup(factors)).invariant_factors == expected


def test_permutation_model():
    A = AbelianGroup([2, 4])
    G, basis = A.permutation_group()
    assert G.order == 8
    assert G.degree == 6
    assert [b.order() for b in basis] == [2, 4]
    for c in A.elements():
        assert A.cycle_coordinates(A.cycle_permutation(c)) == c


def test_regular_model():
    A = AbelianGroup([2, 4])
    G, perms = A.regular_group()
    assert G.order == G.degree == 8
    assert abelian_from_group(G) == A
    for a in A.elements():
        for b in A.elements():
            assert perms[A.add(a, b)] == perms[a] * perms[b]


@pytest.mark.parametrize("source,factors", [
    ("abelian: 2,4", (2, 4)),
    ("direct(cyc(4),cyc(6))", (2, 12)),
    ("cyc(12)", (12,)),
    ("sylow(sym(4),3)", (3,)),
])
def test_abelian_from_group(source: str, factors: tuple[int, ...]):
    assert abelian_from_group(helpers.group(source)).invariant_factors == factors


def test_abelian_from_nonabelian():
    with pytest.raises(NotAbelian):
        abelian_from_group(helpers.group("q8"))


@pytest.mark.parametrize("source", ["abelian: 2,4", "direct(cyc(4),cyc(6))", "abelian: 3,3,3"])
def test_abelian_basis(source: str):
    G = helpers.group(source)
    B = abelian_basis(G)
    assert B.structure == abelian_from_group(G)
    assert [b.order() for b in B.basis] == list(B.structure.invariant_factors)
    for x in G.elements:
        assert B.element(B.coords(x)) == x
    for x in G.elements[:6]:
        for y in G.elements:
            assert B.coords(x * y) == B.structure.add(B.coords(x), B.coords(y))


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
