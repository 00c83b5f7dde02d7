# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
from typing import Any

import pytest

from towerkit.core.errors import DimensionMismatch, NotInvertible, NotMonomial
from towerkit.monomial.action import (MonomialAction, action_from_q8_triple, type_descriptor,
                                      verify_action)
from towerkit.monomial.gaussian import QUATERNION_MATRICES, gaussian, matrix, mobius
from towerkit.monomial.maps import MonomialMap, compose, mobius_to_monomial

POINTS = [2, 3, 5, (1, 2), (-3, 1)]


def test_identity_and_sign_diagonal():
    e = MonomialMap.identity(3)
    assert e.is_identity()
    assert e.is_sign_diagonal()
    assert e.moved_coordinates() == 0
    f = MonomialMap.diagonal([1, -1, 1], [1, 1, -1])
    assert f.is_sign_diagonal()
    assert f.moved_coordinates() == 2
    assert f.signs == (1, -1, 1)
    assert str(f) == "x1 -> x1, x2 -> -x2, x3 -> 1/x3"
    assert not MonomialMap([2], [[1]]).is_sign_diagonal()
    assert not MonomialMap([1, 1], [[0, 1], [1, 0]]).is_sign_diagonal()


def test_invalid_maps():
    with pytest.raises(NotInvertible):
        MonomialMap([1, 1], [[2, 0], [0, 1]])
    with pytest.raises(NotInvertible):
        MonomialMap([0], [[1]])
    with pytest.raises(DimensionMismatch):
        MonomialMap([1, 1], [[1]])


@pytest.mark.parametrize("p", [(2, 3), (5, (1, 1)), ((0, 1), -2)])
def test_composition_is_substitution(p: tuple[Any, Any]):
    f = MonomialMap([1, -1], [[1, 1], [0, 1]])
    g = MonomialMap([(0, 1), 2], [[0, 1], [1, 0]])
    fg = compose(f, g)
    assert fg.evaluate(p) == f.evaluate(g.evaluate(p))
    assert f.compose(g) == fg


def test_inverse():
    f = MonomialMap([(0, 1), 3], [[2, 1], [1, 1]])
    inv = f.inverse()
    assert compose(inv, f).is_identity()
    assert compose(f, inv).is_identity()
    p = (2, (1, 1))
    assert inv.evaluate(f.evaluate(p)) == tuple(gaussian(x) for x in p)


@pytest.mark.parametrize("rows", [
    [[2, 0], [0, 3]],
    [[0, 1], [-1, 0]],
    [[(0, 1), 0], [0, (0, -1)]],
    [[0, (0, 1)], [4, 0]],
])
def test_mobius_to_monomial(rows: list[list[Any]]):
    m = matrix(rows)
    f = mobius_to_monomial(m)
    for x in POINTS:
        assert f.evaluate([x]) == (mobius(m, gaussian(x)),)


def test_mobius_rejects():
    with pytest.raises(NotMonomial):
        mobius_to_monomial(matrix([[1, 1], [0, 1]]))
    with pytest.raises(NotInvertible):
        mobius_to_monomial(matrix([[1, 0], [0, 0]]))


@pytest.mark.parametrize("unit,expected", [
    ("1", "x1 -> x1"),
    ("-1", "x1 -> x1"),
    ("i", "x1 -> -x1"),
    ("j", "x1 -> -1/x1"),
    ("k", "x1 -> 1/x1"),
    ("-k", "x1 -> 1/x1"),
])
def test_quaternion_units_act_by_signs(unit: str, expected: str):
    f = mobius_to_monomial(QUATERNION_MATRICES[unit])
    assert str(f) == expected
    assert f.is_sign_diagonal()


def test_action_from_q8_triple():
    act = action_from_q8_triple()
    assert act.group.order == 8
    assert act.n == 3
    assert act.is_faithful()
    assert verify_action(act)
    assert all(f.is_sign_diagonal() for f in act.assignment.values())
    maps = act.to_dict()["maps"]
    assert maps["g1"] == "x1 -> x1, x2 -> -x2, x3 -> -x3"
    assert maps["g2"] == "x1 -> -x1, x2 -> x2, x3 -> -1/x3"
    assert maps["g3"] == "x1 -> -1/x1, x2 -> -1/x2, x3 -> x3"
    assert maps["1"] == "x1 -> x1, x2 -> x2, x3 -> x3"


def test_type_descriptor():
    t = type_descriptor(action_from_q8_triple())
    assert t.multiset == {0: 1, 2: 3, 3: 4}
    d = t.to_dict()
    assert d["per_element"]["g1"] == 2
    assert d["multiset"] == {"0": 1, "2": 3, "3": 4}


def test_broken_action_fails():
    act = action_from_q8_triple()
    g = next(x for x, label in act.labels.items() if label == "g1")
    assignment = dict(act.assignment)
    assignment[g] = MonomialMap.diagonal([1, 1, -1], [1, 1, 1])
    res = verify_action(MonomialAction(act.group, assignment, act.labels))
    assert not res
    assert "rho" in str(res.failure)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
