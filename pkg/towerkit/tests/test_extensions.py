# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
import pytest

import towerkit.tests.helpers as helpers
from towerkit.abelian.abelian import AbelianGroup, abelian_from_group
from towerkit.extensions.central import detect_central_extension, pullback_cover
from towerkit.extensions.fc import FcGroup, fc_model
from towerkit.extensions.isoclinism import is_isoclinic
from towerkit.extensions.quaternion import fc_in_quaternions, quaternion_product
from towerkit.groups.structure import center, commutator, derived_subgroup, quotient_group


@pytest.mark.parametrize("factors,order,derived", [
    ((2, 2), 8, 2),
    ((2, 4), 16, 2),
    ((3, 3), 27, 3),
    ((2, 2, 2), 64, 8),
    ((6,), 6, 1),
])
def test_fc_orders(factors: tuple[int, ...], order: int, derived: int):
    F, G = fc_model(AbelianGroup(factors))
    assert F.order == order
    assert G.order == order
    assert F.commutator_part.order == derived
    assert derived_subgroup(G).order == derived
    assert F.verify()


def test_fc_of_klein_is_class_two_of_order_eight():
    _, G = fc_model(AbelianGroup([2, 2]))
    assert not G.is_abelian()
    assert derived_subgroup(G).members <= center(G).members
    assert is_isoclinic(G, helpers.group("d8")) is not None
    assert is_isoclinic(G, helpers.group("q8")) is not None


def test_fc_commutator_is_wedge():
    F = FcGroup(AbelianGroup([2, 4, 4]))
    for k, (i, j) in enumerate(F.pairs):
        assert F.commutator(F.basis_lift(i), F.basis_lift(j)) == F.wedge_unit(k)
        assert F.commutator(F.basis_lift(j), F.basis_lift(i)) == F.inverse(F.wedge_unit(k))
    x = ((1, 3, 2), (1, 0, 3))
    assert F.mul(x, F.inverse(x)) == F.identity
    assert F.project(x) == (1, 3, 2)


def test_fc_abelianisation():
    G = helpers.group("fc(2,4)")
    Q, _ = quotient_group(G, derived_subgroup(G))
    assert abelian_from_group(Q) == AbelianGroup([2, 4])


@pytest.mark.parametrize("source,cover_order", [
    ("q8", 16),
    ("d8", 16),
    ("heis(3)", 81),
    ("fc(2,4)", 32),
    ("abelian: 2,2", 8),
])
def test_pullback_cover(source: str, cover_order: int):
    G = helpers.group(source)
    data = detect_central_extension(G)
    assert data is not None
    assert data.validate()
    cover = pullback_cover(data)
    assert cover.group.order == cover_order
    assert cover.group.order == cover.fc.order * data.central_kernel.order
    assert cover.kernel.order == cover.fc.commutator_part.order
    assert cover.verify()


def test_no_central_extension_beyond_class_two():
    assert detect_central_extension(helpers.group("sym(4)")) is None
    assert detect_central_extension(helpers.group("dihedral(8)")) is None


def test_abelian_is_trivial_extension():
    data = detect_central_extension(helpers.group("abelian: 2,4"))
    assert data is not None
    assert data.central_kernel.is_trivial()
    assert data.abelian_quotient == AbelianGroup([2, 4])


@pytest.mark.parametrize("first,second,expected", [
    ("d8", "q8", True),
    ("cyc(2)", "cyc(9)", True),
    ("heis(3)", "fc(3,3)", True),
    ("d8", "cyc(8)", False),
    ("d8", "heis(3)", False),
    ("sym(3)", "d8", False),
])
def test_isoclinism(first: str, second: str, expected: bool):
    witness = is_isoclinic(helpers.group(first), helpers.group(second))
    assert (witness is not None) == expected
    if witness is not None:
        assert witness.verify()


def test_quaternion_units():
    assert quaternion_product("i", "j") == "k"
    assert quaternion_product("j", "i") == "-k"
    assert quaternion_product("-i", "-i") == "-1"
    assert quaternion_product("-1", "k") == "-k"


def test_fc_in_quaternions():
    T = fc_in_quaternions()
    G = T.group
    assert G.order == 64
    D = derived_subgroup(G)
    assert D.order == 8
    assert D.is_abelian()
    assert all(x.order() <= 2 for x in D.members)
    assert set(D.members) == set(T.scalar_subgroup_members())
    assert is_isoclinic(G, helpers.group("fc(2,2,2)")) is not None


def test_quaternion_triple_commutators():
    T = fc_in_quaternions()
    g1, g2, g3 = T.generators
    assert [T.components(g) for g in T.generators] == [
        ("1", "i", "i"), ("i", "1", "j"), ("j", "j", "1")]
    assert T.components(commutator(g1, g2)) == ("1", "1", "-1")
    assert T.components(commutator(g2, g3)) == ("-1", "1", "1")
    assert T.components(commutator(g1, g3)) == ("1", "-1", "1")
    for proj in T.projections:
        assert proj.is_surjective()


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
