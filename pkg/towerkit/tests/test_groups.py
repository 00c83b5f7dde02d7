# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
import pytest

import towerkit.tests.helpers as helpers
from towerkit.core.config import Limits
from towerkit.core.errors import DegreeMismatch, LimitExceeded, NotAHomomorphism, NotNormal
from towerkit.groups.group import close_group
from towerkit.groups.hom import GroupHom, hom_from_images
from towerkit.groups.permutation import Permutation
from towerkit.groups.search import find_complement, is_isomorphic, iter_isomorphisms
from towerkit.groups.structure import (center, centralizer, conjugacy_classes, derived_series,
                                       is_solvable, normal_subgroups, normalizer, quotient_group,
                                       sylow_subgroup)


def test_product_applies_right_factor_first():
    p = helpers.perm(3, (0, 1))
    q = helpers.perm(3, (1, 2))
    assert (p * q)(1) == p(q(1)) == 0
    assert (p * q).images == (1, 2, 0)


def test_permutation_rejects_non_bijection():
    with pytest.raises(ValueError):
        Permutation([0, 0, 1])


def test_cycle_string():
    assert str(helpers.perm(5, (0, 1, 2), (3, 4))) == "(0 1 2)(3 4)"
    assert str(Permutation.identity(3)) == "()"


def test_close_single_cycle():
    G = close_group([helpers.perm(4, (0, 1, 2, 3))])
    assert G.order == 4
    assert G.is_abelian()
    assert G.elements[0].is_identity()


def test_close_group_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        close_group([helpers.perm(3, (0, 1)), helpers.perm(4, (0, 1))])


def test_close_group_limit():
    gens = [helpers.perm(6, (0, 1)), helpers.perm(6, (0, 1, 2, 3, 4, 5))]
    with pytest.raises(LimitExceeded) as e:
        close_group(gens, max_order=100)
    assert e.value.limit_name == "max_order"


def test_elements_are_canonical():
    G = helpers.group("sym(3)")
    assert list(G.elements) == sorted(G.elements)
    H = close_group(list(reversed(G.generators)))
    assert H.elements == G.elements


@pytest.mark.parametrize("source,count", [
    ("q8", 6),
    ("d8", 6),
    ("sym(4)", 4),
    ("cyc(7)", 2),
    ("abelian: 2,2", 5),
])
def test_normal_subgroup_count(source: str, count: int):
    assert len(normal_subgroups(helpers.group(source))) == count


def test_center_orders():
    assert center(helpers.group("q8")).order == 2
    assert center(helpers.group("sym(3)")).order == 1
    assert center(helpers.group("heis(3)")).order == 3


def test_s4_structure():
    G = helpers.group("sym(4)")
    assert [N.order for N in derived_series(G)] == [24, 12, 4, 1]
    assert is_solvable(G)
    assert sorted(len(c) for c in conjugacy_classes(G)) == [1, 3, 6, 6, 8]
    assert not is_solvable(helpers.group("alt(5)"))


def test_quotient_s4_by_klein():
    G = helpers.group("sym(4)")
    V = next(N for N in normal_subgroups(G) if N.order == 4)
    Q, proj = quotient_group(G, V)
    assert Q.order == 6
    assert not Q.is_abelian()
    assert proj.kernel().members == V.members
    assert proj.verify_exhaustive()


def test_quotient_requires_normal():
    G = helpers.group("sym(3)")
    H = G.subgroup_generated([helpers.perm(3, (0, 1))])
    with pytest.raises(NotNormal):
        quotient_group(G, H)


def test_sign_homomorphism():
    G = helpers.group("sym(4)")
    C = helpers.group("cyc(2)")
    t = C.generators[0]
    sign = hom_from_images(G, C, [t, t])
    assert sign.kernel().order == 12
    assert sign.is_surjective()
    assert sign.verify_exhaustive()


def test_inconsistent_generator_images():
    C3 = helpers.group("cyc(3)")
    C2 = helpers.group("cyc(2)")
    with pytest.raises(NotAHomomorphism):
        hom_from_images(C3, C2, [C2.generators[0]])


def test_invalid_image_map():
    C2 = helpers.group("cyc(2)")
    g = C2.generators[0]
    with pytest.raises(NotAHomomorphism):
        GroupHom(C2, C2, {C2.identity: g, g: g})


def test_isomorphisms():
    assert is_isomorphic(helpers.group("dihedral(3)"), helpers.group("sym(3)")) is not None
    assert is_isomorphic(helpers.group("q8"), helpers.group("d8")) is None
    # |Aut(Z/2 x Z/2)| = 6
    V = helpers.group("abelian: 2,2")
    assert len(list(iter_isomorphisms(V, V))) == 6


def test_isomorphism_limit():
    G = helpers.group("sym(4)")
    with pytest.raises(LimitExceeded):
        is_isomorphic(G, G, Limits(iso_limit=16))


def test_complement_in_d8():
    G = helpers.group("d8")
    rotation = next(x for x in G.elements if x.order() == 4)
    A = G.subgroup_generated([rotation])
    H = find_complement(G, A)
    assert H is not None
    assert H.order == 2
    assert not (H.members - {G.identity}) & A.members


def test_no_complement_in_q8():
    G = helpers.group("q8")
    assert find_complement(G, center(G)) is None


@pytest.mark.parametrize("source,l,order", [
    ("sym(4)", 2, 8),
    ("sym(4)", 3, 3),
    ("pgl(3,2)", 7, 7),
    ("cyc(12)", 2, 4),
])
def test_sylow_orders(source: str, l: int, order: int):
    G = helpers.group(source)
    P = sylow_subgroup(G, l)
    assert P.order == order
    assert G.subgroup(P.members).order == order


def test_sylow_of_s4_is_d8():
    P = sylow_subgroup(helpers.group("sym(4)"), 2).as_group()
    assert is_isomorphic(P, helpers.group("d8")) is not None


@pytest.mark.parametrize("l,order", [(2, 8), (3, 6)])
def test_sylow_normalizers_in_s4(l: int, order: int):
    G = helpers.group("sym(4)")
    assert normalizer(G, sylow_subgroup(G, l)).order == order


def test_centralizer():
    G = helpers.group("d8")
    z = next(x for x in center(G).members if not x.is_identity())
    assert centralizer(G, [z]).order == 8
    assert centralizer(G, G.generators).order == 2


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
