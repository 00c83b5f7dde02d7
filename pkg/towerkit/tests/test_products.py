# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
import pytest

import towerkit.tests.helpers as helpers
from towerkit.core.config import Limits
from towerkit.core.errors import LimitExceeded, NotAnAction
from towerkit.groups.permutation import Permutation
from towerkit.groups.search import is_isomorphic
from towerkit.groups.structure import sylow_subgroup
from towerkit.products.products import direct_product, semidirect_product
from towerkit.products.sylow import sylow_symmetric
from towerkit.products.wreath import WreathProduct, wreath_regular


@pytest.mark.parametrize("base,top", [
    ("cyc(2)", "cyc(2)"),
    ("cyc(3)", "cyc(2)"),
    ("cyc(2)", "cyc(3)"),
    ("sym(3)", "cyc(2)"),
])
def test_wreath_order(base: str, top: str):
    N = helpers.group(base)
    H = helpers.group(top)
    W = wreath_regular(N, H)
    assert W.order == N.order ** H.order * H.order
    assert W.product.order == W.order
    assert W.degree == N.degree * H.order
    B = W.base_subgroup()
    assert B.order == N.order ** H.order
    assert B.is_normal()


def test_wreath_decompose():
    W = wreath_regular(helpers.group("cyc(2)"), helpers.group("cyc(3)"))
    for p in W.product.elements:
        comps, h = W.decompose(p)
        assert h in W.top
        assert W.element(comps, h) == p


def test_wreath_c2_c2_is_d8():
    W = wreath_regular(helpers.group("cyc(2)"), helpers.group("cyc(2)"))
    assert is_isomorphic(W.product, helpers.group("d8")) is not None


def test_wreath_top_action():
    H = helpers.group("sym(3)")
    W = WreathProduct(helpers.group("cyc(2)"), H)
    d = W.block_size
    index = {h: i for i, h in enumerate(H.elements)}
    # Relabelling block k as k^-1 turns the left regular action into the right one.
    relabel = Permutation([index[e.inverse()] * d + x for e in H.elements for x in range(d)])
    for h in H.elements:
        t = W.top_perm(h)
        right = relabel.inverse() * t * relabel
        for c, e in enumerate(H.elements):
            assert t(c * d) == index[h * e] * d
            assert right(c * d) == index[e * h.inverse()] * d


def test_wreath_structure_without_enumeration():
    W = WreathProduct(helpers.group("sym(3)"), helpers.group("cyc(4)"), Limits(max_order=1000))
    assert W.order == 6 ** 4 * 4
    assert len(W.generators) == 3
    with pytest.raises(LimitExceeded):
        W.product


def test_direct_product():
    G = direct_product(helpers.group("cyc(2)"), helpers.group("sym(3)"))
    assert G.order == 12
    assert G.degree == 5
    assert is_isomorphic(G, helpers.group("dihedral(6)")) is not None


def test_semidirect_klein_by_three_is_a4():
    V = helpers.group("dihedral(2)")
    C = helpers.group("cyc(3)")
    a, b = V.generators
    G = semidirect_product(V, C, {C.generators[0]: {a: b, b: a * b}})
    assert G.order == 12
    assert not G.is_abelian()
    assert is_isomorphic(G, helpers.group("alt(4)")) is not None
    # A4 has no subgroup of order 6
    for x in G.elements:
        for y in G.elements:
            assert len(G.subgroup_generated([x, y])) != 6


def test_semidirect_rejects_non_action():
    V = helpers.group("dihedral(2)")
    C = helpers.group("cyc(3)")
    a, b = V.generators
    with pytest.raises(NotAnAction):
        semidirect_product(V, C, {C.generators[0]: {a: a, b: a}})
    # An automorphism of order 2 cannot be the image of a generator of order 3.
    with pytest.raises(NotAnAction):
        semidirect_product(V, C, {C.generators[0]: {a: b, b: a}})


@pytest.mark.parametrize("n,l,order", [
    (4, 2, 8),
    (6, 2, 16),
    (8, 2, 128),
    (9, 3, 81),
    (7, 5, 5),
    (3, 5, 1),
])
def test_sylow_symmetric_order(n: int, l: int, order: int):
    P = sylow_symmetric(n, l)
    assert P.order == order
    assert P.degree == n


@pytest.mark.parametrize("n", [4, 6])
def test_sylow_symmetric_matches_search(n: int):
    P = sylow_symmetric(n, 2)
    S = sylow_subgroup(helpers.group(f"sym({n})"), 2).as_group()
    assert is_isomorphic(P, S) is not None


def test_sylow_symmetric_needs_prime():
    with pytest.raises(ValueError, match="not prime"):
        sylow_symmetric(6, 4)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
