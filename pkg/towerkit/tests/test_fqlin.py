# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
import pytest

import towerkit.tests.helpers as helpers
from towerkit.core.enums import Verdict
from towerkit.core.errors import LimitExceeded
from towerkit.fqlin.analysis import analyze_sylow_linear
from towerkit.fqlin.field import FqField
from towerkit.fqlin.groups import gl, gl_order, pgl, pgl_order, psl, psl_order, sl
from towerkit.fqlin.matrix import MatFq, ProjMatFq
from towerkit.fqlin.torus import torus_normalizer_split
from towerkit.fqlin.unitriangular import unitriangular
from towerkit.groups.search import is_isomorphic


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 16])
def test_field_tables(q: int):
    F = FqField(q)
    assert F.p ** F.m == q
    for a in F.elements:
        assert F.add(a, F.neg(a)) == 0
        assert F.mul(a, 1) == a
        for b in F.elements:
            assert F.mul(a, b) == F.mul(b, a)
            assert F.add(a, b) == F.add(b, a)
        if a:
            assert F.mul(a, F.inv(a)) == 1
    assert F.multiplicative_order(F.primitive) == q - 1


def test_field_four():
    F = FqField(4)
    assert (F.p, F.m) == (2, 2)
    assert F.to_dict()["modulus"] == [1, 1, 1]
    assert sorted(F.power(F.primitive, k) for k in range(3)) == [1, 2, 3]


def test_field_arguments():
    with pytest.raises(ValueError, match="not a prime power"):
        FqField(6)
    with pytest.raises(LimitExceeded):
        FqField(32)
    with pytest.raises(ZeroDivisionError):
        FqField(5).inv(0)


@pytest.mark.parametrize("builder,n,q,order", [
    (gl, 2, 2, 6),
    (gl, 2, 3, 48),
    (sl, 2, 3, 24),
    (pgl, 2, 3, 24),
    (pgl, 3, 2, 168),
    (psl, 2, 5, 60),
    (pgl, 2, 4, 60),
])
def test_linear_orders(builder, n: int, q: int, order: int):
    assert builder(n, q).group.order == order


# Transvections I + t E_(i,i+1), I + t E_(i+1,i) over an additive basis, plus one
# primitive diagonal for gl and pgl.
@pytest.mark.parametrize("builder,n,q,count", [
    (gl, 2, 4, 5),
    (sl, 2, 4, 4),
    (pgl, 3, 2, 5),
    (psl, 2, 5, 2),
])
def test_generator_sets(builder, n: int, q: int, count: int):
    G = builder(n, q)
    mats = [m.matrix if isinstance(m, ProjMatFq) else m for m in G.generator_matrices]
    assert len(mats) == count
    diagonal = [m for m in mats if m.is_diagonal()]
    assert len(diagonal) == (1 if builder in (gl, pgl) else 0)
    for m in diagonal:
        assert G.field.multiplicative_order(m.determinant()) == q - 1
    for m in mats:
        if m.is_diagonal():
            continue
        off = [(i, j) for i in range(n) for j in range(n) if i != j and m[i, j] != 0]
        assert len(off) == 1
        assert abs(off[0][0] - off[0][1]) == 1
        assert all(m[i, i] == 1 for i in range(n))


def test_order_formulas():
    assert gl_order(3, 2) == 168
    assert pgl_order(2, 5) == 120
    assert psl_order(2, 7) == 168


@pytest.mark.parametrize("builder,n,q,target", [
    (pgl, 2, 3, "sym(4)"),
    (psl, 2, 5, "alt(5)"),
    (gl, 2, 2, "sym(3)"),
])
def test_linear_isomorphisms(builder, n: int, q: int, target: str):
    assert is_isomorphic(builder(n, q).group, helpers.group(target)) is not None


def test_matrix_correspondence():
    G = gl(2, 3)
    xs = G.group.elements[:12]
    for x in xs:
        for y in xs:
            assert G.underlying(x * y) == G.underlying(x) @ G.underlying(y)
    for x in G.group.elements:
        assert G.element(G.underlying(x)) == x
    S = sl(2, 3)
    assert all(S.underlying(x).determinant() == 1 for x in S.group.elements)


@pytest.mark.parametrize("n,q,orders", [
    (3, 2, [1, 2, 8]),
    (3, 3, [1, 3, 27]),
    (4, 2, [1, 2, 8, 64]),
    (3, 4, [1, 4, 64]),
])
def test_unitriangular_filtration(n: int, q: int, orders: list[int]):
    U = unitriangular(n, q)
    assert [L.group.order for L in U.levels] == orders
    assert U.verify()
    for x in U.top.group.elements:
        assert U.top.underlying(x).is_unitriangular()


def test_unitriangular_kernels():
    U = unitriangular(3, 3)
    assert str(U.kernel_structure(3)) == "abelian: 3,3"
    assert U.kernels[-1].order == 9
    assert unitriangular(3, 4).kernel_structure(3).invariant_factors == (2, 2, 2, 2)


def test_u3_small_fields():
    assert is_isomorphic(unitriangular(3, 2).top.group, helpers.group("d8")) is not None
    assert is_isomorphic(unitriangular(3, 3).top.group, helpers.group("heis(3)")) is not None


def test_truncate_and_embed():
    F = FqField(3)
    M = MatFq(F, [[1, 2, 1], [0, 1, 2], [0, 0, 1]])
    assert M.truncate() == MatFq(F, [[1, 2], [0, 1]])
    assert M.truncate().embed() == MatFq(F, [[1, 2, 0], [0, 1, 0], [0, 0, 1]])


@pytest.mark.parametrize("q,normalizer_order", [(3, 4), (5, 8), (4, 6)])
def test_torus_normalizer(q: int, normalizer_order: int):
    tn = torus_normalizer_split(2, q)
    assert tn.normalizer.order == normalizer_order
    assert tn.torus.order == q - 1
    assert tn.weyl.order == 2
    assert tn.to_dict()["normalizer_order"] == normalizer_order


def test_torus_normalizer_q5_is_d8():
    tn = torus_normalizer_split(2, 5)
    assert is_isomorphic(tn.normalizer.as_group(), helpers.group("d8")) is not None


def test_torus_normalizer_rank_three():
    tn = torus_normalizer_split(3, 2)
    assert tn.torus.order == 1
    assert tn.normalizer.order == 6
    assert tn.weyl_isomorphism.is_isomorphism()


def test_sylow_defining_characteristic():
    report = analyze_sylow_linear(3, 2, 2)
    assert report.sylow.order == 8
    assert is_isomorphic(report.sylow.as_group(), helpers.group("d8")) is not None
    assert report.verdict == Verdict.special
    assert report.unitriangular_isomorphic
    d = report.to_dict()
    assert d["defining_characteristic"]
    assert d["sylow_order"] == 8


@pytest.mark.parametrize("n,q,l,order", [(3, 2, 7, 7), (2, 5, 2, 8), (2, 3, 3, 3), (3, 2, 3, 3)])
def test_sylow_linear(n: int, q: int, l: int, order: int):
    report = analyze_sylow_linear(n, q, l)
    assert report.sylow.order == order
    assert report.verdict == Verdict.special
    if l != report.group.field.p:
        assert report.unitriangular_isomorphic is None
    else:
        assert report.unitriangular_isomorphic


def test_sylow_linear_needs_prime():
    with pytest.raises(ValueError, match="not prime"):
        analyze_sylow_linear(2, 3, 4)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
