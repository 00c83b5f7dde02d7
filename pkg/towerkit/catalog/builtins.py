# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
from typing import Sequence, cast

from sympy import isprime

from towerkit.abelian.abelian import AbelianGroup
from towerkit.catalog.registry import BuiltArg, register
from towerkit.core.config import Limits
from towerkit.extensions.fc import fc_model
from towerkit.extensions.quaternion import QuaternionGroup
from towerkit.fqlin.groups import gl, pgl, psl, sl
from towerkit.fqlin.unitriangular import unitriangular
from towerkit.groups.group import FiniteGroup
from towerkit.groups.structure import sylow_subgroup
from towerkit.products.products import (alternating_group, cyclic_group, dihedral_group,
                                        direct_product, heisenberg_group, symmetric_group)
from towerkit.products.sylow import sylow_symmetric
from towerkit.products.wreath import wreath_regular


def _ints(args: Sequence[BuiltArg]) -> list[int]:
    return [cast(int, a) for a in args]


def _group(a: BuiltArg) -> FiniteGroup:
    return cast(FiniteGroup, a)


@register("q8", [], "quaternion group of order 8, regular on its units")
def _q8(args: Sequence[BuiltArg], limits: Limits) -> FiniteGroup:
    return QuaternionGroup().group


@register("d8", [], "dihedral group of order 8 on the square's vertices")
def _d8(args: Sequence[BuiltArg], limits: Limits) -> FiniteGroup:
    return dihedral_group(4)


@register("cyc", ["int"], "cyclic group Z/n")
def _cyc(args: Sequence[BuiltArg], limits: Limits) -> FiniteGroup:
    return cyclic_group(*_ints(args))


@register("dihedral", ["int"], "dihedral group of order 2n")
def _dihedral(args: Sequence[BuiltArg], limits: Limits) -> FiniteGroup:
    return dihedral_group(*_ints(args))


@register("sym", ["int"], "symmetric group on n points")
def _sym(args: Sequence[BuiltArg], limits: Limits) -> FiniteGroup:
    return symmetric_group(_ints(args)[0], limits)


@register("alt", ["int"], "alternating group on n points")
def _alt(args: Sequence[BuiltArg], limits: Limits) -> FiniteGroup:
    return alternating_group(_ints(args)[0], limits)


@register("heis", ["int"], "Heisenberg group of unitriangular 3x3 matrices over Z/p")
def _heis(args: Sequence[BuiltArg], limits: Limits) -> FiniteGroup:
    (p,) = _ints(args)
    if not isprime(p):
        raise ValueError(f"{p} is not prime")
    return heisenberg_group(p, limits)


@register("abelian", ["int..."], "finite abelian group from cyclic orders")
def _abelian(args: Sequence[BuiltArg], limits: Limits) -> FiniteGroup:
    return AbelianGroup.from_cyclic_orders(_ints(args)).permutation_group()[0]


@register("fc", ["int..."], "free central extension of an abelian group, regular model")
def _fc(args: Sequence[BuiltArg], limits: Limits) -> FiniteGroup:
    return fc_model(AbelianGroup.from_cyclic_orders(_ints(args)), limits)[1]


@register("gl", ["int", "int"], "general linear group GL_n(F_q) on nonzero vectors")
def _gl(args: Sequence[BuiltArg], limits: Limits) -> FiniteGroup:
    n, q = _ints(args)
    return gl(n, q, limits).group


@register("sl", ["int", "int"], "special linear group SL_n(F_q) on nonzero vectors")
def _sl(args: Sequence[BuiltArg], limits: Limits) -> FiniteGroup:
    n, q = _ints(args)
    return sl(n, q, limits).group


@register("pgl", ["int", "int"], "projective general linear group on projective points")
def _pgl(args: Sequence[BuiltArg], limits: Limits) -> FiniteGroup:
    n, q = _ints(args)
    return pgl(n, q, limits).group


@register("psl", ["int", "int"], "projective special linear group on projective points")
def _psl(args: Sequence[BuiltArg], limits: Limits) -> FiniteGroup:
    n, q = _ints(args)
    return psl(n, q, limits).group


@register("u", ["int", "int"], "upper unitriangular group U_n(F_q)")
def _u(args: Sequence[BuiltArg], limits: Limits) -> FiniteGroup:
    n, q = _ints(args)
    return unitriangular(n, q, limits).top.group


@register("wreath", ["group", "group"], "regular wreath product N wr H")
def _wreath(args: Sequence[BuiltArg], limits: Limits) -> FiniteGroup:
    return wreath_regular(_group(args[0]), _group(args[1]), limits).product


@register("direct", ["group", "group"], "direct product G x H")
def _direct(args: Sequence[BuiltArg], limits: Limits) -> FiniteGroup:
    return direct_product(_group(args[0]), _group(args[1]), limits)


@register("sylow", ["group", "int"], "a Sylow l-subgroup of a group")
def _sylow(args: Sequence[BuiltArg], limits: Limits) -> FiniteGroup:
    return sylow_subgroup(_group(args[0]), cast(int, args[1]), limits).as_group()


@register("sylow_sym", ["int", "int"], "iterated wreath Sylow l-subgroup of sym(n)")
def _sylow_sym(args: Sequence[BuiltArg], limits: Limits) -> FiniteGroup:
    n, l = _ints(args)
    return sylow_symmetric(n, l, limits)
