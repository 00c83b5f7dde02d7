# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
from typing import Optional

from towerkit.core.config import Limits
from towerkit.groups.group import FiniteGroup, close_group
from towerkit.groups.hom import GroupHom
from towerkit.groups.permutation import Permutation, direct_sum
from towerkit.groups.regular import regular_representation

#: Quaternion units, identity first.
UNITS = ("1", "-1", "i", "-i", "j", "-j", "k", "-k")

_BASIS_PRODUCTS = {
    ("i", "i"): "-1", ("j", "j"): "-1", ("k", "k"): "-1",
    ("i", "j"): "k", ("j", "k"): "i", ("k", "i"): "j",
    ("j", "i"): "-k", ("k", "j"): "-i", ("i", "k"): "-j",
}


def _split(u: str) -> tuple[int, str]:
    return (-1, u[1:]) if u.startswith("-") else (1, u)


def quaternion_product(u: str, v: str) -> str:
    su, bu = _split(u)
    sv, bv = _split(v)
    if bu == "1":
        prod = bv
    elif bv == "1":
        prod = bu
    else:
        prod = _BASIS_PRODUCTS[(bu, bv)]
    s, b = _split(prod)
    sign = su * sv * s
    return b if sign == 1 else "-" + b


class QuaternionGroup:
    """
    Q8 as the left regular permutation group on its eight units, with the unit
    names kept for both directions.
    """

    def __init__(self):
        super().__init__()
        group, perms = regular_representation(list(UNITS), quaternion_product, ["i", "j"], "q8")

        #: Q8 on 8 points.
        self.group: FiniteGroup = group

        #: Unit name -> permutation.
        self.element: dict[str, Permutation] = perms

        #: Permutation -> unit name.
        self.unit_of: dict[Permutation, str] = {p: u for u, p in perms.items()}


class QuaternionTriple:
    """
    The subgroup of Q8 x Q8 x Q8 generated by g1 = (1, i, i), g2 = (i, 1, j) and
    g3 = (j, j, 1), with its three coordinate projections.
    """

    def __init__(self, group: FiniteGroup, q8: QuaternionGroup, generators: list[Permutation],
                 projections: list[GroupHom]):
        super().__init__()
        self.group = group
        self.q8 = q8
        self.generators = generators
        self.projections = projections

    def components(self, x: Permutation) -> tuple[str, str, str]:
        names = tuple(self.q8.unit_of[x.restrict(8 * k, 8)] for k in range(3))
        return (names[0], names[1], names[2])

    def scalar_subgroup_members(self) -> list[Permutation]:
        """
        Elements with every component in {1, -1}.
        """
        return [x for x in self.group.elements
                if all(c in ("1", "-1") for c in self.components(x))]


GENERATOR_TRIPLES = (("1", "i", "i"), ("i", "1", "j"), ("j", "j", "1"))


def fc_in_quaternions(limits: Optional[Limits] = None) -> QuaternionTriple:
    """
    The subgroup of Q8^3 generated by the triples g1 = (1, i, i), g2 = (i, 1, j) and
    g3 = (j, j, 1). It has order 64 and is isoclinic to F^c((Z/2)^3): the images of
    g1, g2, g3 span the abelianisation (Z/2)^3, and the commutators
    [g1, g2] = (1, 1, -1), [g2, g3] = (-1, 1, 1), [g1, g3] = (1, -1, 1) span the
    derived subgroup {1, -1}^3, which is also the centre.
    """
    q8 = QuaternionGroup()
    gens = [direct_sum([q8.element[u] for u in triple]) for triple in GENERATOR_TRIPLES]
    F = close_group(gens, name="fc_in_q8", limits=limits)
    projections = [GroupHom(F, q8.group, {x: x.restrict(8 * k, 8) for x in F.elements})
                   for k in range(3)]
    assert F.order == 64
    return QuaternionTriple(F, q8, gens, projections)
