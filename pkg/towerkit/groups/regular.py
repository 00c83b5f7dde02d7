# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
from typing import Callable, Hashable, Sequence, TypeVar

from towerkit.groups.group import FiniteGroup
from towerkit.groups.permutation import Permutation

T = TypeVar("T", bound=Hashable)


def regular_representation(elements: Sequence[T], multiply: Callable[[T, T], T],
                           generators: Sequence[T],
                           name: str = "") -> tuple[FiniteGroup, dict[T, Permutation]]:
    """
    Convert an abstractly given group (a list of hashable elements with a product) to
    a permutation group through its left regular action on the element list. The
    first element must be the identity. Returns the group and the element-to-
    permutation map.
    """
    index = {e: i for i, e in enumerate(elements)}
    if len(index) != len(elements):
        raise ValueError("Element list contains duplicates")

    perms: dict[T, Permutation] = {}
    for x in elements:
        perms[x] = Permutation([index[multiply(x, e)] for e in elements], check=False)
    assert perms[elements[0]].is_identity(), "First element must be the identity"
    G = FiniteGroup.trusted(len(elements), [perms[g] for g in generators],
                            perms.values(), name)
    assert G.order == len(elements)
    return G, perms
