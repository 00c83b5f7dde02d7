# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
from .products import (alternating_group, cyclic_group, dihedral_group, direct_product,
                       heisenberg_group, semidirect_product, symmetric_group)
from .sylow import sylow_symmetric
from .wreath import WreathProduct, wreath_regular
