# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
# pyright: reportUnusedImport=false
from .permutation import Permutation, direct_sum
from .group import FiniteGroup, Subgroup, close_group, closure
from .hom import GroupHom, hom_from_images
from .structure import (center, centralizer, commutator, conjugacy_classes,
                        derived_series, derived_subgroup, element_orders,
                        is_class_at_most_two, is_solvable, normal_closure,
                        normal_subgroups, normalizer, quotient_group, sylow_subgroup)
from .search import find_complement, is_isomorphic, iter_isomorphisms, small_generating_set
from .regular import regular_representation
