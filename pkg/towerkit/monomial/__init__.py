# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
from .gaussian import QUATERNION_MATRICES, gaussian, matrix, mobius
from .maps import MonomialMap, compose, mobius_to_monomial
from .action import (MonomialAction, TypeDescriptor, action_from_q8_triple, type_descriptor,
                     verify_action)
