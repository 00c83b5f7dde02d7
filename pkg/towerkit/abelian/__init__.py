# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
from .abelian import (AbelianBasis, AbelianGroup, abelian_basis, abelian_from_group,
                      exterior_square)
from .snf import IntMatrix, smith_normal_form, unimodular_inverse
