# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
from .field import FqField, first_irreducible
from .matrix import MatFq, ProjMatFq
from .groups import (MatrixGroup, gl, gl_order, pgl, pgl_order, psl, psl_order, sl, sl_order,
                     unitriangular_order)
from .unitriangular import UnitriangularFiltration, unitriangular
from .torus import TorusNormalizer, split_torus, torus_normalizer_split
from .analysis import LinearSylowReport, analyze_sylow_linear
