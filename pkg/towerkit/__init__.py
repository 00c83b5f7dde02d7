# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
# pyright: reportUnusedImport=false
# isort: skip_file

# Version number
__version__ = "0.1.0"

# Limits, errors and enums
from .core import *

# Permutation groups, homomorphisms and structure
from .groups import *

# Finite abelian groups and Smith normal form
from .abelian import *

# Products, wreath products and symmetric group Sylows
from .products import *

# Free central extensions, covers, isoclinism
from .extensions import *

# Special filtrations and their certificates
from .special import *

# Wreath covers and toric towers
from .tower import *

# Matrix groups over finite fields
from .fqlin import *

# Monomial maps and actions
from .monomial import *

# Register the built in catalog
from .catalog import CATALOG, build_group

# Literal parsing and command line
from .cli import parse_literal, load_group, main
