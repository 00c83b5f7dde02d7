# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
# pyright: reportUnusedImport=false
from .registry import CATALOG, CatalogEntry, build_group, get_entry, register
from . import builtins
