# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
# pyright: reportUnusedImport=false
from .literal import GroupLiteral, parse_literal, tokenize
from .report import SCHEMA_VERSION, Report, report_schema
from .commands import COMMANDS, load_group
from .main import build_parser, main, run
