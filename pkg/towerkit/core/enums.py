# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
from enum import Enum


class Verdict(Enum):
    special = 0
    not_special = 1
    inconclusive = 2


class VerificationMode(Enum):
    exhaustive = 0
    sampled = 1


class OutputFormat(Enum):
    json = 0
    text = 1
