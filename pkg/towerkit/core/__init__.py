# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
from .config import Limits, get_default_limits, resolve_limits, set_default_limits
from .enums import OutputFormat, VerificationMode, Verdict
from .errors import (DegreeMismatch, DimensionMismatch, LimitExceeded, NotAbelian,
                     NotAHomomorphism, NotAnAction, NotClassTwo, NotInvertible,
                     NotMonomial, NotNormal, ParseError, TowerkitError, VerificationFailed,
                     VerificationResult)
