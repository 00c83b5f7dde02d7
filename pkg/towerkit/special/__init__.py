# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
from .certificate import SpecialCertificate, SpecialFailure, SpecialStep, verify_certificate
from .search import SpecialResult, is_special
