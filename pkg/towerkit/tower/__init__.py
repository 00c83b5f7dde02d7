# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
from .module import ConjugationModule, FreeModuleCover
from .tower import StepVerification, TowerCertificate, TowerStep, build_tower, verify_step, verify_tower
from .untwist import UntwistReport, untwist_central
