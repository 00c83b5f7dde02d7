# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
from .central import (CentralExtensionData, PullbackCover, detect_central_extension,
                      pullback_cover)
from .fc import FcGroup, fc_model
from .isoclinism import IsoclinismWitness, is_isoclinic
from .quaternion import QuaternionGroup, QuaternionTriple, fc_in_quaternions, quaternion_product
