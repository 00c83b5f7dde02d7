# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
import sys

from towerkit.cli.main import main

sys.exit(main())
