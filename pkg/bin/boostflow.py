#!/usr/bin/env python
# PYTHON_ARGCOMPLETE_OK

"""
Compose Lorentz boosts, follow the flow they generate and draw its
phase portraits.
"""

import sys

from boostflow.cli import main

sys.exit(main())
