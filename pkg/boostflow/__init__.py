"""
Finite Lorentz boosts in the 2x2 spinor representation, exact Thomas
rotation angles and the vector field flow of the boost parameters.
"""

import logging
logging.getLogger(__name__).addHandler(logging.NullHandler())

from .core import *
from .spin_algebra import *
from .kinematics import *
from .flow import *
from .oracle import *
from .portrait import *
from .collimation import *
