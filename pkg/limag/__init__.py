"""
Perfect codes for t asymmetric errors of limited magnitude l: lattice codes,
B_t[l] sequences over finite abelian groups, syndrome decoding and a survey
of which (n, t, l) admit perfect codes.
"""

__version__ = '0.1.0'
__license__ = "MIT"
__author__ = "Alex Vagin (http://alex.cloudware.it)"

__all__ = []

from . import errors, config, integers, sphere, groups, sequences, lattice
from . import codec, analysis, formats

from .errors import *
from .config import *
from .integers import *
from .sphere import *
from .groups import *
from .sequences import *
from .lattice import *
from .codec import *
from .analysis import *
from .formats import *

for _module in (errors, config, integers, sphere, groups, sequences, lattice,
                codec, analysis, formats):
  __all__ += _module.__all__
del _module
