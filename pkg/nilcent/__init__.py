from . import (classical, components, conjugacy, doublecent, examples, groebner, liealg, rootsys, scalars,
               sl2)
from .components import ComponentGroup
from .liealg import Automorphism, LieAlgebra
from .sl2 import Sl2Triple

try:
    from .version import version as __version__  # noqa
except ImportError:
    __version__ = "unknown"
