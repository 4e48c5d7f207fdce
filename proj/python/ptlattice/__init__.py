from ._ptlattice import *  # noqa: F401,F403
from ._ptlattice import __doc__  # noqa: F401
