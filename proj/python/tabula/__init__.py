"""Tables as grids, reading forests and genetic layers."""

from ._tabula import *  # noqa: F401,F403
from ._tabula import __all__  # noqa: F401

__version__ = "0.1.0"
