"""Python access to the freezelab C++ core."""

from ._freezelab import *  # noqa: F401,F403
from ._freezelab import ParseError, ResourceError, Tower  # noqa: F401

__version__ = "0.1.0"
