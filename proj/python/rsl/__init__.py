"""Radial dispersive estimates toolkit (compiled core in ``rsl._rsl``)."""

from ._rsl import *  # noqa: F401,F403
from ._rsl import Error, Symbol  # noqa: F401
