"""Conveyor-belt network simulation: Godunov solver and closed-form oracles."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
