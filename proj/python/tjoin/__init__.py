"""Bounds and exact algorithms for weighted max-min T-join problems."""

from tjoin._core import *  # noqa: F401,F403
from tjoin._core import __doc__  # noqa: F401
