"""Hom complexes of directed graphs."""

from ._core import *  # noqa: F401,F403
from ._core import DihomError, Digraph, HomotopyRelation  # noqa: F401
