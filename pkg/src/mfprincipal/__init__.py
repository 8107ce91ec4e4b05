"""Restrictions of simple algebraic group modules to a principal A1-subgroup."""
from .rootsys import GroupType, RootSystem, build

__version__ = "0.1.0"
__all__ = ["GroupType", "RootSystem", "build", "__version__"]
