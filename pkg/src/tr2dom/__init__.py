"""Exact total Roman {2}-domination and related parameters on small graphs."""

__version__ = "0.1.0"

from .graph_core import Graph
from .labeling import Labeling
from .solvers import ParameterKind, exact

__all__ = ["Graph", "Labeling", "ParameterKind", "exact", "__version__"]
