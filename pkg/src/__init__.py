"""
Source Package
Height-1 conditions of graphs, polymorphism indicators and 3-coloring gadgets
"""
from .config import settings, OutputFormat

__version__ = "0.1.0"

__all__ = ["settings", "OutputFormat", "__version__"]
