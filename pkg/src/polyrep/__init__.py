"""Polynomial representation of categorified sl_n and its current algebra shadow."""
from ._kernel import BACKEND

__version__ = "0.1.0"

__all__ = ["BACKEND", "__version__"]
