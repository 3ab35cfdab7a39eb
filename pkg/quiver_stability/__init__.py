"""
Quiver Stability - exact stability data for small quiver algebras over F_p.

This package computes:
- Rudakov stability: phases, semistability, Harder-Narasimhan filtrations
- torsion classes, chains of torsion classes and maximal green sequences
- King wall-and-chamber geometry and red paths

Version: 1.0.0
"""

__version__ = "1.0.0"
__author__ = "Quiver Stability Team"

from .main import main

__all__ = ["main"]
