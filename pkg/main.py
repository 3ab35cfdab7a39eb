#!/usr/bin/env python3
"""
Quiver Stability - Main Entry Point

Exact stability computations for small quiver algebras over F_p:
- phases, Harder-Narasimhan filtrations and torsion classes
- maximal green sequences
- King walls, chambers and red paths

Usage:
    python main.py mgs --algebra builtin:A2 --path fixtures/paths/a2-mgs3.path
"""

import sys
from pathlib import Path

# Add the project root to Python path
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))

from quiver_stability import main

if __name__ == "__main__":
    try:
        main()
    except KeyboardInterrupt:
        print("\nInterrupted by user", file=sys.stderr)
        sys.exit(130)
