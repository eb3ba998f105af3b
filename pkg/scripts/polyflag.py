#!/usr/bin/env python3
"""
polyflag CLI entry point.

Usage:
    python scripts/polyflag.py --help
    python scripts/polyflag.py decompose data/corpus/three_points.scx --pairs moment-angle
    python scripts/polyflag.py verify data/corpus/pentagon.scx --json
"""

import sys
from pathlib import Path

# Add project root to Python path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.cli.main import main

if __name__ == "__main__":
    main()
