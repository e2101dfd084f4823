"""
Command line entry point.

    python ged.py compute --g1 a.gxl --g2 b.gxl --method f2,bp,hed --cost grec
    python ged.py bench --config bench.json --out results/

Equivalent to `python -m graph_edit_distance`.
"""

import sys

from graph_edit_distance.cli import main

if __name__ == "__main__":
    sys.exit(main())
