import sys

from graph_edit_distance.cli import main

sys.exit(main())
