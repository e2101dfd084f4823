"""Binary linear programming formulations of the graph edit distance."""
