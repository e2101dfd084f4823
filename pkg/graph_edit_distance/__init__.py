"""
Graph Edit Distance toolkit - exact binary linear programs, LP lower bounds
and heuristic baselines for error-tolerant graph matching.
"""

__version__ = "1.0.0"
