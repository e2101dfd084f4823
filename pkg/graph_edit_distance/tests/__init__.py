"""Tests for the graph edit distance toolkit."""
