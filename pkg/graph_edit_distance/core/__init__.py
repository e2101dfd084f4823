"""Core data model components."""
