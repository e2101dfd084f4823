"""Graph loading, validation and dataset components."""
