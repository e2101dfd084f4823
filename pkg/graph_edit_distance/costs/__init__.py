"""Edit cost model components."""
