"""Self-similar graph analysis package."""
