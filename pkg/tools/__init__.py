"""Command-line tools for AnnularSkein."""
