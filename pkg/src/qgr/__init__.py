"""Exact and numeric tools for the small quantum cohomology of Grassmannians."""

__version__ = "0.1.0"
