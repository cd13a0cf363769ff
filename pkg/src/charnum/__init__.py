"""Exact computation of characteristic numbers of smooth plane conics, cubics and quartics."""

__version__ = "1.0.0"
