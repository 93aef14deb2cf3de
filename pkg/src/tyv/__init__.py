"""Exact verification toolkit for twisted Yangians of split type."""

__version__ = "0.1.0"
