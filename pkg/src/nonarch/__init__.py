"""Exact non-Archimedean computation: p-adic numbers, extensions, basic function
algebras, and Swiss-cheese classicalisation."""

__version__ = "0.1.0"
