"""Exact spectra, Satake-diagram data and explicit eigenfunctions of compact symmetric spaces."""

__version__ = "0.1.0"
