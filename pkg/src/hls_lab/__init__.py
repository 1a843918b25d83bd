"""Exact computation of Hall-Littlewood-Schubert series, their specializations and a lattice oracle."""

__version__ = "0.1.0"
