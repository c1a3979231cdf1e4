"""Tableau models for classical and shifted Littlewood-Richardson
coefficients, with mutually verifying oracles and a conjecture sweep CLI."""

__version__ = "0.1.0"
