"""Exact verification of alternating binomial sum = reciprocal product identities."""

__version__ = "0.1.0"
