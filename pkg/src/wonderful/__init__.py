"""Wonderful varieties: spherical systems and invariant Hilbert scheme computations."""
