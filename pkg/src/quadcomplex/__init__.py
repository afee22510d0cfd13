"""Exact invariants of quadratic line complexes (pencils of quadrics in P^5):
Segre symbols, GIT semistability, singular quartic surfaces, stabilizer and
moduli dimensions, and cosingular families, all over Q(i)."""

__version__ = "0.1.0"
