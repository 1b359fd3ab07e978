"""Depth-zero packet combinatorics for GSpin groups.

Exact root-datum, affine Weyl group, lattice torsion, tame character,
centralizer and Hecke-algebra computations, with a command-line front end.
"""

__version__ = "0.1.0"
