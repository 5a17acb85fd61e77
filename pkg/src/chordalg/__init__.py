"""Desk-scale algebra of Legendrian contact homology over Z/2.

Subpackages: free noncommutative polynomials (freealg), the Chekanov-Eliashberg
DGA (dga), characteristic algebras via degree-bounded rewriting (charalg),
augmentation and matrix-representation search (reps), Lagrangian-projection
diagrams with polygon enumeration (diagram), the two-variable Kauffman
polynomial and its tb bound (kauffman), spinning transfer (spin), and the
chord-count inequality checkers (bounds).
"""

from .freealg import Algebra, AlgebraError, Poly

__all__ = ["Algebra", "AlgebraError", "Poly"]
__version__ = "0.1.0"
