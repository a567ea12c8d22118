"""
Finite TQFT - partition functions, Frobenius algebras, lattice state sums and
modular data of finite-group topological quantum field theories.
"""

__version__ = "0.1.0"
