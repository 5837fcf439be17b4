"""Exact computations with finite-dimensional Hopf algebras and their actions on commutative algebras."""

__version__ = "0.1.0"
