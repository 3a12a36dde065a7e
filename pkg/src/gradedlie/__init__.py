"""Exact Z2xZ2-graded Lie algebras and Lie superalgebras as matrix algebras."""

__version__ = "0.1.0"
