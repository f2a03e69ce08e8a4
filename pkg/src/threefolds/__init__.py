"""Threefolds isogenous to a product of curves: groups, characters,
Hodge numbers, first homology, and the bounded classification search."""

__version__ = "0.1.0"
