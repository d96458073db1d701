"""Tensor products, representation rings and tensor ideals for string algebras."""

__version__ = "0.1.0"
