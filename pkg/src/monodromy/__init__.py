"""Monodromy of x^p y^p (1 - x - y) and the Lie algebra of its Zariski closure."""

__version__ = "0.1.0"
