"""Solvers for graph modification problems, each paired with an exact counterpart."""

__version__ = "0.1.0"
