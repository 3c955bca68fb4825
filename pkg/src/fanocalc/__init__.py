"""Exact computations for the semistable degeneration of a Fano eightfold of K3 type."""

__version__ = "0.1.0"
