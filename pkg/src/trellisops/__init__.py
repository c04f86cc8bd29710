"""Pseudo-ordered sets, trellises and (pseudo-)triangular norms on them."""

__version__ = "0.1.0"
