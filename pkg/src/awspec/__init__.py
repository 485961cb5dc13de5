"""Laplace spectrum of the Aloff-Wallach space W^{1,1} under homogeneous metrics."""

__version__ = "0.1.0"
