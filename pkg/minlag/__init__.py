"""Minimal Lagrangian surfaces in the complex hyperbolic quadric, built from holomorphic potentials."""

__version__ = "0.1.0a"
