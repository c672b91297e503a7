"""Finite groups, their duals, and the Halmos-von Neumann classification of finite actions."""

__version__ = "0.1.0"
