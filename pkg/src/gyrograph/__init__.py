"""Finite gyro-groups, their G-graphs and Cayley graphs, and graph symmetry analysis."""

from .core import GyroGroup, Permutation, StructureError, ValidationReport, validate

__version__ = "0.1.0"

__all__ = ["GyroGroup", "Permutation", "StructureError", "ValidationReport", "validate"]
