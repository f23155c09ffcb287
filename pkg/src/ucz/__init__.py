"""Exact-arithmetic workbench for universal centralizers at small rank."""

from .liealg import ALGEBRA_DESCRIPTORS, algebra_from_descriptor, build_algebra

__all__ = ["ALGEBRA_DESCRIPTORS", "algebra_from_descriptor", "build_algebra"]
__version__ = "0.1.0"
