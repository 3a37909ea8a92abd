"""Exact cohomology of Frobenius kernels of unipotent radicals in characteristic 2."""
from .rootsystem import RootSystem, WeylWord, build_root_system, parse_system

__all__ = ["RootSystem", "WeylWord", "build_root_system", "parse_system"]
