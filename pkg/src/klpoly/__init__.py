"""Kazhdan-Lusztig P, R, Q polynomials and the interval polynomials Xi over finite Coxeter groups."""
from .coxeter import CoxeterMatrix, GroupTable, build_group, group_from_descriptor
from .errors import (
    BadGeneratorIndex,
    CapExceeded,
    ChainViolation,
    InvalidMatrix,
    NotComparable,
)
from .klcore import KLCache
from .laurent import HalfLaurent

__version__ = "0.1.0"

__all__ = [
    "CoxeterMatrix",
    "GroupTable",
    "build_group",
    "group_from_descriptor",
    "KLCache",
    "HalfLaurent",
    "BadGeneratorIndex",
    "CapExceeded",
    "ChainViolation",
    "InvalidMatrix",
    "NotComparable",
]
