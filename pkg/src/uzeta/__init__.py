"""Exact computational model of the rank-1 quantized hyperalgebra at an odd
root of unity: the small quantum group, its sl2-action, module category,
blocks and centers, and the windowed lattice of cofinite ideals."""

from .cyclotomic import CycloField, CycloNum, get_field, q_int, q_factorial, gauss_binom

__all__ = [
    "CycloField",
    "CycloNum",
    "get_field",
    "q_int",
    "q_factorial",
    "gauss_binom",
]
