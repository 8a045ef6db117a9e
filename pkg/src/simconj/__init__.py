"""Simultaneous inversion of permutation pairs by conjugation."""

from .perm import (
    Cycle,
    CycleDecomposition,
    Malformed,
    Permutation,
    PermutationError,
    RepeatedPoint,
    commutator,
    compose,
    conjugate,
    cycle_decompose,
    fixed_points,
    format_cycles,
    inverse,
    moved_points,
    parse_cycles,
    random_permutation,
)

__version__ = "0.1.0"

__all__ = [
    "Cycle",
    "CycleDecomposition",
    "Malformed",
    "Permutation",
    "PermutationError",
    "RepeatedPoint",
    "commutator",
    "compose",
    "conjugate",
    "cycle_decompose",
    "fixed_points",
    "format_cycles",
    "inverse",
    "moved_points",
    "parse_cycles",
    "random_permutation",
]
