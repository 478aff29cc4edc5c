"""Shuffle-compatible permutation statistics: brute-force and closed-form checks."""

from .errors import (IncompatibleAtRange, InvalidBlocks, InvalidPermutation, NotContained,
                     NotDisjoint, OutOfRange, ShuffleAlgError, SizeMismatch, UnknownStatistic,
                     Unsupported)
from .stats import Statistic, evaluate, parse_stat

__version__ = "0.1.0"

__all__ = [
    "IncompatibleAtRange", "InvalidBlocks", "InvalidPermutation", "NotContained",
    "NotDisjoint", "OutOfRange", "ShuffleAlgError", "SizeMismatch", "Statistic",
    "UnknownStatistic", "Unsupported", "evaluate", "parse_stat",
]
