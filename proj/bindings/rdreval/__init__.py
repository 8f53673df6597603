"""Paired-corpus transforms and direction-aware relation scoring."""

from ._core import binarize, evaluate, macro_f1, merge, pair

__all__ = ["binarize", "evaluate", "macro_f1", "merge", "pair"]
