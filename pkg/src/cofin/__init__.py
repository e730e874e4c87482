"""Exact computation with ultimately periodic subsets of N.

Modules: ``upset`` (the set carrier), ``finoracle`` (brute force on finite
universes), ``emonoid`` (enumerating maps), ``omega`` (ideals of E and
density), ``filt`` (filters on N), ``syntax``/``interp``/``cli`` (the
expression language) and ``suites`` (the named verification suites).
"""

from cofin.upset import EMPTY, EVENS, NATURALS, ODDS, UpSet

__all__ = ["EMPTY", "EVENS", "NATURALS", "ODDS", "UpSet"]
__version__ = "0.1.0"
