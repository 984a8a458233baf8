"""Dual k-Schur combinatorics engine."""

from ._kschur import *  # noqa: F401,F403
