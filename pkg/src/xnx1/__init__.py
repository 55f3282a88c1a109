"""Verification toolkit for the arithmetic of X^5 - X - 1.

Subpackages cover exact arithmetic (arith), polynomial factorization
patterns (polyfactor), the finite matrix group and its permutation actions
(groups), character-theoretic identities (asai), per-prime Frobenius
reports (frobenius), q-series checks (modforms) and the command line
interface (cli).
"""

__version__ = "0.1.0"
