"""Cartan data for the irreducible crystallographic types, fixed once.

Everything downstream (root orderings, reduced words, CLI output) is pinned
by the numbering chosen here, which follows the standard Bourbaki plates:

* ``A_n`` (n >= 1): the chain 1 - 2 - ... - n.
* ``B_n`` (n >= 2): the chain 1 - ... - n with ``alpha_n`` short;
  the only asymmetric entry is ``A[n][n-1] = -2`` (1-based).
* ``C_n`` (n >= 2): the chain with ``alpha_n`` long; ``A[n-1][n] = -2``.
* ``D_n`` (n >= 4): the chain 1 - ... - (n-1) with node n attached to
  node n-2.
* ``E_6, E_7, E_8``: the chain 1 - 3 - 4 - 5 - 6 (- 7 - 8) with node 2
  attached to node 4.
* ``F_4``: the chain 1 - 2 - 3 - 4 with ``alpha_1, alpha_2`` long and
  ``alpha_3, alpha_4`` short; ``A[3][2] = -2``.
* ``G_2``: ``alpha_1`` short; ``A = [[2, -3], [-1, 2]]``.

The matrix convention is ``A[i][j] = 2 (alpha_i, alpha_j) / (alpha_i,
alpha_i)``, so the simple reflection acts by ``s_i(alpha_j) = alpha_j -
A[i][j] alpha_i``.  All entries are exact integers; the package never
touches floating point.

Indices are 0-based internally and 1-based in every user-facing string.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .errors import InvalidCartanType

FAMILIES = ("A", "B", "C", "D", "E", "F", "G")

# rank bounds per family: (minimum, maximum or None for unbounded)
_RANK_BOUNDS = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

_TYPE_RE = re.compile(r"^([A-Ga-g])\s*(\d+)$")


@dataclass(frozen=True, order=True)
class CartanType:
    """An irreducible type: family letter plus rank."""

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _RANK_BOUNDS:
            raise InvalidCartanType(
                f"unknown family {self.family!r}; expected one of {FAMILIES}")
        lo, hi = _RANK_BOUNDS[self.family]
        if self.rank < lo:
            raise InvalidCartanType(
                f"type {self.family}{self.rank}: family {self.family} "
                f"requires rank >= {lo}")
        if hi is not None and self.rank > hi:
            raise InvalidCartanType(
                f"type {self.family}{self.rank}: family {self.family} "
                f"requires rank <= {hi}")

    @classmethod
    def parse(cls, text: str) -> "CartanType":
        """Parse a string such as ``"B3"`` or ``"e6"``."""
        m = _TYPE_RE.match(text.strip())
        if m is None:
            raise InvalidCartanType(
                f"cannot parse Cartan type {text!r}; expected letter+rank "
                f"such as 'A3' or 'E6'")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def cartan_type(t: "CartanType | str") -> CartanType:
    """Coerce a string or CartanType to a CartanType."""
    return t if isinstance(t, CartanType) else CartanType.parse(t)


def cartan_matrix(t: "CartanType | str") -> tuple[tuple[int, ...], ...]:
    """The Cartan matrix of the type, 0-based, in the convention above."""
    t = cartan_type(t)
    n = t.rank
    a = [[2 * (i == j) for j in range(n)] for i in range(n)]

    def edge(i, j, aij=-1, aji=-1):
        a[i][j] = aij
        a[j][i] = aji

    if t.family in ("A", "B", "C", "F"):
        for i in range(n - 1):
            edge(i, i + 1)
        if t.family == "B":
            a[n - 1][n - 2] = -2       # last root short
        elif t.family == "C":
            a[n - 2][n - 1] = -2       # last root long
        elif t.family == "F":
            a[2][1] = -2               # roots 3, 4 short (1-based)
    elif t.family == "D":
        for i in range(n - 2):
            edge(i, i + 1)
        edge(n - 3, n - 1)
    elif t.family == "E":
        chain = [0, 2, 3, 4, 5, 6, 7][: n - 1]
        for i, j in zip(chain, chain[1:]):
            edge(i, j)
        edge(1, 3)
    else:  # G2
        a[0][1] = -3                   # alpha_1 short
        a[1][0] = -1
    return tuple(tuple(row) for row in a)


def positive_root_count(t: "CartanType | str") -> int:
    """Number of positive roots, from the classical tables."""
    t = cartan_type(t)
    n = t.rank
    if t.family == "A":
        return n * (n + 1) // 2
    if t.family in ("B", "C"):
        return n * n
    if t.family == "D":
        return n * (n - 1)
    if t.family == "E":
        return {6: 36, 7: 63, 8: 120}[n]
    if t.family == "F":
        return 24
    return 6  # G2


def weyl_order(t: "CartanType | str") -> int:
    """Order of the Weyl group, from the classical tables.

    Used only to refuse over-cap enumerations up front; the orders are
    re-derived by Cayley-graph search in the test suite rather than trusted.
    """
    t = cartan_type(t)
    n = t.rank
    if t.family == "A":
        return math.factorial(n + 1)
    if t.family in ("B", "C"):
        return 2**n * math.factorial(n)
    if t.family == "D":
        return 2 ** (n - 1) * math.factorial(n)
    if t.family == "E":
        return {6: 51840, 7: 2903040, 8: 696729600}[n]
    if t.family == "F":
        return 1152
    return 12  # G2
