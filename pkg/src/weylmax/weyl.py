"""Exact Weyl group elements and their length/word/matrix views.

An element is canonically the array of signed root indices of the images
of the simple roots; the stored permutation extends this to all signed
roots (the extension is forced, and keeping it makes multiplication a
single table lookup pass).  Elements are immutable values: all operations
are pure functions over a shared immutable root system, safe for
concurrent use.

No floating point anywhere: lengths are inversion counts, and operator
ranks in the geometric representation are computed by fraction-free
(Bareiss) elimination over the integers.
"""

from __future__ import annotations

import functools
from collections.abc import Iterable

from . import _kernel as kernel
from .errors import MismatchedRootSystems
from .rootsys import RootSystem

SimpleSubset = frozenset  # subsets of simple indices, 0-based


class WeylElement:
    """A group element, identified by its action on the simple roots."""

    __slots__ = ("system", "perm", "_hash", "_inv", "_len", "_word", "_rk")

    def __init__(self, system: RootSystem, perm: bytes):
        self.system = system
        self.perm = perm
        self._hash = hash((system.cartan_type, perm))
        self._inv = None
        self._len = None
        self._word = None
        self._rk = None

    # -- canonical form -------------------------------------------------

    @property
    def images(self) -> tuple[int, ...]:
        """Signed root indices of the images of the simple roots."""
        return kernel.entries(self.perm, self.system.width)[: self.system.rank]

    def __eq__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        return (self.system.cartan_type == other.system.cartan_type
                and self.perm == other.perm)

    def __hash__(self):
        return self._hash

    # -- group structure -------------------------------------------------

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        if not isinstance(other, WeylElement):
            return NotImplemented
        if self.system.cartan_type != other.system.cartan_type:
            raise MismatchedRootSystems(
                f"cannot multiply elements of type "
                f"{self.system.cartan_type} and {other.system.cartan_type}")
        return WeylElement(
            self.system,
            kernel.compose(self.perm, other.perm, self.system.width))

    def inverse(self) -> "WeylElement":
        if self._inv is None:
            self._inv = WeylElement(
                self.system, kernel.invert(self.perm, self.system.width))
            self._inv._inv = self
        return self._inv

    def is_identity(self) -> bool:
        return self.perm == self.system.identity_perm

    def is_involution(self) -> bool:
        """Whether the element squares to the identity."""
        square = kernel.compose(self.perm, self.perm, self.system.width)
        return square == self.system.identity_perm

    # -- length and words -------------------------------------------------

    @property
    def length(self) -> int:
        """Number of positive roots sent negative (= reduced word length)."""
        if self._len is None:
            self._len = kernel.inversions(
                self.perm, self.system.n_positive, self.system.width)
        return self._len

    def reduced_word(self) -> tuple[int, ...]:
        """The lexicographically smallest reduced word, 0-based.

        Deterministic: at each step the smallest simple index that can
        start a reduced expression (the smallest left descent) is taken.
        """
        if self._word is None:
            self._word = kernel.reduced_word(
                self.perm, self.system.rank, self.system.n_positive,
                self.system.gen_perms, self.system.width)
        return self._word

    def word_str(self) -> str:
        """Space-separated 1-based word; the identity prints as ``e``."""
        word = self.reduced_word()
        return " ".join(str(i + 1) for i in word) if word else "e"

    def support(self) -> SimpleSubset:
        """Simple indices appearing in any (hence every) reduced word."""
        return frozenset(self.reduced_word())

    def right_descents(self) -> tuple[int, ...]:
        npos = self.system.n_positive
        ims = kernel.entries(self.perm, self.system.width)[: self.system.rank]
        return tuple(i for i, k in enumerate(ims) if k >= npos)

    # -- geometric representation -----------------------------------------

    def act_index(self, k: int) -> int:
        """Image of the internal signed root index ``k``."""
        return kernel.entries(self.perm, self.system.width)[k]

    def act(self, v: Iterable[int]) -> tuple[int, ...]:
        """Apply the element to a coordinate vector."""
        rs = self.system
        ims = kernel.entries(self.perm, rs.width)
        out = [0] * rs.rank
        for j, c in enumerate(v):
            if c:
                for i, x in enumerate(rs.coords(ims[j])):
                    out[i] += c * x
        return tuple(out)

    def matrix(self) -> tuple[tuple[int, ...], ...]:
        """Integer matrix in the simple-root basis (columns = images)."""
        rs = self.system
        ims = kernel.entries(self.perm, rs.width)
        cols = [rs.coords(ims[j]) for j in range(rs.rank)]
        return tuple(tuple(cols[j][i] for j in range(rs.rank))
                     for i in range(rs.rank))

    def __repr__(self):
        return f"WeylElement({self.system.cartan_type}, {self.word_str()!r})"


# -- constructors ----------------------------------------------------------


@functools.lru_cache(maxsize=None)
def identity_element(rs: RootSystem) -> WeylElement:
    return WeylElement(rs, rs.identity_perm)


@functools.lru_cache(maxsize=None)
def generators(rs: RootSystem) -> tuple[WeylElement, ...]:
    """The simple reflections, in index order."""
    return tuple(WeylElement(rs, p) for p in rs.gen_perms)


def from_word(rs: RootSystem, word: Iterable[int]) -> WeylElement:
    """Product of simple reflections, 0-based indices, left to right."""
    perm = rs.identity_perm
    for i in word:
        perm = kernel.compose(perm, rs.gen_perms[i], rs.width)
    return WeylElement(rs, perm)


def multiply(u: WeylElement, v: WeylElement) -> WeylElement:
    """(uv)(alpha) = u(v(alpha)); raises on mismatched root systems."""
    return u * v


# -- longest elements --------------------------------------------------------


@functools.lru_cache(maxsize=None)
def longest_element(rs: RootSystem) -> WeylElement:
    """The unique element of maximal length; an involution."""
    return parabolic_longest(rs, frozenset(range(rs.rank)))


def parabolic_longest(rs: RootSystem, sigma) -> WeylElement:
    """Longest element of the subgroup generated by ``{s_i : i in sigma}``.

    Built greedily: repeatedly append the smallest generator in sigma that
    still increases length.  Accepts any iterable of simple indices.
    """
    return _parabolic_longest(rs, frozenset(sigma))


@functools.lru_cache(maxsize=None)
def _parabolic_longest(rs: RootSystem, sigma: SimpleSubset) -> WeylElement:
    npos = rs.n_positive
    indices = sorted(sigma)
    perm = rs.identity_perm
    while True:
        ims = kernel.entries(perm, rs.width)
        i = next((i for i in indices if ims[i] < npos), None)
        if i is None:
            return WeylElement(rs, perm)
        perm = kernel.compose(perm, rs.gen_perms[i], rs.width)


@functools.lru_cache(maxsize=None)
def minus_w0_on_simples(rs: RootSystem) -> tuple[int, ...]:
    """The diagram automorphism i -> j with ``w0(alpha_i) = -alpha_j``."""
    w0 = longest_element(rs)
    npos = rs.n_positive
    ims = kernel.entries(w0.perm, rs.width)[: rs.rank]
    out = []
    for i, k in enumerate(ims):
        j = k - npos
        if k < npos or j >= rs.rank:
            raise AssertionError(
                f"w0(alpha_{i + 1}) is not minus a simple root")
        out.append(j)
    return tuple(out)


# -- function-style aliases ----------------------------------------------------


def length(w: WeylElement) -> int:
    return w.length


def reduced_word(w: WeylElement) -> tuple[int, ...]:
    return w.reduced_word()


def support(w: WeylElement) -> SimpleSubset:
    return w.support()


def is_involution(w: WeylElement) -> bool:
    return w.is_involution()


# -- exact rank in the geometric representation ------------------------------


def integer_rank(rows: Iterable[Iterable[int]]) -> int:
    """Rank over the rationals of an integer matrix.

    Fraction-free (Bareiss) elimination: every division is exact, so no
    rationals or floats are ever formed.
    """
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    denom = 1
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        for i in range(r + 1, nrows):
            row = m[i]
            f = row[c]
            for j in range(c, ncols):
                row[j] = (p * row[j] - f * m[r][j]) // denom
        denom = p
        r += 1
        if r == nrows:
            break
    return r


def rank_one_minus(w: WeylElement) -> int:
    """rk(1 - w) in the geometric representation, exactly.

    For involutions this is the dimension of the (-1)-eigenspace.
    """
    if w._rk is None:
        n = w.system.rank
        m = w.matrix()
        w._rk = integer_rank(
            [[(i == j) - m[i][j] for j in range(n)] for i in range(n)])
    return w._rk


def fixed_space_dim(w: WeylElement) -> int:
    """dim of the fixed space; rank minus rk(1 - w) by rank-nullity."""
    return w.system.rank - rank_one_minus(w)
