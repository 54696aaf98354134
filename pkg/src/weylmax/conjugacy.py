"""Conjugacy classes, their length strata, and involution classes.

Classes are computed by orbit search conjugating by the rank-many
generators only (sufficient, since the generators generate the group).
Full enumeration is gated by a configurable cap so desk-scale memory
limits are explicit rather than discovered; the default admits E7 and
refuses E8.
"""

from __future__ import annotations

import functools

from . import _kernel as kernel
from .cartan import weyl_order
from .errors import EnumerationCapExceeded
from .rootsys import RootSystem
from .weyl import WeylElement

DEFAULT_ENUMERATION_CAP = 10_000_000

CAP_ENV_VAR = "WEYLMAX_CAP"


def _check_cap(rs: RootSystem, cap: int | None) -> None:
    effective = DEFAULT_ENUMERATION_CAP if cap is None else cap
    order = weyl_order(rs.cartan_type)
    if order > effective:
        raise EnumerationCapExceeded(
            f"|W({rs.cartan_type})| = {order} exceeds the enumeration cap "
            f"{effective}; raise it via the cap argument, the --cap flag, "
            f"or {CAP_ENV_VAR}", order=order, cap=effective)


@functools.lru_cache(maxsize=32)
def _enumerate_perms(rs: RootSystem) -> frozenset[bytes]:
    return frozenset(
        kernel.generate_group(rs.gen_perms, 2 * rs.n_positive, rs.width))


def enumerate_perms(rs: RootSystem, cap: int | None = None) -> frozenset[bytes]:
    """All group elements as raw permutations (kernel encoding)."""
    _check_cap(rs, cap)
    return _enumerate_perms(rs)


@functools.lru_cache(maxsize=32)
def _enumerate_elements(rs: RootSystem) -> tuple[WeylElement, ...]:
    elems = [WeylElement(rs, p) for p in _enumerate_perms(rs)]
    elems.sort(key=lambda w: (w.length, w.perm))
    return tuple(elems)


def enumerate_elements(rs: RootSystem,
                       cap: int | None = None) -> tuple[WeylElement, ...]:
    """All group elements, sorted by (length, canonical encoding)."""
    _check_cap(rs, cap)
    return _enumerate_elements(rs)


class ConjClass:
    """A conjugacy class with its length strata.

    ``min_elements`` and ``max_elements`` are the strata of minimal and
    maximal length, ordered by reduced word; ``representative`` is the
    element whose canonical reduced word is lexicographically smallest in
    the whole class.
    """

    __slots__ = ("system", "elements", "elements_sorted", "min_length",
                 "max_length", "min_elements", "max_elements",
                 "is_involution_class", "representative", "_chain_data")

    def __init__(self, rs: RootSystem, orbit: frozenset[bytes]):
        npos, width = rs.n_positive, rs.width
        lengths = {p: kernel.inversions(p, npos, width) for p in orbit}
        words = {p: kernel.reduced_word(p, rs.rank, npos, rs.gen_perms, width)
                 for p in orbit}
        by_perm = {}
        for p in orbit:
            el = WeylElement(rs, p)
            el._len = lengths[p]
            by_perm[p] = el
        ordered = sorted(orbit, key=lambda p: (lengths[p], words[p]))

        self.system = rs
        self.elements = frozenset(by_perm.values())
        self.elements_sorted = tuple(by_perm[p] for p in ordered)
        self.min_length = lengths[ordered[0]]
        self.max_length = lengths[ordered[-1]]
        self.min_elements = tuple(
            by_perm[p] for p in ordered if lengths[p] == self.min_length)
        self.max_elements = tuple(
            by_perm[p] for p in ordered if lengths[p] == self.max_length)
        rep_perm = min(orbit, key=lambda p: words[p])
        self.representative = by_perm[rep_perm]
        self.representative._word = words[rep_perm]
        for el in self.max_elements:
            el._word = words[el.perm]
        self.is_involution_class = (
            kernel.compose(rep_perm, rep_perm, width) == rs.identity_perm)
        self._chain_data = None

    @property
    def size(self) -> int:
        return len(self.elements)

    def __contains__(self, w: WeylElement) -> bool:
        return w in self.elements

    def __iter__(self):
        return iter(self.elements_sorted)

    def __repr__(self):
        return (f"ConjClass({self.system.cartan_type}, "
                f"rep={self.representative.word_str()!r}, size={self.size})")


def class_of(rs: RootSystem, w: WeylElement) -> ConjClass:
    """The conjugacy class of ``w``, by generator-conjugation orbit search."""
    orbit = kernel.conjugacy_orbit(w.perm, rs.gen_perms, rs.width)
    return ConjClass(rs, frozenset(orbit))


@functools.lru_cache(maxsize=32)
def _all_classes(rs: RootSystem) -> tuple[ConjClass, ...]:
    unassigned = set(_enumerate_perms(rs))
    raw = []
    while unassigned:
        seed = min(unassigned)
        orbit = frozenset(
            kernel.conjugacy_orbit(seed, rs.gen_perms, rs.width))
        raw.append(orbit)
        unassigned -= orbit
    classes = [ConjClass(rs, orbit) for orbit in raw]
    classes.sort(key=lambda c: (c.min_length, c.representative.reduced_word()))
    return tuple(classes)


def all_classes(rs: RootSystem,
                cap: int | None = None) -> tuple[ConjClass, ...]:
    """The partition of W into conjugacy classes, deterministically ordered
    by (minimal length, representative word)."""
    _check_cap(rs, cap)
    return _all_classes(rs)


def involution_classes(rs: RootSystem,
                       cap: int | None = None) -> tuple[ConjClass, ...]:
    """The classes whose elements square to the identity."""
    return tuple(c for c in all_classes(rs, cap) if c.is_involution_class)
