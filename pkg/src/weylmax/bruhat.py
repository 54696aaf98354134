"""Bruhat order comparison and maximum detection.

``bruhat_leq`` uses the lifting-property recursion on the smallest left
descent of the larger element, memoized on element pairs.  The memo is a
bounded LRU (default 2^20 entries, configurable) keyed by the canonical
element encodings, which embed the Cartan type, so a single cache serves
all root systems; ``functools.lru_cache`` makes concurrent calls return
the same results as sequential ones.
"""

from __future__ import annotations

import functools
from collections.abc import Iterable

from . import _kernel as kernel
from .errors import EmptyElementSet, MismatchedRootSystems
from .weyl import WeylElement, generators

DEFAULT_CACHE_SIZE = 1 << 20


def _smallest_left_descent(v: WeylElement) -> int:
    """Smallest i with s_i v < v; requires v != e."""
    rs = v.system
    npos = rs.n_positive
    inv = kernel.entries(v.inverse().perm, rs.width)
    for i in range(rs.rank):
        if inv[i] >= npos:
            return i
    raise AssertionError("identity has no descent")


def _make_cached_leq(maxsize):
    @functools.lru_cache(maxsize=maxsize)
    def leq(u: WeylElement, v: WeylElement) -> bool:
        if u.length >= v.length:
            return u == v
        # v != e here since length(v) > 0
        s = generators(v.system)[_smallest_left_descent(v)]
        sv = s * v
        su = s * u
        if su.length < u.length:
            return leq(su, sv)
        return leq(u, sv)

    return leq


_leq = _make_cached_leq(DEFAULT_CACHE_SIZE)


def configure_cache(maxsize: int | None) -> None:
    """Replace the comparison memo with a fresh one of the given bound."""
    global _leq
    _leq = _make_cached_leq(maxsize)


def cache_info():
    return _leq.cache_info()


def bruhat_leq(u: WeylElement, v: WeylElement) -> bool:
    """Whether ``u <= v`` in Bruhat order."""
    if u.system.cartan_type != v.system.cartan_type:
        raise MismatchedRootSystems(
            f"cannot compare elements of type {u.system.cartan_type} "
            f"and {v.system.cartan_type}")
    return _leq(u, v)


def bruhat_maximum(elements: Iterable[WeylElement]) -> WeylElement | None:
    """The maximum of a finite set, or None when no maximum exists.

    A maximum must be the unique element of maximal length (comparability
    forces strictly smaller length on everything below), so two maximal
    length elements already rule one out.
    """
    elems = list(elements)
    if not elems:
        raise EmptyElementSet("bruhat_maximum of an empty set")
    top = max(w.length for w in elems)
    candidates = [w for w in elems if w.length == top]
    if len(candidates) > 1:
        return None
    m = candidates[0]
    if all(bruhat_leq(w, m) for w in elems):
        return m
    return None
