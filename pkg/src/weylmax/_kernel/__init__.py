"""Kernel backend selection.

The compiled extension (``_speedups``, Cython) implements the width-1
byte-permutation kernels; the pure-Python module implements every width.
The compiled backend is used when it imported successfully and the entry
width is 1, unless ``WEYLMAX_KERNEL=pure`` forces the fallback.

Both backends are kept importable so tests and the benchmark can run them
side by side; see ``backends()``.
"""

from __future__ import annotations

import os

from . import pure

try:
    from . import _speedups as _c
except ImportError:
    _c = None

if os.environ.get("WEYLMAX_KERNEL", "").lower() in ("pure", "python"):
    _active_c = None
else:
    _active_c = _c

ACTIVE_BACKEND = "compiled" if _active_c is not None else "pure"

identity_perm = pure.identity_perm
entries = pure.entries
from_entries = pure.from_entries


def backends():
    """Name -> module for every importable backend (pure always present)."""
    out = {"pure": pure}
    if _c is not None:
        out["compiled"] = _c
    return out


if _active_c is None:
    compose = pure.compose
    invert = pure.invert
    inversions = pure.inversions
    reduced_word = pure.reduced_word
    generate_group = pure.generate_group
    conjugacy_orbit = pure.conjugacy_orbit
else:
    def compose(a, b, width):
        if width == 1:
            return _active_c.compose(a, b)
        return pure.compose(a, b, width)

    def invert(a, width):
        if width == 1:
            return _active_c.invert(a)
        return pure.invert(a, width)

    def inversions(a, n, width):
        if width == 1:
            return _active_c.inversions(a, n)
        return pure.inversions(a, n, width)

    def reduced_word(a, rank, n, gens, width):
        if width == 1:
            return _active_c.reduced_word(a, rank, n, list(gens))
        return pure.reduced_word(a, rank, n, gens, width)

    def generate_group(gens, n2, width):
        if width == 1:
            return _active_c.generate_group(list(gens), n2)
        return pure.generate_group(gens, n2, width)

    def conjugacy_orbit(seed, gens, width):
        if width == 1:
            return _active_c.conjugacy_orbit(seed, list(gens))
        return pure.conjugacy_orbit(seed, gens, width)
