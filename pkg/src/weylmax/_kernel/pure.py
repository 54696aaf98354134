"""Pure-Python permutation kernels.

A group element is stored as its full action on signed roots: a ``bytes``
of ``2N`` fixed-width entries, where ``N`` is the number of positive roots
and entry ``k`` is the image of signed root ``k``.  Signed root encoding:
``k < N`` means ``+root_k``, ``k >= N`` means ``-root_(k-N)``.

``width`` is the entry size in bytes: 1 while ``2N <= 256`` (every type up
to E8), 2 for larger A/B/C/D ranks.  The width-1 paths lean on
``bytes.translate``, which runs at C speed; width-2 paths are plain loops.

These functions mirror the compiled kernels in ``_speedups`` exactly and
serve as the fallback backend and the differential reference for it.
"""

from __future__ import annotations

from array import array
from collections.abc import Iterable, Sequence

_PAD = bytes(256)
_DELETE = {}  # n -> bytes(range(n)), for the inversion count trick


def identity_perm(n2: int, width: int) -> bytes:
    if width == 1:
        return bytes(range(n2))
    return array("H", range(n2)).tobytes()


def entries(a: bytes, width: int) -> tuple[int, ...]:
    if width == 1:
        return tuple(a)
    return tuple(memoryview(a).cast("H"))


def from_entries(values: Iterable[int], width: int) -> bytes:
    if width == 1:
        return bytes(values)
    return array("H", values).tobytes()


def compose(a: bytes, b: bytes, width: int) -> bytes:
    """The perm of ``u∘v`` given perms ``a`` of u and ``b`` of v."""
    if width == 1:
        return b.translate(a + _PAD[len(a):])
    av = memoryview(a).cast("H")
    return array("H", [av[x] for x in memoryview(b).cast("H")]).tobytes()


def invert(a: bytes, width: int) -> bytes:
    if width == 1:
        n2 = len(a)
        out = bytearray(n2)
        for k, image in enumerate(a):
            out[image] = k
        return bytes(out)
    av = memoryview(a).cast("H")
    out = array("H", bytes(len(a)))
    for k, image in enumerate(av):
        out[image] = k
    return out.tobytes()


def inversions(a: bytes, n: int, width: int) -> int:
    """Count positive roots sent negative: entries >= n among the first n."""
    if width == 1:
        delete = _DELETE.get(n)
        if delete is None:
            delete = _DELETE[n] = bytes(range(n))
        return len(a[:n].translate(None, delete))
    av = memoryview(a).cast("H")
    return sum(1 for k in range(n) if av[k] >= n)


def reduced_word(a: bytes, rank: int, n: int, gens: Sequence[bytes],
                 width: int) -> tuple[int, ...]:
    """Lexicographically smallest reduced word, via greedy left descents.

    The smallest left descent of w is the smallest right descent of w^-1,
    which is a direct entry scan; peeling it off multiplies the inverse by
    a generator on the right.
    """
    word = []
    b = invert(a, width)
    if width == 1:
        while True:
            i = next((j for j in range(rank) if b[j] >= n), None)
            if i is None:
                return tuple(word)
            word.append(i)
            b = gens[i].translate(b + _PAD[len(b):])
    bv = memoryview(b).cast("H")
    while True:
        i = next((j for j in range(rank) if bv[j] >= n), None)
        if i is None:
            return tuple(word)
        word.append(i)
        b = compose(b, gens[i], width)
        bv = memoryview(b).cast("H")


def generate_group(gens: Sequence[bytes], n2: int, width: int) -> set[bytes]:
    """Closure of the generators under left multiplication (Cayley BFS)."""
    if width == 1:
        tables = [g + _PAD[len(g):] for g in gens]
        seen = {identity_perm(n2, width)}
        frontier = list(seen)
        while frontier:
            new = []
            for x in frontier:
                for t in tables:
                    y = x.translate(t)
                    if y not in seen:
                        seen.add(y)
                        new.append(y)
            frontier = new
        return seen
    seen = {identity_perm(n2, width)}
    frontier = list(seen)
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = compose(g, x, width)
                if y not in seen:
                    seen.add(y)
                    new.append(y)
        frontier = new
    return seen


def conjugacy_orbit(seed: bytes, gens: Sequence[bytes],
                    width: int) -> set[bytes]:
    """Orbit of ``seed`` under conjugation by the generators.

    Generators are involutions, so conjugation by g is x -> g(xg).
    """
    if width == 1:
        tables = [g + _PAD[len(g):] for g in gens]
        seen = {seed}
        frontier = [seed]
        while frontier:
            new = []
            for x in frontier:
                xpad = x + _PAD[len(x):]
                for g, t in zip(gens, tables):
                    y = g.translate(xpad).translate(t)
                    if y not in seen:
                        seen.add(y)
                        new.append(y)
            frontier = new
        return seen
    seen = {seed}
    frontier = [seed]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = compose(g, compose(x, g, width), width)
                if y not in seen:
                    seen.add(y)
                    new.append(y)
        frontier = new
    return seen
