"""Independent brute-force references for differential testing.

Nothing here shares algorithms with the main modules: enumeration is a
plain breadth-first walk on element values, the Bruhat relation is built
from covering relations and transitive closure, and classes come from
pairwise conjugation by every group element.  Only element arithmetic
(multiplication, inversion, length) is reused.  Performance is explicitly
not a goal; the oracles run on small groups only.
"""

from __future__ import annotations

import functools

from .cartan import weyl_order
from .errors import EnumerationCapExceeded
from .rootsys import RootSystem
from .weyl import WeylElement, generators, identity_element

ORACLE_CAP = 100_000


def _check_cap(rs: RootSystem, cap: int) -> None:
    order = weyl_order(rs.cartan_type)
    if order > cap:
        raise EnumerationCapExceeded(
            f"|W({rs.cartan_type})| = {order} exceeds the oracle cap {cap}",
            order=order, cap=cap)


@functools.lru_cache(maxsize=16)
def _enumerate(rs: RootSystem) -> tuple[WeylElement, ...]:
    gens = generators(rs)
    seen = {identity_element(rs)}
    frontier = list(seen)
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    new.append(y)
        frontier = new
    return tuple(sorted(seen, key=lambda w: (w.length, w.perm)))


def enumerate_group(rs: RootSystem, cap: int = ORACLE_CAP) -> tuple[WeylElement, ...]:
    """Every group element, by Cayley-graph walk; sorted deterministically."""
    _check_cap(rs, cap)
    return _enumerate(rs)


def _reflections(rs: RootSystem, elements) -> list[WeylElement]:
    """All reflections, as {w s w^-1}, deduplicated."""
    out = set()
    for w in elements:
        winv = w.inverse()
        for s in generators(rs):
            out.add(w * s * winv)
    return sorted(out, key=lambda t: (t.length, t.perm))


class BruhatOracle:
    """The full order relation on one group, as bitmask rows.

    ``mask[i]`` has bit j set iff ``element[j] <= element[i]``.
    """

    def __init__(self, elements: tuple[WeylElement, ...],
                 masks: list[int]):
        self.elements = elements
        self.index = {w: i for i, w in enumerate(elements)}
        self.masks = masks

    def leq(self, u: WeylElement, v: WeylElement) -> bool:
        return bool(self.masks[self.index[v]] >> self.index[u] & 1)


def bruhat_oracle(rs: RootSystem, cap: int = ORACLE_CAP) -> BruhatOracle:
    """Covering relations (u < ut for reflections t raising length by one),
    then transitive closure, processed in length order."""
    elements = enumerate_group(rs, cap)
    index = {w: i for i, w in enumerate(elements)}
    reflections = _reflections(rs, elements)
    masks = [0] * len(elements)
    # elements are sorted by length, so covered masks are ready in order
    for i, u in enumerate(elements):
        masks[i] |= 1 << i
    order = sorted(range(len(elements)), key=lambda i: elements[i].length)
    for i in order:
        u = elements[i]
        for t in reflections:
            v = u * t
            if v.length == u.length + 1:
                masks[index[v]] |= masks[i]
    return BruhatOracle(elements, masks)


def classes_oracle(rs: RootSystem,
                   cap: int = ORACLE_CAP) -> tuple[frozenset[WeylElement], ...]:
    """Partition of the group by pairwise conjugation with every element."""
    elements = enumerate_group(rs, cap)
    inverses = [g.inverse() for g in elements]
    assigned = {}
    classes = []
    for x in elements:
        if x in assigned:
            continue
        cls = frozenset(g * x * ginv for g, ginv in zip(elements, inverses))
        classes.append(cls)
        for y in cls:
            assigned[y] = True
    classes.sort(key=lambda c: min((w.length, w.perm) for w in c))
    return tuple(classes)
