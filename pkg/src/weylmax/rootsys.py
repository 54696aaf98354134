"""Root systems in simple-root coordinates, exact and immutable.

A positive root is an integer coordinate vector over the simple basis.
The positive system is generated from the simple roots by closing under
simple reflections.  Root ordering is deterministic: simple roots first in
Bourbaki index order, then the remaining positive roots sorted
lexicographically; this ordering fixes the signed-permutation encoding of
every group element.
"""

from __future__ import annotations

import functools
import json

from . import _kernel as kernel
from .cartan import CartanType, cartan_matrix, cartan_type
from .errors import InvalidCartanType

# Entries of a signed permutation must fit the kernel encoding; width 2
# allows up to 2^15 positive roots (A255), far beyond desk scale.
_MAX_POSITIVE_ROOTS = 1 << 15


class RootSystem:
    """Positive roots, Cartan matrix and reflection tables of one type.

    Immutable after construction; safe for unrestricted concurrent reads.
    Instances compare equal iff they have the same Cartan type (the
    construction is deterministic, so equal types carry identical data).
    """

    __slots__ = ("cartan_type", "rank", "cartan", "roots", "root_index",
                 "n_positive", "width", "gen_perms", "_id_perm", "_hash")

    def __init__(self, t: CartanType):
        t = cartan_type(t)
        a = cartan_matrix(t)
        n = t.rank
        roots = _positive_closure(a, n)
        if len(roots) > _MAX_POSITIVE_ROOTS:
            raise InvalidCartanType(
                f"type {t} has {len(roots)} positive roots, beyond the "
                f"index encoding bound {_MAX_POSITIVE_ROOTS}")
        self.cartan_type = t
        self.rank = n
        self.cartan = a
        self.roots = roots
        self.root_index = {v: r for r, v in enumerate(roots)}
        self.n_positive = len(roots)
        self.width = 1 if 2 * self.n_positive <= 256 else 2
        self.gen_perms = tuple(
            self._reflection_perm(i) for i in range(n))
        self._id_perm = kernel.identity_perm(2 * self.n_positive, self.width)
        self._hash = hash(t)

    def _reflection_perm(self, i: int) -> bytes:
        npos = self.n_positive
        images = [0] * (2 * npos)
        for r, v in enumerate(self.roots):
            u = simple_reflection_action(self, i, v)
            if u in self.root_index:
                k = self.root_index[u]
            else:
                k = self.root_index[tuple(-c for c in u)] + npos
            images[r] = k
            images[r + npos] = k + npos if k < npos else k - npos
        return kernel.from_entries(images, self.width)

    @property
    def identity_perm(self) -> bytes:
        return self._id_perm

    @property
    def simple_roots(self) -> tuple[tuple[int, ...], ...]:
        return self.roots[: self.rank]

    @property
    def positive_roots(self) -> tuple[tuple[int, ...], ...]:
        return self.roots

    @property
    def reflection_table(self) -> tuple[tuple[int, ...], ...]:
        """Signed root indices of ``s_i(root_r)``.

        Row i, column r holds ``+(k+1)`` if ``s_i(root_r) = root_k`` and
        ``-(k+1)`` if it is ``-root_k`` (1-based so the sign is unambiguous).
        """
        npos = self.n_positive
        table = []
        for perm in self.gen_perms:
            row = kernel.entries(perm, self.width)[:npos]
            table.append(tuple(k + 1 if k < npos else -(k - npos) - 1
                               for k in row))
        return tuple(table)

    def signed_index(self, k: int) -> int:
        """Internal signed index -> the 1-based signed convention."""
        npos = self.n_positive
        return k + 1 if k < npos else -(k - npos) - 1

    def coords(self, k: int) -> tuple[int, ...]:
        """Coordinate vector of internal signed root index ``k``."""
        npos = self.n_positive
        if k < npos:
            return self.roots[k]
        return tuple(-c for c in self.roots[k - npos])

    def to_json_dict(self) -> dict:
        return {
            "type": str(self.cartan_type),
            "rank": self.rank,
            "cartan_matrix": [list(row) for row in self.cartan],
            "positive_roots": [list(v) for v in self.roots],
            "reflection_table": [list(row) for row in self.reflection_table],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True)

    def __eq__(self, other):
        if not isinstance(other, RootSystem):
            return NotImplemented
        return self.cartan_type == other.cartan_type

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"RootSystem({self.cartan_type}, {self.n_positive} positive roots)"


def simple_reflection_action(rs: RootSystem, i: int,
                             v: tuple[int, ...]) -> tuple[int, ...]:
    """Apply ``s_i`` to a coordinate vector: v - <v, alpha_i^vee> alpha_i."""
    pairing = sum(rs.cartan[i][j] * v[j] for j in range(rs.rank))
    if pairing == 0:
        return tuple(v)
    out = list(v)
    out[i] -= pairing
    return tuple(out)


def _positive_closure(cartan, rank):
    """All positive roots: close the simple roots under reflections."""

    def reflect(i, v):
        pairing = sum(cartan[i][j] * v[j] for j in range(rank))
        if pairing == 0:
            return v
        out = list(v)
        out[i] -= pairing
        return tuple(out)

    simple = [tuple(int(i == j) for j in range(rank)) for i in range(rank)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        new = []
        for v in frontier:
            for i in range(rank):
                u = reflect(i, v)
                if u not in seen:
                    seen.add(u)
                    new.append(u)
        frontier = new
    positives = [v for v in seen if all(c >= 0 for c in v)]
    rest = sorted(v for v in positives if v not in set(simple))
    return tuple(simple) + tuple(rest)


@functools.lru_cache(maxsize=None)
def _build(t: CartanType) -> RootSystem:
    return RootSystem(t)


def build_root_system(t: "CartanType | str") -> RootSystem:
    """The root system of type ``t`` (cached; one instance per type)."""
    return _build(cartan_type(t))
