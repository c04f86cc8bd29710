"""Homomorphisms and isomorphism search between finite trellises."""

from __future__ import annotations

from dataclasses import dataclass

from .classify import classify_elements
from .core import CheckOutcome


@dataclass(frozen=True)
class TrellisMap:
    source: object
    target: object
    mapping: tuple

    def __post_init__(self):
        mapping = tuple(int(v) for v in self.mapping)
        if len(mapping) != self.source.n:
            raise ValueError("map must be total on the source")
        if any(not 0 <= v < self.target.n for v in mapping):
            raise ValueError("map value out of range")
        object.__setattr__(self, "mapping", mapping)

    def __call__(self, x):
        return self.mapping[x]

    @property
    def bijective(self):
        return self.source.n == self.target.n and len(set(self.mapping)) == self.source.n

    def inverse(self):
        if not self.bijective:
            raise ValueError("map is not bijective")
        inv = [0] * self.source.n
        for x, y in enumerate(self.mapping):
            inv[y] = x
        return TrellisMap(self.target, self.source, tuple(inv))

    def describe(self):
        return {self.source.label(x): self.target.label(y) for x, y in enumerate(self.mapping)}


def identity(t):
    return TrellisMap(t, t, tuple(range(t.n)))


def check_homomorphism(m):
    """Meet and join preserved on all pairs."""
    s, t, phi = m.source, m.target, m.mapping
    for x in range(s.n):
        for y in range(s.n):
            lhs, rhs = phi[s.meet[x][y]], t.meet[phi[x]][phi[y]]
            if lhs != rhs:
                return CheckOutcome.fail((x, y), (lhs, rhs), "meet not preserved")
            lhs, rhs = phi[s.join[x][y]], t.join[phi[x]][phi[y]]
            if lhs != rhs:
                return CheckOutcome.fail((x, y), (lhs, rhs), "join not preserved")
    return CheckOutcome.ok()


def is_isomorphism(m):
    return m.bijective and check_homomorphism(m).holds


def _signature(t):
    cls = classify_elements(t)
    rel = t.rel
    out = []
    for x in range(t.n):
        indeg = sum(rel[y][x] for y in range(t.n))
        outdeg = sum(rel[x][y] for y in range(t.n))
        out.append((indeg, outdeg, cls[x].flags()))
    return out


def find_isomorphisms(x1, x2, limit=None):
    """All isomorphisms ``x1 -> x2`` by backtracking.

    Candidates are pruned by in/out degree and element class; each complete
    map is re-verified with :func:`check_homomorphism`.
    """
    if x1.n != x2.n or sum(map(sum, x1.rel)) != sum(map(sum, x2.rel)):
        return []
    s1, s2 = _signature(x1), _signature(x2)
    if sorted(s1) != sorted(s2):
        return []
    n = x1.n
    cands = [[y for y in range(n) if s2[y] == s1[x]] for x in range(n)]
    order = sorted(range(n), key=lambda x: len(cands[x]))
    phi = [None] * n
    used = [False] * n
    found = []

    def consistent(x, y):
        # the relation must be preserved both ways with every mapped element
        for u in range(n):
            v = phi[u]
            if v is None:
                continue
            if x1.rel[x][u] != x2.rel[y][v] or x1.rel[u][x] != x2.rel[v][y]:
                return False
        return True

    def extend(k):
        if limit is not None and len(found) >= limit:
            return
        if k == n:
            m = TrellisMap(x1, x2, tuple(phi))
            if check_homomorphism(m).holds:
                found.append(m)
            return
        x = order[k]
        for y in cands[x]:
            if not used[y] and consistent(x, y):
                phi[x], used[y] = y, True
                extend(k + 1)
                phi[x], used[y] = None, False

    extend(0)
    return sorted(found, key=lambda m: m.mapping)


def relabel(t, perm, labels=None):
    """Isomorphic copy of ``t`` where old element ``x`` becomes ``perm[x]``.

    Returns the copy and the isomorphism ``t -> copy``.
    """
    from . import core

    n = t.n
    inv = [0] * n
    for x, y in enumerate(perm):
        inv[y] = x
    rel = tuple(tuple(t.rel[inv[a]][inv[b]] for b in range(n)) for a in range(n))
    if labels is None:
        labels = tuple(t.labels[inv[a]] for a in range(n))
    p = core.Psoset(rel, labels)
    copy = core.to_bounded(p) if hasattr(t, "bottom") else core.to_trellis(p)
    return copy, TrellisMap(t, copy, tuple(perm))
