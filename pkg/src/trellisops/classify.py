"""Special elements of a trellis: transitive, associative, atoms, cycles."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .core import CheckOutcome, simple_cycles


@dataclass(frozen=True)
class ElementClass:
    right_transitive: bool
    left_transitive: bool
    middle_transitive: bool
    meet_associative: bool
    join_associative: bool
    atom: bool = False
    coatom: bool = False

    @property
    def transitive(self):
        return self.right_transitive and self.left_transitive and self.middle_transitive

    @property
    def associative(self):
        return self.meet_associative and self.join_associative

    def flags(self):
        return (self.right_transitive, self.left_transitive, self.middle_transitive,
                self.meet_associative, self.join_associative, self.atom, self.coatom)


@dataclass(frozen=True)
class Classification:
    """Per-element flags plus the usual named subsets."""

    elements: tuple

    def _select(self, pred):
        return frozenset(i for i, c in enumerate(self.elements) if pred(c))

    @property
    def tr(self):
        return self._select(lambda c: c.transitive)

    @property
    def r_tr(self):
        return self._select(lambda c: c.right_transitive)

    @property
    def l_tr(self):
        return self._select(lambda c: c.left_transitive)

    @property
    def m_tr(self):
        return self._select(lambda c: c.middle_transitive)

    @property
    def meet_ass(self):
        return self._select(lambda c: c.meet_associative)

    @property
    def join_ass(self):
        return self._select(lambda c: c.join_associative)

    @property
    def ass(self):
        return self._select(lambda c: c.associative)

    @property
    def atoms(self):
        return self._select(lambda c: c.atom)

    @property
    def coatoms(self):
        return self._select(lambda c: c.coatom)

    def __getitem__(self, x):
        return self.elements[x]


def _table_assoc_witness(table, alpha):
    """First triple containing ``alpha`` that does not associate, or None."""
    n = len(table)
    for x, y, z in itertools.product(range(n), repeat=3):
        if alpha not in (x, y, z):
            continue
        lhs, rhs = table[x][table[y][z]], table[table[x][y]][z]
        if lhs != rhs:
            return (x, y, z), (lhs, rhs)
    return None


def meet_assoc_witness(t, alpha):
    return _table_assoc_witness(t.meet, alpha)


def join_assoc_witness(t, alpha):
    return _table_assoc_witness(t.join, alpha)


def _minimal(rel, candidates):
    return {a for a in candidates
            if not any(b != a and rel[b][a] for b in candidates)}


def atoms(t):
    """Minimal elements of X minus the bottom."""
    if not hasattr(t, "bottom"):
        return frozenset()
    rest = [x for x in range(t.n) if x != t.bottom]
    return frozenset(_minimal(t.rel, rest))


def coatoms(t):
    """Maximal elements of X minus the top."""
    if not hasattr(t, "top"):
        return frozenset()
    rest = [x for x in range(t.n) if x != t.top]
    rev = [[t.rel[y][x] for y in range(t.n)] for x in range(t.n)]
    return frozenset(_minimal(rev, rest))


@lru_cache(maxsize=256)
def classify_elements(t):
    """Exhaustive per-element classification (cached per trellis)."""
    n, rel = t.n, t.rel
    at, co = atoms(t), coatoms(t)
    out = []
    for a in range(n):
        right = all(rel[a][y] for x in range(n) if rel[a][x]
                    for y in range(n) if rel[x][y])
        left = all(rel[x][a] for y in range(n) if rel[y][a]
                   for x in range(n) if rel[x][y])
        middle = all(rel[x][y] for x in range(n) if rel[x][a]
                     for y in range(n) if rel[a][y])
        out.append(ElementClass(
            right, left, middle,
            meet_assoc_witness(t, a) is None,
            join_assoc_witness(t, a) is None,
            a in at, a in co))
    return Classification(tuple(out))


def cycles(p, max_len=None):
    """Simple cycles of length 3..max_len in canonical rotation."""
    if hasattr(p, "psoset"):
        p = p.psoset
    return simple_cycles(p, max_len)


def check_cycle_props(t):
    """Cycles avoid the bounds, atoms/coatoms and right/left-transitive elements."""
    cls = classify_elements(t)
    banned = [
        ({t.bottom, t.top}, "cycle contains a bound"),
        (cls.atoms | cls.coatoms, "cycle contains an atom or coatom"),
        (cls.r_tr | cls.l_tr, "cycle contains a right- or left-transitive element"),
    ]
    for cyc in cycles(t):
        for bad, reason in banned:
            hit = [x for x in cyc if x in bad]
            if hit:
                return CheckOutcome.fail(cyc, (hit[0],), reason)
    return CheckOutcome.ok()
