"""Finite pseudo-ordered sets (psosets) and trellises.

A pseudo-order is reflexive and antisymmetric but not necessarily
transitive.  Everything here works on dense boolean matrices indexed by
element id ``0..n-1``; labels are only for display and file I/O.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence


class TrellisError(ValueError):
    """Base class for structural errors."""


class BadIndex(TrellisError):
    pass


class AntisymmetryViolation(TrellisError):
    def __init__(self, x, y):
        super().__init__(f"both {x} <= {y} and {y} <= {x}")
        self.pair = (x, y)


class ClosureConflict(TrellisError):
    def __init__(self, x, z):
        super().__init__(
            f"closure of the diagram forces both {x} <= {z} and {z} <= {x}; "
            "use the explicit relation form")
        self.pair = (x, z)


class NotATrellis(TrellisError):
    def __init__(self, failures):
        shown = ", ".join(f"{kind}({x},{y})" for kind, x, y in failures[:8])
        super().__init__(f"pairs without meet/join: {shown}")
        self.failures = list(failures)


class NotBounded(TrellisError):
    pass


class InconsistentTable(TrellisError):
    pass


@dataclass(frozen=True)
class CheckOutcome:
    """Verdict of an exhaustive check.

    ``witness`` holds the first violating tuple of element ids (in index
    order) and ``values`` the offending pair of results, if any.
    """

    holds: bool
    witness: Optional[tuple] = None
    values: Optional[tuple] = None
    reason: str = ""
    violations: tuple = ()

    def __bool__(self):
        return self.holds

    @classmethod
    def ok(cls):
        return cls(True)

    @classmethod
    def fail(cls, witness, values=None, reason="", violations=()):
        return cls(False, tuple(witness), None if values is None else tuple(values), reason,
                   tuple(violations))


def _default_labels(n):
    return tuple(str(i) for i in range(n))


def _check_labels(labels, n):
    labels = tuple(str(lab) for lab in labels)
    if len(labels) != n:
        raise TrellisError(f"expected {n} labels, got {len(labels)}")
    if len(set(labels)) != n:
        raise TrellisError("labels must be unique")
    return labels


@dataclass(frozen=True)
class Psoset:
    """Finite set with a reflexive, antisymmetric relation ``rel``."""

    rel: tuple
    labels: tuple = field(default=None)

    def __post_init__(self):
        n = len(self.rel)
        rel = tuple(tuple(bool(v) for v in row) for row in self.rel)
        if any(len(row) != n for row in rel):
            raise TrellisError("relation matrix must be square")
        for x in range(n):
            if not rel[x][x]:
                raise TrellisError(f"relation not reflexive at {x}")
            for y in range(x + 1, n):
                if rel[x][y] and rel[y][x]:
                    raise AntisymmetryViolation(x, y)
        labels = _default_labels(n) if self.labels is None else _check_labels(self.labels, n)
        object.__setattr__(self, "rel", rel)
        object.__setattr__(self, "labels", labels)

    @property
    def n(self):
        return len(self.rel)

    def leq(self, x, y):
        return self.rel[x][y]

    def index(self, label):
        try:
            return self.labels.index(str(label))
        except ValueError:
            raise BadIndex(f"unknown element {label!r}") from None

    def label(self, x):
        return self.labels[x]

    def pairs(self):
        """Non-reflexive related pairs in index order."""
        return [(x, y) for x in range(self.n) for y in range(self.n)
                if x != y and self.rel[x][y]]

    def reversed(self):
        n = self.n
        return Psoset(tuple(tuple(self.rel[y][x] for y in range(n)) for x in range(n)),
                      self.labels)

    def restrict(self, elements):
        """Sub-psoset on ``elements`` (kept in the given order)."""
        elements = list(elements)
        rel = tuple(tuple(self.rel[x][y] for y in elements) for x in elements)
        return Psoset(rel, tuple(self.labels[x] for x in elements))


def validate_psoset(n, pairs, labels=None):
    """Build a psoset from non-reflexive pairs; reflexive pairs are implied."""
    if n < 1:
        raise BadIndex("a psoset needs at least one element")
    rel = [[x == y for y in range(n)] for x in range(n)]
    for x, y in pairs:
        if not (0 <= x < n and 0 <= y < n):
            raise BadIndex(f"pair ({x}, {y}) out of range for n={n}")
        rel[x][y] = True
    return Psoset(tuple(map(tuple, rel)), labels)


def close_hasse(n, edges, dashed=(), labels=None):
    """Least fixpoint closure of a Hasse-type diagram.

    ``edges`` are the drawn arcs (covers and cycle arcs, lower end first).
    A pair ``(x, z)`` is added whenever ``(x, y)`` and ``(y, z)`` are present,
    unless it is forbidden: dashed pairs (either orientation) and reverses
    of drawn edges are never added.
    """
    for x, y in itertools.chain(edges, dashed):
        if not (0 <= x < n and 0 <= y < n):
            raise BadIndex(f"pair ({x}, {y}) out of range for n={n}")
    rel = [[x == y for y in range(n)] for x in range(n)]
    forbidden = set()
    for x, y in dashed:
        forbidden.add((x, y))
        forbidden.add((y, x))
    for x, y in edges:
        if x != y:
            forbidden.add((y, x))
    for x, y in edges:
        if (x, y) in forbidden:
            raise AntisymmetryViolation(x, y)
        rel[x][y] = True

    changed = True
    while changed:
        changed = False
        for x in range(n):
            for y in range(n):
                if x == y or not rel[x][y]:
                    continue
                for z in range(n):
                    if rel[y][z] and not rel[x][z] and (x, z) not in forbidden:
                        rel[x][z] = True
                        changed = True
    for x in range(n):
        for z in range(x + 1, n):
            if rel[x][z] and rel[z][x]:
                raise ClosureConflict(x, z)
    return Psoset(tuple(map(tuple, rel)), labels)


def preorder_reach(p, x, y):
    """True iff ``y`` is reachable from ``x`` along a chain of related pairs."""
    seen = {x}
    stack = [x]
    while stack:
        u = stack.pop()
        if u == y:
            return True
        for v in range(p.n):
            if p.rel[u][v] and v not in seen:
                seen.add(v)
                stack.append(v)
    return False


def reach_matrix(p):
    n = p.n
    reach = [list(row) for row in p.rel]
    for k in range(n):
        for i in range(n):
            if reach[i][k]:
                for j in range(n):
                    if reach[k][j]:
                        reach[i][j] = True
    return reach


def is_pseudo_chain(p):
    reach = reach_matrix(p)
    for x in range(p.n):
        for y in range(x + 1, p.n):
            if not (reach[x][y] or reach[y][x]):
                return CheckOutcome.fail((x, y), reason="neither element reaches the other")
    return CheckOutcome.ok()


def set_meet(p, elements):
    """Infimum of a set of elements, or ``None``."""
    elements = list(elements)
    lower = [z for z in range(p.n) if all(p.rel[z][a] for a in elements)]
    for g in lower:
        if all(p.rel[l][g] for l in lower):
            return g
    return None


def set_join(p, elements):
    elements = list(elements)
    upper = [z for z in range(p.n) if all(p.rel[a][z] for a in elements)]
    for g in upper:
        if all(p.rel[g][u] for u in upper):
            return g
    return None


def meet(p, x, y):
    """Greatest lower bound of ``x`` and ``y`` by bound-set scan, or ``None``."""
    return set_meet(p, (x, y))


def join(p, x, y):
    return set_join(p, (x, y))


@dataclass(frozen=True)
class Trellis:
    """A psoset together with its total meet and join tables."""

    psoset: Psoset
    meet: tuple
    join: tuple

    @property
    def n(self):
        return self.psoset.n

    @property
    def rel(self):
        return self.psoset.rel

    @property
    def labels(self):
        return self.psoset.labels

    def leq(self, x, y):
        return self.psoset.rel[x][y]

    def index(self, label):
        return self.psoset.index(label)

    def label(self, x):
        return self.psoset.labels[x]

    def elements(self):
        return range(self.n)


@dataclass(frozen=True)
class BoundedTrellis(Trellis):
    bottom: int = 0
    top: int = 0


def meet_join_tables(p):
    """Both tables with ``None`` for missing cells, plus the failure list."""
    n = p.n
    mt = [[None] * n for _ in range(n)]
    jt = [[None] * n for _ in range(n)]
    failures = []
    for x in range(n):
        for y in range(x, n):
            m = meet(p, x, y)
            j = join(p, x, y)
            mt[x][y] = mt[y][x] = m
            jt[x][y] = jt[y][x] = j
            if m is None:
                failures.append(("meet", x, y))
            if j is None:
                failures.append(("join", x, y))
    return mt, jt, failures


def to_trellis(p):
    mt, jt, failures = meet_join_tables(p)
    if failures:
        raise NotATrellis(failures)
    return Trellis(p, tuple(map(tuple, mt)), tuple(map(tuple, jt)))


def find_bounds(p):
    bottom = [b for b in range(p.n) if all(p.rel[b][x] for x in range(p.n))]
    top = [t for t in range(p.n) if all(p.rel[x][t] for x in range(p.n))]
    return (bottom[0] if bottom else None), (top[0] if top else None)


def to_bounded(t, bottom=None, top=None):
    """Attach bounds to a trellis (or psoset), checking them."""
    if isinstance(t, Psoset):
        t = to_trellis(t)
    b, u = find_bounds(t.psoset)
    if b is None or u is None:
        raise NotBounded("no least and/or greatest element")
    if bottom is not None and bottom != b:
        raise NotBounded(f"declared bottom {t.label(bottom)} is not least")
    if top is not None and top != u:
        raise NotBounded(f"declared top {t.label(top)} is not greatest")
    return BoundedTrellis(t.psoset, t.meet, t.join, b, u)


def verify_trellis_axioms(t):
    """Commutativity, absorption, part-preservation and order consistency."""
    n, m, j, rel = t.n, t.meet, t.join, t.rel
    for a in range(n):
        for b in range(n):
            if m[a][b] != m[b][a]:
                return CheckOutcome.fail((a, b), (m[a][b], m[b][a]), "meet commutativity")
            if j[a][b] != j[b][a]:
                return CheckOutcome.fail((a, b), (j[a][b], j[b][a]), "join commutativity")
            if j[a][m[b][a]] != a:
                return CheckOutcome.fail((a, b), (j[a][m[b][a]], a), "absorption (join)")
            if m[a][j[b][a]] != a:
                return CheckOutcome.fail((a, b), (m[a][j[b][a]], a), "absorption (meet)")
            # x <= y  <=>  x meet y = x  <=>  x join y = y
            if rel[a][b] != (m[a][b] == a) or rel[a][b] != (j[a][b] == b):
                return CheckOutcome.fail((a, b), (m[a][b], j[a][b]), "order consistency")
    for a, b, c in itertools.product(range(n), repeat=3):
        lhs = j[a][j[m[a][b]][m[a][c]]]
        if lhs != a:
            return CheckOutcome.fail((a, b, c), (lhs, a), "part-preservation (join)")
        rhs = m[a][m[j[a][b]][j[a][c]]]
        if rhs != a:
            return CheckOutcome.fail((a, b, c), (rhs, a), "part-preservation (meet)")
    return CheckOutcome.ok()


def order_from_tables(meet_table, labels=None):
    """Recover the pseudo-order from a meet table: ``a <= b`` iff ``a ^ b = a``."""
    n = len(meet_table)
    rel = [[meet_table[a][b] == a for b in range(n)] for a in range(n)]
    try:
        return Psoset(tuple(map(tuple, rel)), labels)
    except TrellisError as exc:
        raise InconsistentTable(str(exc)) from exc


def is_transitive(p):
    n, rel = p.n, p.rel
    for x, y, z in itertools.product(range(n), repeat=3):
        if rel[x][y] and rel[y][z] and not rel[x][z]:
            return CheckOutcome.fail((x, y, z), reason="x <= y <= z but not x <= z")
    return CheckOutcome.ok()


def is_associative_table(table):
    n = len(table)
    for x, y, z in itertools.product(range(n), repeat=3):
        lhs, rhs = table[x][table[y][z]], table[table[x][y]][z]
        if lhs != rhs:
            return CheckOutcome.fail((x, y, z), (lhs, rhs), "associativity")
    return CheckOutcome.ok()


def is_lattice(t):
    return is_transitive(t.psoset).holds


def is_modular(t):
    n, m, j, rel = t.n, t.meet, t.join, t.rel
    for x in range(n):
        for z in range(n):
            if not rel[x][z]:
                continue
            for y in range(n):
                lhs, rhs = j[x][m[y][z]], m[j[x][y]][z]
                if lhs != rhs:
                    return CheckOutcome.fail((x, y, z), (lhs, rhs), "modularity")
    return CheckOutcome.ok()


def dual(t):
    """Reverse the order, swap meet/join and the bounds."""
    p = t.psoset.reversed()
    if isinstance(t, BoundedTrellis):
        return BoundedTrellis(p, t.join, t.meet, t.top, t.bottom)
    return Trellis(p, t.join, t.meet)


def simple_cycles(p, max_len=None):
    """All simple cycles of length >= 3, smallest index first, sorted."""
    n = p.n
    max_len = n if max_len is None else max_len
    out = []

    def extend(path, on_path):
        start, last = path[0], path[-1]
        if len(path) >= 3 and p.rel[last][start]:
            out.append(tuple(path))
        if len(path) == max_len:
            return
        for v in range(start + 1, n):
            if v not in on_path and p.rel[last][v]:
                on_path.add(v)
                path.append(v)
                extend(path, on_path)
                path.pop()
                on_path.discard(v)

    for s in range(n):
        extend([s], {s})
    return sorted(out)


def is_complete(t):
    """Every non-trivial cycle has an infimum and a supremum."""
    for cyc in simple_cycles(t.psoset):
        if set_meet(t.psoset, cyc) is None:
            return CheckOutcome.fail(cyc, reason="cycle without infimum")
        if set_join(t.psoset, cyc) is None:
            return CheckOutcome.fail(cyc, reason="cycle without supremum")
    return CheckOutcome.ok()


def is_complete_bruteforce(t):
    """Every non-empty subset has an infimum and a supremum (exponential)."""
    p = t.psoset
    for r in range(1, p.n + 1):
        for subset in itertools.combinations(range(p.n), r):
            if set_meet(p, subset) is None or set_join(p, subset) is None:
                return CheckOutcome.fail(subset, reason="subset without bound")
    return CheckOutcome.ok()


@dataclass(frozen=True)
class SubsetReport:
    subtrellis: bool
    sublattice: bool


def subset_check(t, elements):
    a = sorted(set(elements))
    closed = all(t.meet[x][y] in a and t.join[x][y] in a for x in a for y in a)
    if not closed:
        return SubsetReport(False, False)
    transitive = all(t.rel[x][z] for x in a for y in a for z in a
                     if t.rel[x][y] and t.rel[y][z])
    return SubsetReport(True, transitive)


def interval(t, lo, hi):
    """Elements ``x`` with ``lo <= x <= hi``, in index order."""
    return [x for x in range(t.n) if t.rel[lo][x] and t.rel[x][hi]]


def sub_bounded(t, elements):
    """Materialize a subset as a standalone bounded trellis.

    Returns the trellis and the list mapping local ids to ids of ``t``.
    The meet/join tables are those of the restricted order, which must agree
    with ``t`` on the subset.
    """
    elements = sorted(set(elements))
    local = to_bounded(to_trellis(t.psoset.restrict(elements)))
    pos = {x: i for i, x in enumerate(elements)}
    for i, x in enumerate(elements):
        for k, y in enumerate(elements):
            if pos.get(t.meet[x][y]) != local.meet[i][k] or pos.get(t.join[x][y]) != local.join[i][k]:
                raise TrellisError(f"subset is not a sub-trellis at ({t.label(x)}, {t.label(y)})")
    return local, elements


def from_labels(labels, pairs, bottom=None, top=None, hasse=False, dashed=()):
    """Convenience constructor used by fixtures and tests."""
    labels = [str(lab) for lab in labels]
    idx = {lab: i for i, lab in enumerate(labels)}
    ip = [(idx[str(a)], idx[str(b)]) for a, b in pairs]
    if hasse:
        p = close_hasse(len(labels), ip, [(idx[str(a)], idx[str(b)]) for a, b in dashed], labels)
    else:
        p = validate_psoset(len(labels), ip, labels)
    b = None if bottom is None else idx[str(bottom)]
    u = None if top is None else idx[str(top)]
    return to_bounded(p, b, u)


def chain(labels: Sequence[str]) -> BoundedTrellis:
    labels = list(labels)
    pairs = [(labels[i], labels[k]) for i in range(len(labels)) for k in range(i + 1, len(labels))]
    return from_labels(labels, pairs)


def elements_by_label(t, labels: Iterable[str]):
    return [t.index(lab) for lab in labels]
