"""Exhaustive enumeration of (pseudo-)t-norms and t-conorms.

The search fixes the neutral row/column and the absorbing bottom row,
assigns only the upper triangle of the remaining cells (commutativity),
draws each cell from the common lower bounds of its arguments and prunes
on (weak) monotonicity and (weak) associativity as soon as the cells a
constraint reads are known.  Conorms are enumerated as norms on the dual.
"""

from __future__ import annotations

import itertools
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import core
from .binop import (DEFAULT_SEMANTICS, Comparison, IncreasingMode, OpClass, OpTable,
                    WeakSemantics, classify_op, pointwise_cmp, weak_assoc_triples,
                    weak_mono_pairs)

DEFAULT_CELL_CAP = 36
# materializing more tables than this is refused; counting is not capped
DEFAULT_MAX_TABLES = 200_000


class SearchCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class EnumerationTask:
    carrier: core.BoundedTrellis
    op_class: OpClass
    semantics: WeakSemantics = DEFAULT_SEMANTICS
    limit: int = None
    count_only: bool = False
    cell_cap: int = DEFAULT_CELL_CAP
    max_tables: int = DEFAULT_MAX_TABLES

    def __post_init__(self):
        if self.limit is not None and self.limit < 1:
            raise ValueError("limit must be >= 1")


@dataclass
class EnumerationResult:
    task: EnumerationTask
    count: int
    tables: list = field(default_factory=list)
    elapsed: float = 0.0
    nodes: int = 0
    prunes: int = 0
    free_cells: int = 0


class _Search:
    """Backtracking over the free cells of a norm table on ``t``."""

    def __init__(self, t, pseudo, sem):
        self.t = t
        n = self.n = t.n
        bot, top = t.bottom, t.top
        rel = t.rel
        mid = [x for x in range(n) if x not in (bot, top)]
        self.cells = [(x, y) for i, x in enumerate(mid) for y in mid[i:]]
        order = {}
        for k, (x, y) in enumerate(self.cells):
            order[x * n + y] = order[y * n + x] = k
        self.order = order

        table = [-1] * (n * n)
        for x in range(n):
            table[top * n + x] = table[x * n + top] = x
            table[bot * n + x] = table[x * n + bot] = bot
        self.table = table
        self.domains = [[v for v in range(n) if rel[v][x] and rel[v][y]] for x, y in self.cells]

        if pseudo:
            pairs = weak_mono_pairs(t, sem.mono)
            triples = set(weak_assoc_triples(t, sem.assoc))
        else:
            pairs = [(x, y) for x in range(n) for y in range(n) if x != y and rel[x][y]]
            triples = None
        midset = set(mid)

        # (x, y) with the top as y is already enforced by the domains
        self.mono_at = [[] for _ in self.cells]
        for x, y in pairs:
            if x not in midset or y not in midset:
                continue
            for z in mid:
                a, b = x * n + z, y * n + z
                k = max(order[a], order[b])
                self.mono_at[k].append((a, b))
        if not pseudo and sem.increasing is IncreasingMode.JOINT:
            # the joint reading cannot lean on the domains: F(x,z) <= z
            # and z <= w do not give F(x,z) <= w
            for x, y, z, w in itertools.product(range(n), repeat=4):
                if rel[x][y] and rel[z][w] and x != y and z != w:
                    a, b = x * n + z, y * n + w
                    k = max(order.get(a, -1), order.get(b, -1))
                    if k >= 0:
                        self.mono_at[k].append((a, b))

        # triples touching a bound associate automatically; (x,y,z) and
        # (z,y,x) are the same equation under commutativity, and x == z
        # holds trivially
        self.assoc_at = [[] for _ in self.cells]
        for x in mid:
            for z in mid:
                if x >= z:
                    continue
                for y in mid:
                    if triples is not None and (x, y, z) not in triples and (z, y, x) not in triples:
                        continue
                    k = max(order[x * n + y], order[y * n + z])
                    self.assoc_at[k].append((x, y, z))
        self.rel_flat = [rel[a][b] for a in range(n) for b in range(n)]
        self.nodes = 0
        self.prunes = 0

    def _assoc_ok(self, x, y, z, pending, trail):
        """Check one triple, or park it on the first unknown cell it needs."""
        n, tab = self.n, self.table
        yz, xy = tab[y * n + z], tab[x * n + y]
        lc, rc = x * n + yz, xy * n + z
        lhs, rhs = tab[lc], tab[rc]
        if lhs < 0:
            k = self.order[lc]
        elif rhs < 0:
            k = self.order[rc]
        else:
            return lhs == rhs
        pending[k].append((x, y, z))
        trail.append(k)
        return True

    def _consistent(self, k, pending, trail):
        n, tab, relf = self.n, self.table, self.rel_flat
        for a, b in self.mono_at[k]:
            if not relf[tab[a] * n + tab[b]]:
                return False
        for x, y, z in self.assoc_at[k]:
            if not self._assoc_ok(x, y, z, pending, trail):
                return False
        for x, y, z in list(pending[k]):
            if not self._assoc_ok(x, y, z, pending, trail):
                return False
        return True

    def run(self, first_value=None, limit=None, count_only=False, rng=None):
        """Depth-first search; returns ``(flat tables, count)``.

        Cells are visited row-major over the upper triangle, so tables come
        out in lexicographic order of their flattened form.  In count-only
        mode no table is kept, and a suffix of cells that no constraint
        reads is counted as the product of its domain sizes.
        """
        n, tab = self.n, self.table
        cells = self.cells
        ncells = len(cells)
        out = []
        count = 0
        pending = [[] for _ in cells]
        # free_from[k]: no static constraint is attached to any cell >= k
        free_from = [False] * (ncells + 1)
        free_from[ncells] = True
        for k in range(ncells - 1, -1, -1):
            free_from[k] = free_from[k + 1] and not self.mono_at[k] and not self.assoc_at[k]
        suffix_size = [1] * (ncells + 1)
        for k in range(ncells - 1, -1, -1):
            suffix_size[k] = suffix_size[k + 1] * len(self.domains[k])

        def full():
            return limit is not None and count >= limit

        def rec(k):
            nonlocal count
            if full():
                return
            if k == ncells:
                count += 1
                if not count_only:
                    out.append(tuple(tab))
                return
            if count_only and limit is None and free_from[k] and \
                    not any(pending[j] for j in range(k, ncells)):
                count += suffix_size[k]
                return
            x, y = cells[k]
            domain = self.domains[k] if k or first_value is None else [first_value]
            if rng is not None:
                domain = rng.sample(domain, len(domain))
            for v in domain:
                self.nodes += 1
                tab[x * n + y] = tab[y * n + x] = v
                trail = []
                if self._consistent(k, pending, trail):
                    rec(k + 1)
                else:
                    self.prunes += 1
                for j in reversed(trail):
                    pending[j].pop()
                if full():
                    break
            tab[x * n + y] = tab[y * n + x] = -1

        if ncells == 0:
            count = 1
            if not count_only:
                out.append(tuple(tab))
        else:
            rec(0)
        return out, count


def _unflatten(flat, n):
    return tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n))


def _worker(args):
    t, pseudo, sem, first_value, limit, count_only = args
    s = _Search(t, pseudo, sem)
    tables, count = s.run(first_value, limit, count_only)
    return tables, count, s.nodes, s.prunes


def enumerate_ops(task, workers=1, verify=True):
    """Run an :class:`EnumerationTask`.

    Tables come back sorted by their flattened cells.  Unless ``verify`` is
    off, every returned table is re-checked with :func:`classify_op`.
    Count-only runs keep no tables, so nothing is re-checked.
    """
    start = time.perf_counter()
    t = task.carrier
    cls = task.op_class
    search_on = t if cls.is_norm else core.dual(t)
    probe = _Search(search_on, cls.is_pseudo, task.semantics)
    if len(probe.cells) > task.cell_cap:
        raise SearchCapExceeded(f"{len(probe.cells)} free cells exceed the cap of {task.cell_cap}")
    if not task.count_only and task.limit is None and task.max_tables is not None:
        _, total = _Search(search_on, cls.is_pseudo, task.semantics).run(count_only=True)
        if total > task.max_tables:
            raise SearchCapExceeded(
                f"{total} tables exceed the cap of {task.max_tables}; use a limit or count only")

    if workers > 1 and probe.cells and len(probe.domains[0]) > 1:
        # partitions follow the first cell's value, so concatenating them
        # in value order keeps the global order
        jobs = [(search_on, cls.is_pseudo, task.semantics, v, task.limit, task.count_only)
                for v in probe.domains[0]]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_worker, jobs))
        flats = [tab for p in parts for tab in p[0]]
        count = sum(p[1] for p in parts)
        nodes = sum(p[2] for p in parts)
        prunes = sum(p[3] for p in parts)
    else:
        flats, count = probe.run(None, task.limit, task.count_only)
        nodes, prunes = probe.nodes, probe.prunes
    if task.limit is not None:
        flats = flats[:task.limit]
        count = min(count, task.limit)

    tables = []
    for flat in sorted(flats):
        op = OpTable(_unflatten(flat, t.n), t)
        if verify:
            report = classify_op(op, task.semantics, [cls])
            if cls not in report.classes:
                raise AssertionError(f"search produced a table outside {cls.value}: "
                                     f"{report.failures(cls)}")
        tables.append(op)
    return EnumerationResult(
        task=task,
        count=count,
        tables=tables,
        elapsed=time.perf_counter() - start,
        nodes=nodes,
        prunes=prunes,
        free_cells=len(probe.cells),
    )


def sample_ops(t, cls, sem=DEFAULT_SEMANTICS, k=100, seed=0):
    """Up to ``k`` distinct random members of a class, for classes too big
    to list.  Each draw is a depth-first descent with shuffled value order,
    so draws are members but not uniformly distributed."""
    rng = random.Random(seed)
    search_on = t if cls.is_norm else core.dual(t)
    found = set()
    for _ in range(k):
        s = _Search(search_on, cls.is_pseudo, sem)
        flats, _ = s.run(limit=1, rng=rng)
        found.update(flats)
    out = []
    for flat in sorted(found):
        op = OpTable(_unflatten(flat, t.n), t)
        if cls not in classify_op(op, sem, [cls]).classes:
            raise AssertionError(f"sampled table outside {cls.value}")
        out.append(op)
    return out


def enumerate_class(t, cls, sem=DEFAULT_SEMANTICS, **kwargs):
    """Shorthand returning just the list of tables."""
    return enumerate_ops(EnumerationTask(t, cls, sem), **kwargs).tables


@dataclass
class Extremes:
    maximal: list
    minimal: list
    greatest: OpTable = None
    smallest: OpTable = None


def extremes(tables):
    """Maximal/minimal tables under the pointwise order, plus the
    greatest/smallest when one exists."""
    tables = list(tables)
    if not tables:
        return Extremes([], [])
    cmp = [[pointwise_cmp(a, b) for b in tables] for a in tables]
    maximal = [a for i, a in enumerate(tables)
               if not any(cmp[i][k] is Comparison.LESS for k in range(len(tables)))]
    minimal = [a for i, a in enumerate(tables)
               if not any(cmp[i][k] is Comparison.GREATER for k in range(len(tables)))]
    greatest = smallest = None
    for i, a in enumerate(tables):
        if all(c in (Comparison.GREATER, Comparison.EQUAL) for c in cmp[i]):
            greatest = a
        if all(c in (Comparison.LESS, Comparison.EQUAL) for c in cmp[i]):
            smallest = a
    return Extremes(maximal, minimal, greatest, smallest)


# -- generate-and-filter baseline -------------------------------------------

def _baseline_checks(t, cls, sem):
    """The class definition as a list of (cells read, predicate) pairs.

    Predicates take a stack of tables and return a boolean mask.  An
    associativity check may read any cell of rows ``x`` and ``z``, so it
    claims both rows in full.
    """
    n = t.n
    rel = np.array(t.rel, dtype=bool)
    if cls.is_pseudo:
        pairs = weak_mono_pairs(t, sem.mono, lower_side=not cls.is_norm)
        triples = list(weak_assoc_triples(t, sem.assoc, conorm=not cls.is_norm))
    else:
        pairs = [(x, y) for x in range(n) for y in range(n) if x != y and t.rel[x][y]]
        triples = list(itertools.product(range(n), repeat=3))
    joint = not cls.is_pseudo and sem.increasing is IncreasingMode.JOINT

    def cell(x, y):
        return (min(x, y), max(x, y))

    checks = []
    for x, y in pairs:
        for z in range(n):
            def mono(tabs, x=x, y=y, z=z):
                return rel[tabs[:, x, z], tabs[:, y, z]] & rel[tabs[:, z, x], tabs[:, z, y]]
            checks.append(({cell(x, z), cell(y, z)}, mono))
    if joint:
        for x, y, z, w in itertools.product(range(n), repeat=4):
            if t.rel[x][y] and t.rel[z][w]:
                def jmono(tabs, x=x, y=y, z=z, w=w):
                    return rel[tabs[:, x, z], tabs[:, y, w]]
                checks.append(({cell(x, z), cell(y, w)}, jmono))
    for x, y, z in triples:
        def assoc(tabs, x=x, y=y, z=z):
            rows = np.arange(len(tabs))
            return tabs[rows, x, tabs[:, y, z]] == tabs[rows, tabs[:, x, y], z]
        reads = {cell(x, w) for w in range(n)} | {cell(w, z) for w in range(n)}
        checks.append((reads, assoc))
    return checks


def brute_force_ops(t, cls, sem=DEFAULT_SEMANTICS):
    """All commutative tables with the right neutral element, filtered by
    the class definition.  Exponential: meant for carriers with n <= 5.

    Candidates are generated one cell at a time and every check is applied
    as soon as all cells it may read are filled.  A check that fails on a
    partial table fails on every completion of it, so this returns exactly
    what filtering the full product would.
    """
    n = t.n
    e = t.top if cls.is_norm else t.bottom
    rest = [x for x in range(n) if x != e]
    cells = [(x, y) for i, x in enumerate(rest) for y in rest[i:]]
    filled = {(min(e, x), max(e, x)) for x in range(n)}
    base = np.zeros((1, n, n), dtype=np.intp)
    for x in range(n):
        base[0, e, x] = base[0, x, e] = x
    pending = _baseline_checks(t, cls, sem)
    tabs = base
    for stage in range(len(cells) + 1):
        ready = [fn for reads, fn in pending if reads <= filled]
        pending = [(reads, fn) for reads, fn in pending if not reads <= filled]
        for fn in ready:
            tabs = tabs[fn(tabs)]
        if stage == len(cells) or not len(tabs):
            break
        x, y = cells[stage]
        tabs = np.repeat(tabs, n, axis=0)
        vals = np.tile(np.arange(n), len(tabs) // n)
        tabs[:, x, y] = tabs[:, y, x] = vals
        filled.add((x, y))
    return sorted((OpTable(tuple(map(tuple, tab.tolist())), t) for tab in tabs), key=OpTable.flat)
