"""Binary operations on a finite trellis and their properties.

Operations are stored as ``n x n`` tables of element ids.  Every check is
an exhaustive scan that stops at its first violation.  Full checks walk
the cells in index order.  Weak checks visit the pairs or triples that
every reading constrains before the ones only some readings constrain,
so the reported witness is one that no reading excuses when such a
witness exists.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field

from . import core
from .classify import classify_elements
from .core import CheckOutcome


class MonoMode(enum.Enum):
    """Which related pairs ``x <= y`` weak monotonicity constrains.

    ``UPPER``: the element on the neutral side (``y`` for norms) must be
    transitive.  ``ANY_MEMBER``: at least one of ``x``, ``y`` is transitive.
    """

    UPPER = "upper"
    ANY_MEMBER = "any"


class AssocMode(enum.Enum):
    """Which triples weak associativity constrains.

    ``ANY_MEMBER``: some member is meet- or join-associative.
    ``ALL_MEMBERS``: all three are meet-associative, or all three are
    join-associative.
    ``OWN_SIDE``: some member is meet-associative when checking a norm,
    join-associative when checking a conorm.
    """

    ANY_MEMBER = "any"
    ALL_MEMBERS = "all"
    OWN_SIDE = "side"


class IncreasingMode(enum.Enum):
    """How "increasing" is read for t-norms and t-conorms.

    ``SEPARATE``: ``x <= y`` implies ``F(x,z) <= F(y,z)`` for every ``z``.
    ``JOINT``: ``x <= y`` and ``z <= w`` imply ``F(x,z) <= F(y,w)``.  The
    two agree on lattices; on a trellis the joint reading is stronger,
    because the order cannot chain the two one-argument steps.
    """

    SEPARATE = "separate"
    JOINT = "joint"


@dataclass(frozen=True)
class WeakSemantics:
    """Reading of the quantifiers that the definitions leave open."""

    mono: MonoMode = MonoMode.UPPER
    assoc: AssocMode = AssocMode.ANY_MEMBER
    increasing: IncreasingMode = IncreasingMode.SEPARATE

    def describe(self):
        return f"mono={self.mono.value}, assoc={self.assoc.value}, increasing={self.increasing.value}"


DEFAULT_SEMANTICS = WeakSemantics()
ALL_SEMANTICS = tuple(WeakSemantics(m, a) for m in MonoMode for a in AssocMode)


class OpClass(enum.Enum):
    T_NORM = "tnorm"
    T_CONORM = "tconorm"
    PSEUDO_T_NORM = "pseudo-tnorm"
    PSEUDO_T_CONORM = "pseudo-tconorm"

    @property
    def is_norm(self):
        return self in (OpClass.T_NORM, OpClass.PSEUDO_T_NORM)

    @property
    def is_pseudo(self):
        return self in (OpClass.PSEUDO_T_NORM, OpClass.PSEUDO_T_CONORM)


class Comparison(enum.Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class OpTable:
    """A total binary operation on ``carrier``.

    Equality and hashing look at the table only, so tables from different
    carriers with the same cells compare equal.
    """

    table: tuple
    carrier: core.Trellis = field(compare=False, repr=False)

    def __post_init__(self):
        table = tuple(tuple(int(v) for v in row) for row in self.table)
        n = self.carrier.n
        if len(table) != n or any(len(row) != n for row in table):
            raise ValueError(f"table must be {n}x{n}")
        if any(not 0 <= v < n for row in table for v in row):
            raise ValueError("table cell out of range")
        object.__setattr__(self, "table", table)

    @property
    def n(self):
        return len(self.table)

    def __call__(self, x, y):
        return self.table[x][y]

    def on(self, carrier):
        """Same cells, different carrier (e.g. the dual)."""
        return OpTable(self.table, carrier)

    def flat(self):
        return tuple(v for row in self.table for v in row)

    def format(self, name="F"):
        labels = self.carrier.labels
        width = max(len(lab) for lab in labels + (name,))
        lines = [" | ".join([name.ljust(width)] + [lab.ljust(width) for lab in labels])]
        for x, row in enumerate(self.table):
            lines.append(" | ".join([labels[x].ljust(width)] +
                                    [labels[v].ljust(width) for v in row]))
        return "\n".join(lines)


def meet_op(t):
    return OpTable(t.meet, t)


def join_op(t):
    return OpTable(t.join, t)


def constant_op(t, value):
    return OpTable(tuple((value,) * t.n for _ in range(t.n)), t)


def is_commutative(f):
    n, tab = f.n, f.table
    for x in range(n):
        for y in range(x + 1, n):
            if tab[x][y] != tab[y][x]:
                return CheckOutcome.fail((x, y), (tab[x][y], tab[y][x]), "commutativity")
    return CheckOutcome.ok()


def _assoc_scan(f, triples, reason="associativity", exhaustive=False):
    tab = f.table
    found = []
    for x, y, z in triples:
        lhs, rhs = tab[x][tab[y][z]], tab[tab[x][y]][z]
        if lhs != rhs:
            found.append(((x, y, z), (lhs, rhs)))
            if not exhaustive:
                break
    if not found:
        return CheckOutcome.ok()
    return CheckOutcome.fail(*found[0], reason, found if exhaustive else ())


def is_associative(f, exhaustive=False):
    return _assoc_scan(f, itertools.product(range(f.n), repeat=3), exhaustive=exhaustive)


def is_idempotent(f):
    for x in range(f.n):
        if f.table[x][x] != x:
            return CheckOutcome.fail((x,), (f.table[x][x], x), "idempotency")
    return CheckOutcome.ok()


def _mono_scan(f, pairs, reason, exhaustive=False):
    """``F(x,z) <= F(y,z)`` and ``F(z,x) <= F(z,y)`` for each pair and all z."""
    tab, rel = f.table, f.carrier.rel
    found = []
    for x, y in pairs:
        for z in range(f.n):
            if not rel[tab[x][z]][tab[y][z]]:
                found.append(((x, y, z), (tab[x][z], tab[y][z]), reason))
            elif not rel[tab[z][x]][tab[z][y]]:
                found.append(((x, y, z), (tab[z][x], tab[z][y]), reason + " (right argument)"))
            else:
                continue
            if not exhaustive:
                break
        if found and not exhaustive:
            break
    if not found:
        return CheckOutcome.ok()
    w, v, why = found[0]
    return CheckOutcome.fail(w, v, why, [(a, b) for a, b, _ in found] if exhaustive else ())


def is_increasing(f, exhaustive=False, mode=IncreasingMode.SEPARATE):
    rel = f.carrier.rel
    if IncreasingMode(mode) is IncreasingMode.JOINT:
        return is_jointly_increasing(f, exhaustive)
    pairs = [(x, y) for x in range(f.n) for y in range(f.n) if x != y and rel[x][y]]
    return _mono_scan(f, pairs, "monotonicity", exhaustive)


def is_jointly_increasing(f, exhaustive=False):
    """``F(x,z) <= F(y,w)`` whenever ``x <= y`` and ``z <= w``.

    Witnesses are ``(x, y, z, w)``.
    """
    tab, rel, n = f.table, f.carrier.rel, f.n
    found = []
    for x, y, z, w in itertools.product(range(n), repeat=4):
        if rel[x][y] and rel[z][w] and not rel[tab[x][z]][tab[y][w]]:
            found.append(((x, y, z, w), (tab[x][z], tab[y][w])))
            if not exhaustive:
                break
    if not found:
        return CheckOutcome.ok()
    return CheckOutcome.fail(*found[0], "joint monotonicity", found if exhaustive else ())


def basic_props(f):
    return {
        "commutative": is_commutative(f),
        "associative": is_associative(f),
        "idempotent": is_idempotent(f),
        "increasing": is_increasing(f),
    }


def neutral(f):
    n, tab = f.n, f.table
    for e in range(n):
        if all(tab[e][x] == x and tab[x][e] == x for x in range(n)):
            return e
    return None


def is_conjunctive(f):
    t, tab = f.carrier, f.table
    for x in range(f.n):
        for y in range(f.n):
            m = t.meet[x][y]
            if not t.rel[tab[x][y]][m]:
                return CheckOutcome.fail((x, y), (tab[x][y], m), "conjunctivity")
    return CheckOutcome.ok()


def is_disjunctive(f):
    t, tab = f.carrier, f.table
    for x in range(f.n):
        for y in range(f.n):
            j = t.join[x][y]
            if not t.rel[j][tab[x][y]]:
                return CheckOutcome.fail((x, y), (j, tab[x][y]), "disjunctivity")
    return CheckOutcome.ok()


def weak_mono_pairs(t, mode, lower_side=False):
    """Related pairs ``(x, y)``, ``x != y``, constrained under ``mode``.

    With ``lower_side`` the UPPER reading requires ``x`` (not ``y``) to be
    transitive; this is UPPER read in the dual order, used for conorms.
    Pairs of two transitive elements come first: a violation there refutes
    every reading, so it is the witness reported.
    """
    tr = classify_elements(t).tr
    rel = t.rel
    both, rest = [], []
    for x in range(t.n):
        for y in range(t.n):
            if x == y or not rel[x][y]:
                continue
            if mode is MonoMode.UPPER:
                keep = (x if lower_side else y) in tr
            else:
                keep = x in tr or y in tr
            if keep:
                (both if x in tr and y in tr else rest).append((x, y))
    return both + rest


def weak_assoc_triples(t, mode, conorm=False):
    """Constrained triples, those with every member associative first.

    ``conorm`` only matters for ``OWN_SIDE``, which then looks at the
    join-associative elements instead of the meet-associative ones.
    """
    cls = classify_elements(t)
    ma, ja = cls.meet_ass, cls.join_ass
    if mode is AssocMode.OWN_SIDE:
        own = ja if conorm else ma
        first = lambda tr: all(v in own for v in tr)  # noqa: E731
        keep = lambda tr: any(v in own for v in tr)  # noqa: E731
    else:
        either = ma | ja
        first = lambda tr: all(v in ma for v in tr) or all(v in ja for v in tr)  # noqa: E731
        if mode is AssocMode.ANY_MEMBER:
            keep = lambda tr: any(v in either for v in tr)  # noqa: E731
        else:
            keep = first
    rest = []
    for triple in itertools.product(range(t.n), repeat=3):
        if first(triple):
            yield triple
        elif keep(triple):
            rest.append(triple)
    yield from rest


def is_weakly_increasing(f, sem=DEFAULT_SEMANTICS, lower_side=False, exhaustive=False):
    mode = sem.mono if isinstance(sem, WeakSemantics) else MonoMode(sem)
    return _mono_scan(f, weak_mono_pairs(f.carrier, mode, lower_side),
                      f"weak monotonicity ({mode.value})", exhaustive)


def is_weakly_associative(f, sem=DEFAULT_SEMANTICS, conorm=False, exhaustive=False):
    mode = sem.assoc if isinstance(sem, WeakSemantics) else AssocMode(sem)
    return _assoc_scan(f, weak_assoc_triples(f.carrier, mode, conorm),
                       f"weak associativity ({mode.value})", exhaustive)


def _neutral_check(f, e):
    for x in range(f.n):
        if f.table[e][x] != x or f.table[x][e] != x:
            return CheckOutcome.fail((e, x), (f.table[e][x], x), "neutral element")
    return CheckOutcome.ok()


@dataclass
class OpReport:
    """Outcome of :func:`classify_op`: member classes and every check run."""

    classes: set
    checks: dict
    semantics: WeakSemantics

    def __contains__(self, cls):
        return cls in self.classes

    def failures(self, cls=None):
        return {k: v for k, v in self.checks.items() if not v.holds and (cls is None or k[0] == cls)}


def classify_op(f, sem=DEFAULT_SEMANTICS, classes=None):
    """Decide membership in the t-norm / t-conorm / pseudo classes.

    Conorm checks use the conorm reading of weak monotonicity (the
    transitive element of a constrained pair is the one nearer the bottom)
    and, under ``OWN_SIDE``, the join-associative elements.  So ``F`` is a
    pseudo-t-conorm on X exactly when it is a pseudo-t-norm on the dual.
    """
    t = f.carrier
    classes = list(OpClass) if classes is None else list(classes)
    comm = is_commutative(f)
    checks = {}
    members = set()
    cache = {}

    def get(key, fn):
        if key not in cache:
            cache[key] = fn()
        return cache[key]

    for cls in classes:
        e = t.top if cls.is_norm else t.bottom
        parts = {"commutative": comm, "neutral": get(("neutral", e), lambda: _neutral_check(f, e))}
        if cls.is_pseudo:
            lower = not cls.is_norm
            parts["weakly-increasing"] = get(("wmono", lower),
                                             lambda: is_weakly_increasing(f, sem, lower))
            side = lower and sem.assoc is AssocMode.OWN_SIDE
            parts["weakly-associative"] = get(("wassoc", side),
                                              lambda: is_weakly_associative(f, sem, side))
        else:
            parts["increasing"] = get("mono", lambda: is_increasing(f, mode=sem.increasing))
            parts["associative"] = get("assoc", lambda: is_associative(f))
        for name, outcome in parts.items():
            checks[(cls, name)] = outcome
        if all(o.holds for o in parts.values()):
            members.add(cls)
    return OpReport(members, checks, sem)


def is_member(f, cls, sem=DEFAULT_SEMANTICS):
    return cls in classify_op(f, sem, [cls]).classes


def pointwise_cmp(f1, f2):
    rel = f1.carrier.rel
    le = ge = True
    for a, b in zip(f1.flat(), f2.flat()):
        le = le and rel[a][b]
        ge = ge and rel[b][a]
    if le and ge:
        return Comparison.EQUAL
    if le:
        return Comparison.LESS
    if ge:
        return Comparison.GREATER
    return Comparison.INCOMPARABLE


def pointwise_leq(f1, f2):
    return pointwise_cmp(f1, f2) in (Comparison.LESS, Comparison.EQUAL)


def first_pointwise_violation(f1, f2):
    """First cell with ``f1(x,y) <= f2(x,y)`` failing."""
    rel = f1.carrier.rel
    for x in range(f1.n):
        for y in range(f1.n):
            if not rel[f1.table[x][y]][f2.table[x][y]]:
                return CheckOutcome.fail((x, y), (f1.table[x][y], f2.table[x][y]), "pointwise order")
    return CheckOutcome.ok()


def distributes_over(f1, f2, all_pairs=False):
    """``F1(x, F2(y,z)) = F2(F1(x,y), F1(x,z))`` unless ``y = z`` is a bound.

    ``all_pairs=True`` drops that exception and tests every triple.
    """
    t = f1.carrier
    a, b = f1.table, f2.table
    excluded = set() if all_pairs else {(t.bottom, t.bottom), (t.top, t.top)}
    for x, y, z in itertools.product(range(f1.n), repeat=3):
        if (y, z) in excluded:
            continue
        lhs, rhs = a[x][b[y][z]], b[a[x][y]][a[x][z]]
        if lhs != rhs:
            return CheckOutcome.fail((x, y, z), (lhs, rhs), "distributivity")
    return CheckOutcome.ok()


def meet_characterization(f, sem=DEFAULT_SEMANTICS):
    """If ``F`` is an idempotent pseudo-t-norm with ``F(x^y, x^y) <= F(x,y)``,
    then ``F`` must be the meet.  Holds vacuously when the premise fails."""
    t = f.carrier
    if not is_member(f, OpClass.PSEUDO_T_NORM, sem) or not is_idempotent(f):
        return CheckOutcome(True, reason="premise not satisfied")
    for x in range(f.n):
        for y in range(f.n):
            m = t.meet[x][y]
            if not t.rel[f.table[m][m]][f.table[x][y]]:
                return CheckOutcome(True, reason="premise not satisfied")
    for x in range(f.n):
        for y in range(f.n):
            if f.table[x][y] != t.meet[x][y]:
                return CheckOutcome.fail((x, y), (f.table[x][y], t.meet[x][y]), "differs from meet")
    return CheckOutcome.ok()


def join_characterization(f, sem=DEFAULT_SEMANTICS):
    """Dual of :func:`meet_characterization`."""
    t = f.carrier
    if not is_member(f, OpClass.PSEUDO_T_CONORM, sem) or not is_idempotent(f):
        return CheckOutcome(True, reason="premise not satisfied")
    for x in range(f.n):
        for y in range(f.n):
            j = t.join[x][y]
            if not t.rel[f.table[x][y]][f.table[j][j]]:
                return CheckOutcome(True, reason="premise not satisfied")
    for x in range(f.n):
        for y in range(f.n):
            if f.table[x][y] != t.join[x][y]:
                return CheckOutcome.fail((x, y), (f.table[x][y], t.join[x][y]), "differs from join")
    return CheckOutcome.ok()
