"""Constructions of (pseudo-)t-norms and t-conorms on bounded trellises.

Chained meets such as ``(x ^ y) ^ e`` are always grouped left to right:
meet is not associative on a trellis, so the grouping matters.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field

from . import core
from .binop import DEFAULT_SEMANTICS, OpClass, OpTable, is_member
from .classify import classify_elements
from .morph import TrellisMap, is_isomorphism

log = logging.getLogger(__name__)


class ConstructionError(ValueError):
    pass


class NotACoatom(ConstructionError):
    pass


class NotAnAtom(ConstructionError):
    pass


class NotAssociativeElement(ConstructionError):
    pass


class SubOpNotPseudoTNorm(ConstructionError):
    pass


class NotAnIsomorphism(ConstructionError):
    pass


def _build(t, fn):
    return OpTable(tuple(tuple(fn(x, y) for y in range(t.n)) for x in range(t.n)), t)


def t_drastic(t):
    """``x ^ y`` if an argument is the top, else the bottom."""
    m = t.meet
    return _build(t, lambda x, y: m[x][y] if t.top in (x, y) else t.bottom)


def s_drastic(t):
    j = t.join
    return _build(t, lambda x, y: j[x][y] if t.bottom in (x, y) else t.top)


def t_coatom(t, i):
    """Drastic t-norm raised to ``i`` on the cell ``(i, i)``."""
    from .classify import coatoms

    if i not in coatoms(t):
        raise NotACoatom(f"{t.label(i)} is not a coatom")
    td = t_drastic(t).table
    return _build(t, lambda x, y: i if (x, y) == (i, i) else td[x][y])


def s_atom(t, j):
    from .classify import atoms

    if j not in atoms(t):
        raise NotAnAtom(f"{t.label(j)} is not an atom")
    sd = s_drastic(t).table
    return _build(t, lambda x, y: j if (x, y) == (j, j) else sd[x][y])


def t_param(t, e):
    """``T_e``: meet on the top row/column, ``(x ^ y) ^ e`` elsewhere.

    Always constructed; a warning is logged when ``e`` is not
    meet-associative, since the result may then fail to be a pseudo-t-norm.
    """
    if e not in classify_elements(t).meet_ass:
        log.warning("%s is not meet-associative; T_e may not be a pseudo-t-norm", t.label(e))
    m = t.meet
    return _build(t, lambda x, y: m[x][y] if t.top in (x, y) else m[m[x][y]][e])


def s_param(t, e):
    if e not in classify_elements(t).join_ass:
        log.warning("%s is not join-associative; S_e may not be a pseudo-t-conorm", t.label(e))
    j = t.join
    return _build(t, lambda x, y: j[x][y] if t.bottom in (x, y) else j[j[x][y]][e])


def z_norm(t):
    """``x ^ y`` when ``x v y`` is the top, else the bottom."""
    if not core.is_modular(t).holds:
        log.warning("carrier is not modular; Z may not be a pseudo-t-norm")
    m, j = t.meet, t.join
    return _build(t, lambda x, y: m[x][y] if j[x][y] == t.top else t.bottom)


def z_conorm(t):
    if not core.is_modular(t).holds:
        log.warning("carrier is not modular; Z* may not be a pseudo-t-conorm")
    m, j = t.meet, t.join
    return _build(t, lambda x, y: j[x][y] if m[x][y] == t.bottom else t.top)


def upper_interval(t, a):
    """``[a, 1]`` as a standalone bounded trellis plus local-to-global ids."""
    return core.sub_bounded(t, core.interval(t, a, t.top))


def lower_interval(t, a):
    return core.sub_bounded(t, core.interval(t, t.bottom, a))


def _check_split_point(t, a):
    if a in (t.bottom, t.top) or a not in classify_elements(t).ass:
        raise NotAssociativeElement(f"{t.label(a)} is not an associative element other than 0, 1")


def _rehome(op, sub):
    if op.n != sub.n:
        raise ConstructionError(f"sub-operation is {op.n}x{op.n}, the interval has {sub.n} elements")
    return op if op.carrier is sub else op.on(sub)


def _lift(sub_op, elements, expected_carrier):
    """Translate a table on an interval into global ids."""
    if sub_op.n != len(elements):
        raise ConstructionError("sub-operation size does not match the interval")
    if tuple(sub_op.carrier.labels) != tuple(expected_carrier.labels):
        raise ConstructionError("sub-operation carrier does not match the interval")
    g = {(elements[i], elements[k]): elements[sub_op.table[i][k]]
         for i in range(sub_op.n) for k in range(sub_op.n)}
    return g


def ordinal_sum_norm(t, a, v, sem=DEFAULT_SEMANTICS):
    """Glue a pseudo-t-norm ``v`` on ``[a, 1]`` into an operation on ``t``.

    ``x ^ y`` if an argument is the top; ``v(x, y)`` if both lie in
    ``[a, 1)``; ``(x ^ y) ^ a`` otherwise.
    """
    _check_split_point(t, a)
    sub, elements = upper_interval(t, a)
    v = _rehome(v, sub)
    if not is_member(v, OpClass.PSEUDO_T_NORM, sem):
        raise SubOpNotPseudoTNorm("V is not a pseudo-t-norm on the interval [a, 1]")
    lifted = _lift(v, elements, sub)
    m = t.meet
    half_open = set(elements) - {t.top}

    def cell(x, y):
        if t.top in (x, y):
            return m[x][y]
        if x in half_open and y in half_open:
            return lifted[(x, y)]
        return m[m[x][y]][a]

    return _build(t, cell)


def ordinal_sum_conorm(t, a, w, sem=DEFAULT_SEMANTICS):
    _check_split_point(t, a)
    sub, elements = lower_interval(t, a)
    w = _rehome(w, sub)
    if not is_member(w, OpClass.PSEUDO_T_CONORM, sem):
        raise SubOpNotPseudoTNorm("W is not a pseudo-t-conorm on the interval [0, a]")
    lifted = _lift(w, elements, sub)
    j = t.join
    half_open = set(elements) - {t.bottom}

    def cell(x, y):
        if t.bottom in (x, y):
            return j[x][y]
        if x in half_open and y in half_open:
            return lifted[(x, y)]
        return j[j[x][y]][a]

    return _build(t, cell)


def ordinal_sum_norm_piecewise(t, a, v):
    """Case-by-case description of the ordinal sum via incomparability with ``a``.

    Cells not covered by the listed cases fall back to ``x ^ y``.
    """
    sub, elements = upper_interval(t, a)
    lifted = _lift(_rehome(v, sub), elements, sub)
    m, rel = t.meet, t.rel
    half_open = set(elements) - {t.top}

    def incomparable(x):
        return not rel[x][a] and not rel[a][x]

    def cell(x, y):
        if x in half_open and y in half_open:
            return lifted[(x, y)]
        if x in half_open and incomparable(y):
            return m[y][a]
        if y in half_open and incomparable(x):
            return m[x][a]
        if incomparable(x) and incomparable(y):
            return m[m[x][y]][a]
        return m[x][y]

    return _build(t, cell)


def piecewise_mismatches(f, g):
    """Cells where two tables on the same carrier differ."""
    return [(x, y, f.table[x][y], g.table[x][y])
            for x in range(f.n) for y in range(f.n) if f.table[x][y] != g.table[x][y]]


def transport(op, iso):
    """Conjugate ``op`` (on ``iso.target``) back to ``iso.source``."""
    if not is_isomorphism(iso):
        raise NotAnIsomorphism("map is not a bijective homomorphism")
    inv = iso.inverse().mapping
    rho = iso.mapping
    src = iso.source
    return _build(src, lambda x, y: inv[op.table[rho[x]][rho[y]]])


class Kind(enum.Enum):
    DRASTIC_T = "drastic-t"
    DRASTIC_S = "drastic-s"
    COATOM_T = "coatom-t"
    ATOM_S = "atom-s"
    PARAM_T = "param-t"
    PARAM_S = "param-s"
    Z = "z"
    Z_STAR = "z-star"
    ORDINAL_T = "ordinal-t"
    ORDINAL_S = "ordinal-s"
    TRANSPORT = "transport"


@dataclass
class ConstructionSpec:
    kind: Kind
    element: int = None
    sub_op: OpTable = None
    iso: TrellisMap = None
    extra: dict = field(default_factory=dict)

    def validate(self):
        needs = {
            Kind.COATOM_T: "element", Kind.ATOM_S: "element",
            Kind.PARAM_T: "element", Kind.PARAM_S: "element",
            Kind.ORDINAL_T: ("element", "sub_op"), Kind.ORDINAL_S: ("element", "sub_op"),
            Kind.TRANSPORT: ("sub_op", "iso"),
        }.get(self.kind, ())
        for name in (needs,) if isinstance(needs, str) else needs:
            if getattr(self, name) is None:
                raise ConstructionError(f"{self.kind.value} needs {name}")


def build(t, spec):
    """Dispatch a :class:`ConstructionSpec` on carrier ``t``."""
    spec.validate()
    k, e = spec.kind, spec.element
    if k is Kind.DRASTIC_T:
        return t_drastic(t)
    if k is Kind.DRASTIC_S:
        return s_drastic(t)
    if k is Kind.COATOM_T:
        return t_coatom(t, e)
    if k is Kind.ATOM_S:
        return s_atom(t, e)
    if k is Kind.PARAM_T:
        return t_param(t, e)
    if k is Kind.PARAM_S:
        return s_param(t, e)
    if k is Kind.Z:
        return z_norm(t)
    if k is Kind.Z_STAR:
        return z_conorm(t)
    if k is Kind.ORDINAL_T:
        return ordinal_sum_norm(t, e, spec.sub_op)
    if k is Kind.ORDINAL_S:
        return ordinal_sum_conorm(t, e, spec.sub_op)
    return transport(spec.sub_op, spec.iso)
