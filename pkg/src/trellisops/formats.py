"""Text formats for structures (``.trl``) and operation tables.

Structure files::

    # comment
    elements: 0 a b c 1
    edge: 0 a          # Hasse mode: drawn arc, lower end first
    dashed: a c        # Hasse mode: pair left unrelated
    rel: a b           # explicit mode: one non-reflexive related pair
    bottom: 0
    top: 1

Explicit (``rel``) and Hasse (``edge``/``dashed``) lines cannot be mixed.
Operation tables are square with a header row and a header column of
labels; cells are separated by ``|``, commas or whitespace.
"""

from __future__ import annotations

import io
import csv
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from . import core
from .binop import OpTable


class ParseError(ValueError):
    def __init__(self, message, line=None, source=None):
        where = ""
        if source:
            where += f"{source}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}".strip())
        self.line = line


@dataclass
class StructureFile:
    labels: list
    mode: str
    pairs: list
    dashed: list
    bottom: str = None
    top: str = None


KEYS = ("elements", "rel", "edge", "dashed", "bottom", "top")


def _strip(line):
    return line.split("#", 1)[0].strip()


def read_structure_file(text, source=None):
    labels = None
    pairs, dashed = [], []
    modes = set()
    bottom = top = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip(raw)
        if not line:
            continue
        key, sep, rest = line.partition(":")
        key = key.strip().lower()
        if not sep or key not in KEYS:
            raise ParseError(f"expected one of {', '.join(k + ':' for k in KEYS)}", lineno, source)
        args = rest.split()
        if key == "elements":
            if labels is not None:
                raise ParseError("duplicate elements line", lineno, source)
            if not args:
                raise ParseError("no elements given", lineno, source)
            if len(set(args)) != len(args):
                raise ParseError("duplicate element label", lineno, source)
            labels = args
            continue
        if labels is None:
            raise ParseError("elements: must come first", lineno, source)
        for a in args:
            if a not in labels:
                raise ParseError(f"unknown element {a!r}", lineno, source)
        if key in ("bottom", "top"):
            if len(args) != 1:
                raise ParseError(f"{key}: takes one element", lineno, source)
            if key == "bottom":
                bottom = args[0]
            else:
                top = args[0]
            continue
        if len(args) != 2:
            raise ParseError(f"{key}: takes two elements", lineno, source)
        if key == "rel":
            modes.add("explicit")
            pairs.append((args[0], args[1], lineno))
        elif key == "edge":
            modes.add("hasse")
            pairs.append((args[0], args[1], lineno))
        else:
            modes.add("hasse")
            dashed.append((args[0], args[1], lineno))
    if labels is None:
        raise ParseError("missing elements: line", None, source)
    if len(modes) > 1:
        raise ParseError("rel: lines cannot be mixed with edge:/dashed: lines", None, source)
    mode = modes.pop() if modes else "explicit"
    return StructureFile(labels, mode, pairs, dashed, bottom, top)


def parse_structure(text, source=None, require_trellis=True):
    """Parse a structure file into a :class:`core.BoundedTrellis`.

    Falls back to a bare psoset when ``require_trellis`` is false and the
    structure is not a bounded trellis.
    """
    sf = read_structure_file(text, source)
    idx = {lab: i for i, lab in enumerate(sf.labels)}
    n = len(sf.labels)
    try:
        if sf.mode == "hasse":
            p = core.close_hasse(n, [(idx[a], idx[b]) for a, b, _ in sf.pairs],
                                 [(idx[a], idx[b]) for a, b, _ in sf.dashed], sf.labels)
        else:
            seen = {}
            for a, b, lineno in sf.pairs:
                if (b, a) in seen and a != b:
                    raise ParseError(f"antisymmetry violated by {a} {b} (see line {seen[(b, a)]})",
                                     lineno, source)
                seen[(a, b)] = lineno
            p = core.validate_psoset(n, [(idx[a], idx[b]) for a, b, _ in sf.pairs], sf.labels)
    except core.TrellisError as exc:
        raise ParseError(str(exc), None, source) from exc
    try:
        return core.to_bounded(p, idx.get(sf.bottom), idx.get(sf.top))
    except core.TrellisError as exc:
        if require_trellis:
            raise ParseError(str(exc), None, source) from exc
        return p


def serialize_structure(t):
    """Explicit-form text for a psoset or bounded trellis."""
    p = t if isinstance(t, core.Psoset) else t.psoset
    out = io.StringIO()
    out.write("elements: " + " ".join(p.labels) + "\n")
    for x, y in p.pairs():
        out.write(f"rel: {p.labels[x]} {p.labels[y]}\n")
    if isinstance(t, core.BoundedTrellis):
        out.write(f"bottom: {t.label(t.bottom)}\n")
        out.write(f"top: {t.label(t.top)}\n")
    return out.getvalue()


def _split_row(line):
    if "," in line and "|" not in line:
        return [c.strip() for c in next(csv.reader([line]))]
    return line.replace("|", " ").split()


def parse_op(text, carrier, source=None):
    """Parse a labelled square table into an :class:`OpTable` on ``carrier``.

    The header row and column may list the labels in any order.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip(raw)
        if line and set(line) - set("-+|= "):
            rows.append((lineno, _split_row(line)))
    n = carrier.n
    if not rows:
        raise ParseError("empty table", None, source)
    head_line, header = rows[0]
    if len(header) == n + 1:
        header = header[1:]
    elif len(header) != n:
        raise ParseError(f"header has {len(header)} labels, carrier has {n} elements",
                         head_line, source)
    labels = set(carrier.labels)
    for lab in header:
        if lab not in labels:
            raise ParseError(f"unknown label {lab!r}", head_line, source)
    if len(set(header)) != n:
        raise ParseError("duplicate column label", head_line, source)
    cols = [carrier.index(lab) for lab in header]
    if len(rows) - 1 != n:
        raise ParseError(f"expected {n} rows, got {len(rows) - 1}", rows[-1][0], source)
    table = [[None] * n for _ in range(n)]
    for lineno, cells in rows[1:]:
        if len(cells) != n + 1:
            raise ParseError(f"row has {len(cells) - 1} cells, expected {n}", lineno, source)
        rlab = cells[0]
        if rlab not in labels:
            raise ParseError(f"unknown label {rlab!r}", lineno, source)
        r = carrier.index(rlab)
        if table[r][0] is not None:
            raise ParseError(f"duplicate row {rlab!r}", lineno, source)
        for c, cell in zip(cols, cells[1:]):
            if cell not in labels:
                raise ParseError(f"unknown label {cell!r}", lineno, source)
            table[r][c] = carrier.index(cell)
    return OpTable(tuple(map(tuple, table)), carrier)


def serialize_op(op, name="F"):
    """CSV with header row and column, in carrier index order."""
    out = io.StringIO()
    w = csv.writer(out, lineterminator="\n")
    labels = op.carrier.labels
    w.writerow([name, *labels])
    for x, row in enumerate(op.table):
        w.writerow([labels[x], *(labels[v] for v in row)])
    return out.getvalue()


def load_structure(path, require_trellis=True):
    path = Path(path)
    return parse_structure(path.read_text(encoding="utf-8"), str(path), require_trellis)


def load_op(path, carrier):
    path = Path(path)
    return parse_op(path.read_text(encoding="utf-8"), carrier, str(path))


def fixture_path(name):
    """Path of a bundled fixture, e.g. ``fixture_path("PC8.trl")``."""
    return resources.files("trellisops") / "fixtures" / name


def fixture(name, require_trellis=True):
    """Load a bundled structure fixture by name (``"PC8"`` or ``"PC8.trl"``)."""
    if not name.endswith(".trl"):
        name += ".trl"
    return parse_structure(fixture_path(name).read_text(encoding="utf-8"), name, require_trellis)


def fixture_op(name, carrier):
    if "." not in name:
        name += ".tbl"
    return parse_op(fixture_path(name).read_text(encoding="utf-8"), carrier, name)


def fixture_names():
    return sorted(p.name[:-4] for p in (resources.files("trellisops") / "fixtures").iterdir()
                  if p.name.endswith(".trl"))
