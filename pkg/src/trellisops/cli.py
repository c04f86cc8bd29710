"""Command line interface.

Exit codes: 0 when the checked property holds (or the command simply
succeeded), 1 when it fails and a witness is printed, 2 on bad input.
Structures and tables are given as file paths; a bare fixture name such
as ``PC8`` (or ``PC8.trl``) is looked up among the bundled fixtures when
no such file exists.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import __version__, binop, classify, construct, core, enumeration, formats, morph

SCHEMA = 1
EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    """Anything wrong with what the user passed in."""


# -- loading ------------------------------------------------------------------

def _resolve(spec, ext):
    path = Path(spec)
    if path.exists():
        return path
    name = spec if spec.endswith(ext) else spec + ext
    candidate = formats.fixture_path(Path(name).name)
    if candidate.is_file():
        return candidate
    raise InputError(f"no such file or fixture: {spec}")


def load_structure(spec, require_trellis=True):
    path = _resolve(spec, ".trl")
    return formats.parse_structure(path.read_text(encoding="utf-8"), str(spec), require_trellis)


def load_op(spec, carrier):
    path = _resolve(spec, ".tbl")
    return formats.parse_op(path.read_text(encoding="utf-8"), carrier, str(spec))


def element(t, label):
    try:
        return t.index(label)
    except (KeyError, ValueError, core.TrellisError):
        raise InputError(f"unknown element {label!r}") from None


def semantics(args):
    return binop.WeakSemantics(binop.MonoMode(args.mono_mode), binop.AssocMode(args.assoc_mode),
                               binop.IncreasingMode(args.increasing))


# -- reporting ----------------------------------------------------------------

def _labels(t, ids):
    return None if ids is None else [t.labels[i] for i in ids]


def outcome_json(t, outcome):
    return {
        "holds": outcome.holds,
        "witness": _labels(t, outcome.witness),
        "values": _labels(t, outcome.values),
        "reason": outcome.reason or None,
    }


def outcome_text(t, outcome):
    if outcome.holds:
        return "holds"
    parts = [f"fails: {outcome.reason}"]
    if outcome.witness is not None:
        parts.append(f"witness ({', '.join(_labels(t, outcome.witness))})")
    if outcome.values is not None:
        parts.append(f"values {' vs '.join(_labels(t, outcome.values))}")
    return "; ".join(parts)


def table_json(op):
    labels = op.carrier.labels
    return [[labels[v] for v in row] for row in op.table]


class Report:
    """Collects one command's result for either output style."""

    def __init__(self, command):
        self.data = {"schema": SCHEMA, "command": command}
        self.lines = []
        self.code = EXIT_OK

    def say(self, line=""):
        self.lines.append(line)

    def emit(self, as_json, stream):
        if as_json:
            self.data.setdefault("exit_code", self.code)
            json.dump(self.data, stream, indent=2, sort_keys=True)
            stream.write("\n")
        else:
            for line in self.lines:
                stream.write(line + "\n")


def _figure(path, draw):
    if not path:
        return None
    from . import plotting

    fig = draw(plotting)
    plotting.save_figure(fig, path)
    return str(path)


# -- commands -----------------------------------------------------------------

def cmd_validate(args, rep):
    p = load_structure(args.structure, require_trellis=False)
    if isinstance(p, core.Psoset):
        mt, jt, failures = core.meet_join_tables(p)
        rep.code = EXIT_FAIL
        if failures:
            kind, x, y = failures[0]
            reason = f"no {kind} for ({p.label(x)}, {p.label(y)})"
        else:
            reason = "no least or no greatest element"
        rep.data.update(verdict="fails", bounded_trellis=False, reason=reason)
        rep.say(f"not a bounded trellis: {reason}")
        return
    axioms = core.verify_trellis_axioms(p)
    rep.data.update(verdict="holds" if axioms.holds else "fails", bounded_trellis=axioms.holds,
                    n=p.n, bottom=p.label(p.bottom), top=p.label(p.top),
                    axioms=outcome_json(p, axioms))
    if not axioms.holds:
        rep.code = EXIT_FAIL
    rep.say(f"bounded trellis on {p.n} elements, bottom {p.label(p.bottom)}, top {p.label(p.top)}")
    rep.say(f"trellis axioms: {outcome_text(p, axioms)}")


def cmd_info(args, rep):
    t = load_structure(args.structure)
    cls = classify.classify_elements(t)
    names = lambda s: sorted((t.label(x) for x in s), key=t.index)  # noqa: E731
    sets = {
        "transitive": names(cls.tr),
        "right_transitive": names(cls.r_tr),
        "left_transitive": names(cls.l_tr),
        "middle_transitive": names(cls.m_tr),
        "meet_associative": names(cls.meet_ass),
        "join_associative": names(cls.join_ass),
        "associative": names(cls.ass),
        "atoms": names(cls.atoms),
        "coatoms": names(cls.coatoms),
    }
    cyc = [_labels(t, c) for c in classify.cycles(t)]
    modular = core.is_modular(t)
    complete = core.is_complete(t)
    props = {
        "lattice": bool(core.is_lattice(t)),
        "pseudo_chain": bool(core.is_pseudo_chain(t.psoset)),
        "modular": modular.holds,
        "complete": complete.holds,
    }
    rep.data.update(verdict="ok", n=t.n, labels=list(t.labels), bottom=t.label(t.bottom),
                    top=t.label(t.top), elements=sets, cycles=cyc, properties=props,
                    modularity=outcome_json(t, modular))
    rep.say(f"elements ({t.n}): {' '.join(t.labels)}; bottom {t.label(t.bottom)}, "
            f"top {t.label(t.top)}")
    for key, members in sets.items():
        rep.say(f"{key.replace('_', ' ')}: {{{', '.join(members)}}}")
    rep.say("cycles: " + (", ".join("(" + " ".join(c) + ")" for c in cyc) if cyc else "none"))
    for key, value in props.items():
        rep.say(f"{key.replace('_', ' ')}: {'yes' if value else 'no'}")
    if not modular.holds:
        rep.say(f"modularity {outcome_text(t, modular)}")
    fig = _figure(args.figure, lambda pl: pl.plot_trellis(t, title=Path(args.structure).stem))
    if fig:
        rep.data["figure"] = fig
        rep.say(f"figure written to {fig}")
    if args.dot:
        from . import plotting

        Path(args.dot).write_text(plotting.to_dot(t), encoding="utf-8")
        rep.data["dot"] = args.dot
        rep.say(f"DOT written to {args.dot}")


def _cmd_table(args, rep, which):
    t = load_structure(args.structure)
    op = binop.meet_op(t) if which == "meet" else binop.join_op(t)
    rep.data.update(verdict="ok", table=table_json(op), labels=list(t.labels))
    rep.say(formats.serialize_op(op, "^" if which == "meet" else "v").rstrip("\n"))


def cmd_meet_table(args, rep):
    _cmd_table(args, rep, "meet")


def cmd_join_table(args, rep):
    _cmd_table(args, rep, "join")


def cmd_dual(args, rep):
    t = load_structure(args.structure)
    text = formats.serialize_structure(core.dual(t))
    rep.data.update(verdict="ok", structure=text)
    rep.say(text.rstrip("\n"))


def cmd_check_op(args, rep):
    t = load_structure(args.structure)
    op = load_op(args.op, t)
    sem = semantics(args)
    classes = [binop.OpClass(args.op_class)] if args.op_class else list(binop.OpClass)
    report = binop.classify_op(op, sem, classes)
    checks = {}
    for (cls, name), outcome in report.checks.items():
        checks.setdefault(cls.value, {})[name] = outcome_json(t, outcome)
    members = sorted(c.value for c in report.classes)
    rep.data.update(semantics=sem.describe(), classes=members, checks=checks)
    rep.say(f"semantics: {sem.describe()}")
    for cls in classes:
        verdict = "member" if cls in report.classes else "not a member"
        rep.say(f"{cls.value}: {verdict}")
        for (c, name), outcome in report.checks.items():
            if c is cls:
                rep.say(f"  {name}: {outcome_text(t, outcome)}")
    if args.op_class:
        cls = classes[0]
        held = cls in report.classes
        rep.data["verdict"] = "holds" if held else "fails"
        if not held:
            rep.code = EXIT_FAIL
            name, outcome = next(iter(report.failures(cls).items()))
            rep.data["witness"] = outcome_json(t, outcome)
    else:
        rep.data["verdict"] = "ok"
    fig = _figure(args.figure, lambda pl: pl.plot_op(op, title=Path(args.op).stem))
    if fig:
        rep.data["figure"] = fig


def cmd_compare(args, rep):
    t = load_structure(args.structure)
    f1, f2 = load_op(args.op1, t), load_op(args.op2, t)
    cmp = binop.pointwise_cmp(f1, f2)
    rep.data.update(verdict="ok", comparison=cmp.value)
    rep.say(cmp.value)
    if cmp is binop.Comparison.INCOMPARABLE:
        up = binop.first_pointwise_violation(f1, f2)
        down = binop.first_pointwise_violation(f2, f1)
        rep.data.update(not_leq=outcome_json(t, up), not_geq=outcome_json(t, down))
        rep.say(f"  first cell where op1 <= op2 fails: {outcome_text(t, up)}")
        rep.say(f"  first cell where op2 <= op1 fails: {outcome_text(t, down)}")


def cmd_distrib(args, rep):
    t = load_structure(args.structure)
    f1, f2 = load_op(args.op1, t), load_op(args.op2, t)
    out = binop.distributes_over(f1, f2)
    rep.data.update(verdict="holds" if out.holds else "fails", result=outcome_json(t, out))
    rep.say(f"op1 distributes over op2: {outcome_text(t, out)}")
    if not out.holds:
        rep.code = EXIT_FAIL


def _find_iso(t, target, mapping):
    if mapping:
        pairs = dict(item.split("=", 1) for item in mapping.split(","))
        try:
            phi = tuple(target.index(pairs[lab]) for lab in t.labels)
        except (KeyError, ValueError, core.TrellisError):
            raise InputError("map must send every source label to a target label") from None
        return morph.TrellisMap(t, target, phi)
    isos = morph.find_isomorphisms(t, target, limit=1)
    if not isos:
        raise InputError("the structures are not isomorphic")
    return isos[0]


def cmd_construct(args, rep):
    t = load_structure(args.structure)
    kind = construct.Kind(args.kind)
    spec = construct.ConstructionSpec(kind)
    if args.param is not None:
        spec.element = element(t, args.param)
    if args.sub_op:
        if kind is construct.Kind.ORDINAL_T:
            carrier = construct.upper_interval(t, spec.element)[0]
        elif kind is construct.Kind.ORDINAL_S:
            carrier = construct.lower_interval(t, spec.element)[0]
        elif kind is construct.Kind.TRANSPORT:
            if not args.target:
                raise InputError("transport needs --target")
            carrier = load_structure(args.target)
        else:
            raise InputError(f"{kind.value} takes no sub-operation")
        spec.sub_op = load_op(args.sub_op, carrier)
        if kind is construct.Kind.TRANSPORT:
            spec.iso = _find_iso(t, carrier, args.map)
    op = construct.build(t, spec)
    sem = semantics(args)
    report = binop.classify_op(op, sem)
    members = sorted(c.value for c in report.classes)
    rep.data.update(verdict="ok", kind=kind.value, table=table_json(op), classes=members,
                    semantics=sem.describe())
    rep.say(formats.serialize_op(op, args.name).rstrip("\n"))
    rep.say(f"classes ({sem.describe()}): {', '.join(members) if members else 'none'}")
    if args.output:
        Path(args.output).write_text(formats.serialize_op(op, args.name), encoding="utf-8")
        rep.data["output"] = args.output
    fig = _figure(args.figure, lambda pl: pl.plot_op(op, title=kind.value))
    if fig:
        rep.data["figure"] = fig


def cmd_enumerate(args, rep):
    t = load_structure(args.structure)
    sem = semantics(args)
    cls = binop.OpClass(args.op_class)
    task = enumeration.EnumerationTask(t, cls, sem, limit=args.limit, count_only=args.count_only)
    try:
        result = enumeration.enumerate_ops(task, workers=args.workers)
    except enumeration.SearchCapExceeded as exc:
        raise InputError(str(exc)) from None
    rep.data.update(verdict="ok", op_class=cls.value, semantics=sem.describe(),
                    count=result.count, elapsed=round(result.elapsed, 4), nodes=result.nodes,
                    prunes=result.prunes, free_cells=result.free_cells,
                    limited=args.limit is not None)
    if args.count_only:
        rep.say(str(result.count))
        rep.lines.append(f"# {cls.value}, {sem.describe()}, {result.elapsed:.3f}s")
    else:
        rep.data["tables"] = [table_json(op) for op in result.tables]
        rep.say(f"{result.count} operations ({cls.value}, {sem.describe()})")
        for i, op in enumerate(result.tables):
            rep.say("")
            rep.say(formats.serialize_op(op, f"T{i + 1}").rstrip("\n"))
    if args.extremes and result.tables:
        ex = enumeration.extremes(result.tables)
        index = {op: i + 1 for i, op in enumerate(result.tables)}
        summary = {
            "maximal": [index[op] for op in ex.maximal],
            "minimal": [index[op] for op in ex.minimal],
            "greatest": index.get(ex.greatest),
            "smallest": index.get(ex.smallest),
        }
        rep.data["extremes"] = summary
        rep.say(f"maximal: {summary['maximal']}; minimal: {summary['minimal']}; "
                f"greatest: {summary['greatest'] or 'none'}; smallest: {summary['smallest'] or 'none'}")
    if args.out_dir and result.tables:
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        for i, op in enumerate(result.tables):
            (out / f"T{i + 1}.csv").write_text(formats.serialize_op(op, f"T{i + 1}"),
                                               encoding="utf-8")
        rep.data["out_dir"] = str(out)


def cmd_iso(args, rep):
    a, b = load_structure(args.source), load_structure(args.target)
    isos = morph.find_isomorphisms(a, b, limit=args.limit)
    maps = [m.describe() for m in isos]
    rep.data.update(verdict="holds" if isos else "fails", count=len(maps), isomorphisms=maps)
    if not isos:
        rep.code = EXIT_FAIL
        rep.say("not isomorphic")
        return
    rep.say(f"{len(maps)} isomorphism(s)")
    for m in maps:
        rep.say("  " + ", ".join(f"{k}->{v}" for k, v in m.items()))


def cmd_transport(args, rep):
    src, tgt = load_structure(args.source), load_structure(args.target)
    op = load_op(args.op, tgt)
    iso = _find_iso(src, tgt, args.map)
    moved = construct.transport(op, iso)
    sem = semantics(args)
    before = sorted(c.value for c in binop.classify_op(op, sem).classes)
    after = sorted(c.value for c in binop.classify_op(moved, sem).classes)
    rep.data.update(verdict="ok", map=iso.describe(), table=table_json(moved),
                    classes_before=before, classes_after=after)
    rep.say(formats.serialize_op(moved, args.name).rstrip("\n"))
    rep.say(f"classes on target: {', '.join(before) or 'none'}; "
            f"after transport: {', '.join(after) or 'none'}")
    if args.output:
        Path(args.output).write_text(formats.serialize_op(moved, args.name), encoding="utf-8")


def cmd_render(args, rep):
    t = load_structure(args.structure)
    from . import plotting

    if args.op:
        op = load_op(args.op, t)
        fig = plotting.plot_op(op, title=Path(args.op).stem)
    else:
        fig = plotting.plot_trellis(t, title=Path(args.structure).stem)
    plotting.save_figure(fig, args.output)
    rep.data.update(verdict="ok", figure=args.output)
    rep.say(f"figure written to {args.output}")


def cmd_report(args, rep):
    """Summary of a structure plus figures, all written into one directory."""
    t = load_structure(args.structure)
    from . import plotting

    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    stem = Path(args.structure).stem
    sem = semantics(args)
    cls = classify.classify_elements(t)
    names = lambda s: sorted((t.label(x) for x in s), key=t.index)  # noqa: E731
    figures = [plotting.save_figure(plotting.plot_trellis(t, title=stem), out / "structure.png")]
    counts, extremes = {}, {}
    for op_class in binop.OpClass:
        task = enumeration.EnumerationTask(t, op_class, sem, count_only=True)
        counts[op_class.value] = enumeration.enumerate_ops(task, workers=args.workers).count
    for op_class in (binop.OpClass.T_NORM, binop.OpClass.T_CONORM):
        if counts[op_class.value] > args.max_tables:
            continue
        tables = enumeration.enumerate_ops(
            enumeration.EnumerationTask(t, op_class, sem), workers=args.workers).tables
        ex = enumeration.extremes(tables)
        picks = ex.maximal if op_class is binop.OpClass.T_NORM else ex.minimal
        extremes[op_class.value] = {
            "greatest": table_json(ex.greatest) if ex.greatest else None,
            "smallest": table_json(ex.smallest) if ex.smallest else None,
            "maximal_count": len(ex.maximal),
            "minimal_count": len(ex.minimal),
        }
        for i, op in enumerate(picks[:args.figures]):
            kind = "maximal" if op_class is binop.OpClass.T_NORM else "minimal"
            path = out / f"{op_class.value}-{kind}-{i + 1}.png"
            figures.append(plotting.save_figure(
                plotting.plot_op(op, title=f"{kind} {op_class.value} {i + 1}"), path))
    figures.append(plotting.save_figure(plotting.plot_counts(counts, title=stem), out / "counts.png"))
    summary = {
        "structure": stem,
        "n": t.n,
        "semantics": sem.describe(),
        "lattice": bool(core.is_lattice(t)),
        "modular": core.is_modular(t).holds,
        "pseudo_chain": core.is_pseudo_chain(t.psoset).holds,
        "transitive": names(cls.tr),
        "meet_associative": names(cls.meet_ass),
        "join_associative": names(cls.join_ass),
        "cycles": [_labels(t, c) for c in classify.cycles(t)],
        "counts": counts,
        "extremes": extremes,
        "figures": [str(f) for f in figures],
    }
    (out / "summary.json").write_text(json.dumps(summary, indent=2) + "\n", encoding="utf-8")
    rep.data.update(verdict="ok", **summary)
    rep.say(f"report for {stem} written to {out}")
    for key, value in counts.items():
        rep.say(f"  {key}: {value}")
    rep.say(f"  figures: {len(figures)}")


# -- parser -------------------------------------------------------------------

def _add_semantics(p):
    p.add_argument("--mono-mode", choices=[m.value for m in binop.MonoMode],
                   default=binop.DEFAULT_SEMANTICS.mono.value,
                   help="weak monotonicity: transitive upper element, or any transitive member")
    p.add_argument("--assoc-mode", choices=[m.value for m in binop.AssocMode],
                   default=binop.DEFAULT_SEMANTICS.assoc.value,
                   help="weak associativity: triples with any associative member, with all "
                        "members associative, or with a member associative on the class's own "
                        "side (meet for norms, join for conorms)")
    p.add_argument("--increasing", choices=[m.value for m in binop.IncreasingMode],
                   default=binop.DEFAULT_SEMANTICS.increasing.value,
                   help="t-norm monotonicity: per argument, or in both arguments jointly")


def build_parser():
    parser = argparse.ArgumentParser(prog="trellisops",
                                     description="Pseudo-t-norms on bounded trellises.")
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--json", action="store_true", help="machine-readable report")
    parser.add_argument("-v", "--verbose", action="store_true", help="log warnings to stderr")
    sub = parser.add_subparsers(dest="command", required=True)
    class_choices = [c.value for c in binop.OpClass]

    p = sub.add_parser("validate", help="check that a file describes a bounded trellis")
    p.add_argument("structure")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("info", help="element classes, cycles, modularity, completeness")
    p.add_argument("structure")
    p.add_argument("--figure", help="write the Hasse-type diagram to this image file")
    p.add_argument("--dot", help="write a Graphviz DOT file of the diagram")
    p.set_defaults(func=cmd_info)

    for name, func in (("meet-table", cmd_meet_table), ("join-table", cmd_join_table)):
        p = sub.add_parser(name, help=f"print the {name.split('-')[0]} table")
        p.add_argument("structure")
        p.set_defaults(func=func)

    p = sub.add_parser("dual", help="print the dual structure")
    p.add_argument("structure")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("check-op", help="classify an operation table")
    p.add_argument("structure")
    p.add_argument("op")
    p.add_argument("--class", dest="op_class", choices=class_choices)
    p.add_argument("--figure", help="write a heatmap of the table")
    _add_semantics(p)
    p.set_defaults(func=cmd_check_op)

    p = sub.add_parser("compare", help="pointwise order between two tables")
    p.add_argument("structure")
    p.add_argument("op1")
    p.add_argument("op2")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("distrib", help="does op1 distribute over op2")
    p.add_argument("structure")
    p.add_argument("op1")
    p.add_argument("op2")
    p.set_defaults(func=cmd_distrib)

    p = sub.add_parser("construct", help="build a standard operation")
    p.add_argument("structure")
    p.add_argument("--kind", required=True, choices=[k.value for k in construct.Kind])
    p.add_argument("--param", help="element label (coatom, atom, e, or split point)")
    p.add_argument("--sub-op", help="table on the interval (ordinal sums) or on --target")
    p.add_argument("--target", help="structure the sub-operation lives on (transport)")
    p.add_argument("--map", help="explicit isomorphism as a=x,b=y,...")
    p.add_argument("--name", default="F", help="corner label of the printed table")
    p.add_argument("-o", "--output", help="also write the table as CSV")
    p.add_argument("--figure", help="write a heatmap of the table")
    _add_semantics(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("enumerate", help="all operations of a class")
    p.add_argument("structure")
    p.add_argument("--class", dest="op_class", required=True, choices=class_choices)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--limit", type=int)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--extremes", action="store_true", help="report maximal/minimal tables")
    p.add_argument("--out-dir", help="write every table as CSV into this directory")
    _add_semantics(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("iso", help="isomorphisms between two structures")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--limit", type=int)
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("transport", help="pull a table on target back to source")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("op", help="table on the target")
    p.add_argument("--map", help="explicit isomorphism as a=x,b=y,...")
    p.add_argument("--name", default="F")
    p.add_argument("-o", "--output")
    _add_semantics(p)
    p.set_defaults(func=cmd_transport)

    p = sub.add_parser("report", help="write a summary and figures for a structure")
    p.add_argument("structure")
    p.add_argument("--out-dir", required=True)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--figures", type=int, default=4, help="heatmaps per class (default 4)")
    p.add_argument("--max-tables", type=int, default=5000,
                   help="skip listing a class with more tables than this")
    _add_semantics(p)
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("render", help="draw a structure or a table to an image file")
    p.add_argument("structure")
    p.add_argument("op", nargs="?")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_render)
    return parser


INPUT_ERRORS = (InputError, formats.ParseError, core.TrellisError,
                construct.ConstructionError, OSError, ValueError)


def run_command(argv=None, stdout=None, stderr=None):
    """Run one command; returns the exit code."""
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    logging.basicConfig(level=logging.WARNING if args.verbose else logging.ERROR,
                        format="%(levelname)s: %(message)s", stream=stderr)
    if getattr(args, "limit", None) is not None and args.limit < 1:
        stderr.write("error: --limit must be >= 1\n")
        return EXIT_INPUT
    rep = Report(args.command)
    try:
        args.func(args, rep)
    except INPUT_ERRORS as exc:
        if args.json:
            json.dump({"schema": SCHEMA, "command": args.command, "verdict": "error",
                       "error": str(exc), "exit_code": EXIT_INPUT}, stdout, indent=2)
            stdout.write("\n")
        else:
            stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    rep.emit(args.json, stdout)
    return rep.code


def main():
    sys.exit(run_command())


if __name__ == "__main__":
    main()
