"""Figures for trellises and operation tables.

Drawing uses matplotlib's Agg backend, so it works headless and only ever
writes files.  Diagrams follow the usual Hasse-type convention: solid
lines for covering pairs and dotted lines for pairs that the order would
relate if it were transitive but does not.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from . import core  # noqa: E402


def _closure_within(rel, edges, n):
    """Least relation holding ``edges`` and closed under every chaining
    step whose result the order ``rel`` actually contains."""
    held = [[x == y for y in range(n)] for x in range(n)]
    for x, y in edges:
        held[x][y] = True
    changed = True
    while changed:
        changed = False
        for x in range(n):
            for y in range(n):
                if not held[x][y] or x == y:
                    continue
                for z in range(n):
                    if held[y][z] and rel[x][z] and not held[x][z]:
                        held[x][z] = True
                        changed = True
    return held


def cover_pairs(p):
    """A minimal set of solid edges that regenerates the order.

    Pairs are dropped greedily, widest first, while the chaining closure
    of what is left still gives back every relation.  On a transitive
    order this is the covering relation.  On a cyclic one it keeps an edge
    that a plain covering test would lose.
    """
    n, rel = p.n, p.rel
    reach = core.reach_matrix(p)
    width = {(x, y): sum(reach[x][z] and reach[z][y] for z in range(n))
             for x in range(n) for y in range(n)}
    edges = [(x, y) for x in range(n) for y in range(n) if x != y and rel[x][y]]
    target = [list(row) for row in rel]
    for pair in sorted(edges, key=lambda e: (-width[e], e)):
        trial = [e for e in edges if e != pair]
        if _closure_within(rel, trial, n) == target:
            edges = trial
    return sorted(edges)


def dashed_pairs(p):
    """Unrelated pairs joined by a chain of the order, listed once."""
    n, rel = p.n, p.rel
    reach = core.reach_matrix(p)
    out = []
    for x in range(n):
        for y in range(n):
            if x != y and not rel[x][y] and not rel[y][x] and reach[x][y]:
                out.append((x, y))
    return out


def _levels(p, covers):
    """Longest-path level of each element over the covers.

    Covers that close a cycle are skipped while levelling, so cyclic
    structures still get a finite layout.
    """
    n = p.n
    succ = {x: [] for x in range(n)}
    for x, y in covers:
        succ[x].append(y)
    state = [0] * n
    dag = {x: [] for x in range(n)}

    def visit(x):
        state[x] = 1
        for y in succ[x]:
            if state[y] == 1:
                continue  # back edge
            dag[x].append(y)
            if state[y] == 0:
                visit(y)
        state[x] = 2

    for x in sorted(range(n), key=lambda v: sum(p.rel[u][v] for u in range(n))):
        if state[x] == 0:
            visit(x)
    level = [0] * n
    order = _topological(dag, n)
    for x in order:
        for y in dag[x]:
            level[y] = max(level[y], level[x] + 1)
    # a top element goes above everything else
    for y in range(n):
        if all(p.rel[x][y] for x in range(n)):
            level[y] = max([level[x] for x in range(n) if x != y], default=-1) + 1
    return level


def _topological(dag, n):
    indeg = [0] * n
    for x in range(n):
        for y in dag[x]:
            indeg[y] += 1
    queue = [x for x in range(n) if indeg[x] == 0]
    order = []
    while queue:
        x = queue.pop(0)
        order.append(x)
        for y in dag[x]:
            indeg[y] -= 1
            if indeg[y] == 0:
                queue.append(y)
    return order


def hasse_layout(p):
    """Positions ``{element: (x, y)}`` with levels on the vertical axis."""
    level = _levels(p, cover_pairs(p))
    rows = {}
    for x in range(p.n):
        rows.setdefault(level[x], []).append(x)
    pos = {}
    for lev, members in rows.items():
        width = len(members)
        for i, x in enumerate(members):
            pos[x] = (i - (width - 1) / 2, float(lev))
    return pos


def _hits_node(pos, a, b):
    """Whether the straight segment a-b runs through a third node."""
    (x0, y0), (x1, y1) = pos[a], pos[b]
    for c, (px, py) in pos.items():
        if c in (a, b) or not min(y0, y1) < py < max(y0, y1):
            continue
        # point on the segment at height py
        sx = x0 + (x1 - x0) * (py - y0) / (y1 - y0)
        if abs(sx - px) < 0.05:
            return True
    return False


def plot_trellis(p, ax=None, title=None):
    """Draw the Hasse-type diagram of ``p``; returns the figure."""
    if ax is None:
        fig, ax = plt.subplots(figsize=(3.2, 4.2))
    else:
        fig = ax.figure
    pos = hasse_layout(p)
    for x, y in cover_pairs(p):
        (x0, y0), (x1, y1) = pos[x], pos[y]
        if y1 > y0 and not _hits_node(pos, x, y):
            ax.plot([x0, x1], [y0, y1], color="black", lw=1.2, zorder=1)
        elif y1 > y0:
            ax.annotate("", xy=(x1, y1), xytext=(x0, y0),
                        arrowprops=dict(arrowstyle="-", color="black", lw=1.2,
                                        connectionstyle="arc3,rad=-0.3"), zorder=1)
        else:
            # goes sideways or down: only happens on a cycle
            ax.annotate("", xy=(x1, y1), xytext=(x0, y0),
                        arrowprops=dict(arrowstyle="->", color="black", lw=1.2,
                                        connectionstyle="arc3,rad=0.3"), zorder=1)
    for x, y in dashed_pairs(p):
        (x0, y0), (x1, y1) = pos[x], pos[y]
        ax.annotate("", xy=(x1, y1), xytext=(x0, y0),
                    arrowprops=dict(arrowstyle="-", ls=":", color="tab:red", lw=1.2,
                                    connectionstyle="arc3,rad=-0.4"), zorder=1)
    xs = [v[0] for v in pos.values()]
    ys = [v[1] for v in pos.values()]
    ax.scatter(xs, ys, s=40, color="black", zorder=2)
    for x, (px, py) in pos.items():
        ax.text(px + 0.12, py, p.labels[x], va="center", ha="left", fontsize=10)
    ax.set_xlim(min(xs) - 1, max(xs) + 1)
    ax.set_ylim(min(ys) - 0.6, max(ys) + 0.6)
    ax.set_axis_off()
    if title:
        ax.set_title(title)
    return fig


def plot_op(op, ax=None, title=None):
    """Heatmap of an operation table with the cell labels written in."""
    t = op.carrier
    if ax is None:
        fig, ax = plt.subplots(figsize=(0.5 * op.n + 1.5, 0.5 * op.n + 1.2))
    else:
        fig = ax.figure
    data = np.array(op.table)
    ax.imshow(data, cmap="viridis", vmin=0, vmax=max(op.n - 1, 1))
    for x in range(op.n):
        for y in range(op.n):
            shade = "white" if data[x, y] < op.n / 2 else "black"
            ax.text(y, x, t.labels[data[x, y]], ha="center", va="center", color=shade, fontsize=9)
    ax.set_xticks(range(op.n), t.labels)
    ax.set_yticks(range(op.n), t.labels)
    ax.xaxis.tick_top()
    if title:
        ax.set_title(title, pad=18)
    return fig


def plot_counts(counts, ax=None, title=None):
    """Bar chart of class sizes on a log axis."""
    if ax is None:
        fig, ax = plt.subplots(figsize=(4.2, 3.0))
    else:
        fig = ax.figure
    names = list(counts)
    values = [counts[k] for k in names]
    bars = ax.bar(range(len(names)), [max(v, 1) for v in values], color="tab:blue")
    ax.set_yscale("log")
    ax.set_ylim(bottom=0.8)
    ax.set_xticks(range(len(names)), names, rotation=20, ha="right")
    ax.set_ylabel("operations")
    for bar, v in zip(bars, values):
        ax.annotate(f"{v:,}", (bar.get_x() + bar.get_width() / 2, bar.get_height()),
                    ha="center", va="bottom", fontsize=8)
    if title:
        ax.set_title(title)
    return fig


def save_figure(fig, path):
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def to_dot(p, name="trellis"):
    """Graphviz source for the diagram (bottom at the bottom)."""
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=point];"]
    for x in range(p.n):
        lines.append(f'  n{x} [xlabel="{p.labels[x]}"];')
    for x, y in cover_pairs(p):
        lines.append(f"  n{x} -> n{y} [arrowhead=none];")
    for x, y in dashed_pairs(p):
        lines.append(f"  n{x} -> n{y} [style=dotted, arrowhead=none, constraint=false];")
    lines.append("}")
    return "\n".join(lines) + "\n"
