"""DOT, JSON and CSV renderings of a subspace sum graph.  Output is deterministic."""

from __future__ import annotations

import csv
import io
import json

from .graph import SubspaceGraph

FORMAT_VERSION = 1


def to_dot(g: SubspaceGraph) -> str:
    """Vertices are named by their canonical basis string and grouped by dimension."""
    lines = [
        "graph subspace_sum {",
        f"  // GF({g.field.q})^{g.n}: {g.order} vertices, {g.size} edges",
    ]
    for k in range(1, g.n):
        members = " ".join(f'"{g.label(i)}";' for i in g.by_dimension(k))
        lines.append(f"  subgraph dim_{k} {{ rank=same; {members} }}")
    for u, v in g.edges():
        lines.append(f'  "{g.label(u)}" -- "{g.label(v)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_dict(g: SubspaceGraph) -> dict:
    return {
        "version": FORMAT_VERSION,
        "field": g.field.to_json(),
        "n": g.n,
        "order": g.order,
        "size": g.size,
        "vertices": [
            {"index": i, "dim": g.dim_of[i], "basis": [row for row in g.label(i).split(",")]}
            for i in range(g.order)
        ],
        "edges": [[u, v] for u, v in g.edges()],
    }


def to_json(g: SubspaceGraph) -> str:
    return json.dumps(to_dict(g), indent=1) + "\n"


def to_csv(g: SubspaceGraph) -> str:
    """One row per vertex: index, dimension, basis, degree."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["index", "dim", "basis", "degree"])
    for i in range(g.order):
        writer.writerow([i, g.dim_of[i], g.label(i), g.degree(i)])
    return buf.getvalue()


RENDERERS = {"dot": to_dot, "json": to_json, "csv": to_csv}
