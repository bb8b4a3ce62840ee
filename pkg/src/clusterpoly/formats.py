"""Renderings for the command line; every output is byte-for-byte deterministic."""

from __future__ import annotations

from .cluster.laurent import LaurentPolynomial
from .cluster.seeds import Seed, cluster_variable
from .polygon import Diagonal, Triangulation, all_diagonals
from .quiver import QuiverWithRelations, quiver_from_triangulation
from .repcat import ARQuiver, enumerate_indecomposables, phi


def _path_text(path) -> str:
    return " ".join(f"{a}->{b}" for a, b in path)


def quiver_dot(Q: QuiverWithRelations) -> str:
    lines = ["digraph Q {"]
    for rel in sorted(Q.relations):
        if rel.kind == "zero":
            lines.append(f"  // zero: {_path_text(rel.path1)}")
        else:
            lines.append(f"  // commutativity: {_path_text(rel.path1)} = {_path_text(rel.path2)}")
    for v in Q.vertices:
        lines.append(f"  {v};")
    for i, j in sorted(Q.arrows):
        lines.append(f"  {i} -> {j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def quiver_text(Q: QuiverWithRelations) -> str:
    lines = [f"{i} -> {j}" for i, j in sorted(Q.arrows)]
    for rel in sorted(Q.relations):
        if rel.kind == "zero":
            lines.append(f"zero: {_path_text(rel.path1)}")
        else:
            lines.append(f"commutativity: {_path_text(rel.path1)} = {_path_text(rel.path2)}")
    return "\n".join(lines) + "\n"


def _node(d: Diagonal) -> str:
    return f'"{d.a},{d.b}"'


def ar_dot(ar: ARQuiver) -> str:
    T = ar.triangulation
    projectives, injectives = set(ar.projectives()), set(ar.injectives())
    lines = ["digraph AR {", "  rankdir=LR;"]
    for d in sorted(ar.vertices):
        dim = "".join(map(str, ar.module(d).dimension_vector(T.n)))
        flags = [name for name, group in (("P", projectives), ("I", injectives)) if d in group]
        label = f"{d}\\n{dim}" + (f"\\n{'/'.join(flags)}" if flags else "")
        attrs = [f'label="{label}"']
        if flags:
            attrs.append('shape=box')
        lines.append(f"  {_node(d)} [{', '.join(attrs)}];")
    for s, t in sorted(ar.arrows):
        lines.append(f"  {_node(s)} -> {_node(t)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def ar_json(ar: ARQuiver) -> dict:
    T = ar.triangulation
    projectives, injectives = set(ar.projectives()), set(ar.injectives())
    return {
        "vertices": [{"diagonal": [d.a, d.b],
                      "dimension_vector": list(ar.module(d).dimension_vector(T.n)),
                      "projective": d in projectives, "injective": d in injectives}
                     for d in sorted(ar.vertices)],
        "arrows": [[[s.a, s.b], [t.a, t.b]] for s, t in sorted(ar.arrows)],
    }


def indec_rows(T: Triangulation) -> list[dict]:
    rows = []
    for M in enumerate_indecomposables(quiver_from_triangulation(T)):
        d = phi(T, M)
        rows.append({"support": sorted(M.support), "dimension_vector": list(M.dimension_vector(T.n)),
                     "diagonal": [d.a, d.b]})
    return rows


def indec_text(rows: list[dict]) -> str:
    lines = ["support\tdimension\tdiagonal"]
    for r in rows:
        lines.append("{%s}\t%s\t(%d,%d)" % (",".join(map(str, r["support"])),
                                           "".join(map(str, r["dimension_vector"])), *r["diagonal"]))
    return "\n".join(lines) + "\n"


def laurent_json(d: Diagonal, w: LaurentPolynomial) -> dict:
    return {"diagonal": [d.a, d.b],
            "numerator": [[c, list(e)] for c, e in w.numerator.term_list()],
            "denominator": list(w.denominator)}


def variable_table(seed: Seed) -> dict:
    """Every diagonal outside the cluster with its variable in the seed's coordinates."""
    T = seed.triangulation
    return {"cluster": [[d.a, d.b] for d in T.diagonals],
            "variables": [laurent_json(d, cluster_variable(seed, d))
                          for d in all_diagonals(T.n) if d not in T]}


def variable_text(table: dict) -> str:
    n = len(table["cluster"])
    lines = []
    for row in table["variables"]:
        w = LaurentPolynomial.from_terms(n, row["numerator"]).shift([-x for x in row["denominator"]])
        lines.append("(%d,%d)\t%s\t%s" % (*row["diagonal"], w, tuple(row["denominator"])))
    return "\n".join(lines) + "\n"

