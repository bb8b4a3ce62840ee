"""Quivers with relations attached to triangulations, and their mutation.

Vertices are ``1..n``; an arrow is an ordered pair ``(i, j)`` meaning ``i -> j``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .polygon import Triangulation, triangle_less

Arrow = tuple[int, int]
Path = tuple[Arrow, ...]

ZERO = "zero"
COMMUTATIVITY = "commutativity"


class QuiverError(ValueError):
    pass


class UnsupportedQuiverError(QuiverError):
    """More than two shortest paths for one arrow; no relation shape is defined."""


@dataclass(frozen=True, order=True)
class Relation:
    kind: str
    path1: Path
    path2: Path = ()

    def __post_init__(self) -> None:
        if self.kind not in (ZERO, COMMUTATIVITY):
            raise QuiverError(f"unknown relation kind {self.kind!r}")
        if (self.kind == ZERO) != (not self.path2):
            raise QuiverError("a zero relation has one path, a commutativity relation two")
        for path in (self.path1, self.path2):
            for a, b in zip(path, path[1:]):
                if a[1] != b[0]:
                    raise QuiverError(f"path {path} is not composable")

    def to_json(self) -> dict:
        paths = [self.path1] if self.kind == ZERO else [self.path1, self.path2]
        return {"kind": self.kind, "paths": [[list(a) for a in p] for p in paths]}


@dataclass(frozen=True)
class QuiverWithRelations:
    n: int
    arrows: frozenset[Arrow]
    relations: frozenset[Relation] = field(default=frozenset())

    def __post_init__(self) -> None:
        object.__setattr__(self, "arrows", frozenset(self.arrows))
        object.__setattr__(self, "relations", frozenset(self.relations))
        for i, j in self.arrows:
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise QuiverError(f"arrow {i}->{j} leaves the vertex set 1..{self.n}")
            if i == j:
                raise QuiverError(f"loop at {i}")
            if (j, i) in self.arrows:
                raise QuiverError(f"2-cycle between {i} and {j}")
        for rel in self.relations:
            for a in rel.path1 + rel.path2:
                if a not in self.arrows:
                    raise QuiverError(f"relation uses missing arrow {a}")

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def successors(self, v: int) -> list[int]:
        return sorted(j for i, j in self.arrows if i == v)

    def predecessors(self, v: int) -> list[int]:
        return sorted(i for i, j in self.arrows if j == v)

    def neighbors(self, v: int) -> set[int]:
        return {j for i, j in self.arrows if i == v} | {i for i, j in self.arrows if j == v}

    def adjacent(self, u: int, v: int) -> bool:
        return (u, v) in self.arrows or (v, u) in self.arrows

    def zero_pairs(self) -> set[tuple[Arrow, Arrow]]:
        """Consecutive arrow pairs killed by a length-2 zero relation."""
        return {(r.path1[0], r.path1[1]) for r in self.relations
                if r.kind == ZERO and len(r.path1) == 2}

    def with_relations(self, relations: Iterable[Relation]) -> QuiverWithRelations:
        return QuiverWithRelations(self.n, self.arrows, frozenset(relations))

    def to_json(self) -> dict:
        return {
            "vertices": self.n,
            "arrows": [list(a) for a in sorted(self.arrows)],
            "relations": [r.to_json() for r in sorted(self.relations)],
        }


def quiver_from_json(data: dict) -> QuiverWithRelations:
    try:
        n = data["vertices"]
        arrows = frozenset((int(a), int(b)) for a, b in data["arrows"])
        relations = []
        for rel in data.get("relations", []):
            paths = [tuple((int(a), int(b)) for a, b in p) for p in rel["paths"]]
            relations.append(Relation(rel["kind"], *paths))
    except (KeyError, TypeError, ValueError) as exc:
        raise QuiverError(f"malformed quiver JSON: {exc}") from None
    return QuiverWithRelations(n, arrows, frozenset(relations))


def _cycle_relations(cycle: tuple[int, int, int]) -> set[Relation]:
    # oriented triangle a -> b -> c -> a: every length-2 composite vanishes
    a, b, c = cycle
    return {Relation(ZERO, ((b, c), (c, a))),
            Relation(ZERO, ((c, a), (a, b))),
            Relation(ZERO, ((a, b), (b, c)))}


def quiver_from_triangulation(T: Triangulation) -> QuiverWithRelations:
    """Arrow ``j -> i`` whenever ``-alpha_i < -alpha_j`` bound a common triangle,
    plus the triangle relations."""
    arrows = set()
    relations = set()
    for tri in T.triangles:
        sides = T.triangle_sides(tri)
        local = []
        for p in range(len(sides)):
            for q in range(p + 1, len(sides)):
                i, j = sides[p], sides[q]
                local.append((j, i) if triangle_less(T, i, j) else (i, j))
        arrows.update(local)
        if len(sides) == 3:
            a, b = local[0]
            c = next(v for v in sides if v not in (a, b))
            relations |= _cycle_relations((a, b, c))
    return QuiverWithRelations(T.n, frozenset(arrows), frozenset(relations))


def mutate_arrows(Q: QuiverWithRelations, k: int) -> frozenset[Arrow]:
    """Arrow set after mutation at ``k`` (relations are not touched)."""
    if k not in Q.vertices:
        raise QuiverError(f"vertex {k} out of range 1..{Q.n}")
    incoming = [j for j, t in Q.arrows if t == k]
    outgoing = [l for s, l in Q.arrows if s == k]
    arrows = {(j, i) if k in (i, j) else (i, j) for i, j in Q.arrows}
    for j in incoming:
        for l in outgoing:
            if (l, j) in arrows:
                arrows.discard((l, j))
            elif (j, l) in arrows:
                raise QuiverError(f"mutation at {k} would double the arrow {j}->{l}")
            else:
                arrows.add((j, l))
    return frozenset(arrows)


def mutate_quiver(Q: QuiverWithRelations, k: int) -> QuiverWithRelations:
    mutated = QuiverWithRelations(Q.n, mutate_arrows(Q, k))
    return mutated.with_relations(shortest_path_relations(mutated))


def _chordless_paths(Q: QuiverWithRelations, start: int, end: int) -> list[list[int]]:
    # vertex paths start..end (length >= 2) whose vertex set induces a cycle
    # together with the edge end--start
    found = []

    def extend(path: list[int]) -> None:
        last = path[-1]
        for v in sorted(Q.neighbors(last)):
            if v in path:
                continue
            if v == end:
                if len(path) >= 2 and not any(Q.adjacent(end, w) for w in path[1:-1]):
                    found.append(path + [v])
                continue
            if any(Q.adjacent(v, w) for w in path[:-1]):
                continue
            extend(path + [v])

    extend([start])
    return found


def shortest_path_relations(Q: QuiverWithRelations) -> frozenset[Relation]:
    """Relations from shortest paths: for each arrow ``i -> j``, the oriented
    paths ``j ~> i`` inside induced cycles through that arrow."""
    relations = set()
    for i, j in sorted(Q.arrows):
        paths = []
        for vpath in _chordless_paths(Q, j, i):
            steps = tuple(zip(vpath, vpath[1:]))
            if all(step in Q.arrows for step in steps):
                paths.append(steps)
        if len(paths) == 1:
            relations.add(Relation(ZERO, paths[0]))
        elif len(paths) == 2:
            relations.add(Relation(COMMUTATIVITY, *sorted(paths)))
        elif len(paths) > 2:
            raise UnsupportedQuiverError(
                f"arrow {i}->{j} has {len(paths)} shortest paths back; only 1 or 2 are supported")
    return frozenset(relations)


@dataclass(frozen=True)
class ExchangeMatrix:
    """Square integer matrix, addressed 1-based as ``B[i, j]``."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        if any(len(row) != len(rows) for row in rows):
            raise QuiverError("exchange matrix must be square")
        object.__setattr__(self, "entries", rows)

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i - 1][j - 1]

    def column(self, k: int) -> list[int]:
        return [row[k - 1] for row in self.entries]

    def is_skew_symmetric(self) -> bool:
        n = self.n
        return all(self.entries[i][j] == -self.entries[j][i] for i in range(n) for j in range(n))

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.entries]


def b_matrix(Q: QuiverWithRelations) -> ExchangeMatrix:
    """``b_ij = +1`` for ``i -> j``, ``-1`` for ``j -> i``."""
    rows = [[0] * Q.n for _ in range(Q.n)]
    for i, j in Q.arrows:
        rows[i - 1][j - 1] = 1
        rows[j - 1][i - 1] = -1
    return ExchangeMatrix(tuple(map(tuple, rows)))


def quiver_from_matrix(B: ExchangeMatrix) -> QuiverWithRelations:
    n = B.n
    if not B.is_skew_symmetric() or any(abs(x) > 1 for row in B.entries for x in row):
        raise QuiverError("only skew-symmetric matrices with entries in {-1,0,1} are quivers here")
    arrows = frozenset((i, j) for i in range(1, n + 1) for j in range(1, n + 1) if B[i, j] == 1)
    Q = QuiverWithRelations(n, arrows)
    return Q.with_relations(shortest_path_relations(Q))


def mutate_matrix(B: ExchangeMatrix, k: int) -> ExchangeMatrix:
    """Fomin-Zelevinsky matrix mutation at ``k``."""
    n = B.n
    if not 1 <= k <= n:
        raise QuiverError(f"index {k} out of range 1..{n}")
    e = B.entries
    c = k - 1
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == c or j == c:
                row.append(-e[i][j])
            else:
                row.append(e[i][j] + (abs(e[i][c]) * e[c][j] + e[i][c] * abs(e[c][j])) // 2)
        rows.append(tuple(row))
    return ExchangeMatrix(tuple(rows))
