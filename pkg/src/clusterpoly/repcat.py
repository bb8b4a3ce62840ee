"""Combinatorial model of the module category of a triangulation quiver.

Every indecomposable is multiplicity free with identity maps along its
support, so an :class:`IndecModule` is just its support.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .polygon import Diagonal, Triangulation, all_diagonals, crosses, pivot_moves, rotate, support
from .quiver import QuiverWithRelations


class ModuleError(ValueError):
    pass


@dataclass(frozen=True)
class IndecModule:
    support: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "support", frozenset(self.support))
        if not self.support:
            raise ModuleError("an indecomposable has nonempty support")

    def dimension_vector(self, n: int) -> tuple[int, ...]:
        return tuple(int(i in self.support) for i in range(1, n + 1))

    def sort_key(self) -> tuple:
        return (len(self.support), tuple(sorted(self.support)))

    def __str__(self) -> str:
        return "{" + ",".join(map(str, sorted(self.support))) + "}"


def is_type_a(Q: QuiverWithRelations, vertices: frozenset[int]) -> bool:
    """True if the full subquiver on ``vertices`` has a path as underlying graph."""
    if not vertices:
        return False
    edges = [(i, j) for i, j in Q.arrows if i in vertices and j in vertices]
    if len(edges) != len(vertices) - 1:
        return False
    degree = dict.fromkeys(vertices, 0)
    for i, j in edges:
        degree[i] += 1
        degree[j] += 1
    if max(degree.values()) > 2:
        return False
    # connected + |E| = |V| - 1 => tree; degrees <= 2 => path
    start = next(iter(vertices))
    seen = {start}
    todo = [start]
    while todo:
        v = todo.pop()
        for w in Q.neighbors(v):
            if w in vertices and w not in seen:
                seen.add(w)
                todo.append(w)
    return len(seen) == len(vertices)


def theta(T: Triangulation, d: Diagonal) -> IndecModule:
    """Module of a positive root: one-dimensional on the diagonals it crosses."""
    if d in T:
        raise ModuleError(f"{d} is a negative root of the triangulation")
    return IndecModule(support(T, d))


phi_inv = theta


def enumerate_indecomposables(Q: QuiverWithRelations) -> list[IndecModule]:
    """Supports inducing a path subquiver, grown from each vertex along induced paths."""
    found: set[frozenset[int]] = set()

    def grow(path: list[int]) -> None:
        found.add(frozenset(path))
        tail = path[-1]
        for w in Q.neighbors(tail):
            if w in path:
                continue
            if any(Q.adjacent(w, u) for u in path[:-1]):
                continue
            grow(path + [w])

    for v in Q.vertices:
        grow([v])
    return sorted((IndecModule(s) for s in found), key=IndecModule.sort_key)


def hom_dim_modules(Q: QuiverWithRelations, M: IndecModule, N: IndecModule) -> int:
    """Dimension (0 or 1) of Hom(M, N) between multiplicity-free modules."""
    S, S2 = M.support, N.support
    common = S & S2
    if not common:
        return 0
    for i, j in Q.arrows:
        if i in S - S2 and j in common:
            return 0
        if i in common and j in S2 - S:
            return 0
    return 1


def _reach(Q: QuiverWithRelations, start: int, forward: bool) -> frozenset[int]:
    # vertices joined to ``start`` by an oriented path free of zero composites
    zero = Q.zero_pairs()
    reached = {start}
    seen = set()
    todo = deque([(None, start)])
    while todo:
        prev_arrow, v = todo.popleft()
        nexts = Q.successors(v) if forward else Q.predecessors(v)
        for w in nexts:
            arrow = (v, w) if forward else (w, v)
            if prev_arrow is not None:
                pair = (prev_arrow, arrow) if forward else (arrow, prev_arrow)
                if pair in zero:
                    continue
            if (arrow, w) in seen:
                continue
            seen.add((arrow, w))
            reached.add(w)
            todo.append((arrow, w))
    return frozenset(reached)


def projective(Q: QuiverWithRelations, i: int) -> IndecModule:
    return IndecModule(_reach(Q, i, forward=True))


def injective(Q: QuiverWithRelations, i: int) -> IndecModule:
    return IndecModule(_reach(Q, i, forward=False))


def phi(T: Triangulation, M: IndecModule) -> Diagonal:
    """The unique diagonal outside ``T`` whose support is ``M.support``."""
    for d in all_diagonals(T.n):
        if d not in T and support(T, d) == M.support:
            return d
    raise ModuleError(f"no diagonal has support {M}")


def dimension_vector_of_diagonal(T: Triangulation, d: Diagonal) -> tuple[int, ...]:
    return tuple(int(crosses(e, d)) for e in T.diagonals)


def ar_translate(T: Triangulation, M: IndecModule) -> IndecModule | None:
    """AR translate via clockwise rotation; ``None`` for projectives."""
    rotated = rotate(phi(T, M), -1)
    if rotated in T:
        return None
    return theta(T, rotated)


def ar_translate_diagonal(T: Triangulation, d: Diagonal) -> Diagonal | None:
    rotated = rotate(d, -1)
    return None if rotated in T else rotated


@dataclass(frozen=True)
class ARQuiver:
    """AR quiver with indecomposables named by their diagonals."""

    triangulation: Triangulation
    vertices: tuple[Diagonal, ...]
    arrows: tuple[tuple[Diagonal, Diagonal], ...]

    def module(self, d: Diagonal) -> IndecModule:
        return theta(self.triangulation, d)

    def predecessors(self, d: Diagonal) -> list[Diagonal]:
        return [s for s, t in self.arrows if t == d]

    def successors(self, d: Diagonal) -> list[Diagonal]:
        return [t for s, t in self.arrows if s == d]

    def projectives(self) -> list[Diagonal]:
        return [d for d in self.vertices if rotate(d, -1) in self.triangulation]

    def injectives(self) -> list[Diagonal]:
        return [d for d in self.vertices if rotate(d, 1) in self.triangulation]


def ar_quiver(T: Triangulation) -> ARQuiver:
    vertices = tuple(d for d in all_diagonals(T.n) if d not in T)
    arrows = tuple((d, target) for d in vertices for _, target in pivot_moves(d) if target not in T)
    return ARQuiver(T, vertices, arrows)


def mesh_additivity_failures(T: Triangulation) -> list[dict]:
    """Vertices where dim(tau M) + dim(M) differs from the sum over incoming arrows."""
    ar = ar_quiver(T)
    failures = []
    for d in ar.vertices:
        tau_d = ar_translate_diagonal(T, d)
        if tau_d is None:
            continue
        lhs = [x + y for x, y in zip(dimension_vector_of_diagonal(T, tau_d),
                                     dimension_vector_of_diagonal(T, d))]
        rhs = [0] * T.n
        for x in ar.predecessors(d):
            rhs = [r + v for r, v in zip(rhs, dimension_vector_of_diagonal(T, x))]
        if lhs != rhs:
            failures.append({"diagonal": [d.a, d.b], "lhs": lhs, "rhs": rhs})
    return failures
