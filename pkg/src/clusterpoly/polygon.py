"""Diagonals and triangulations of a convex (n+3)-gon.

Vertices are labeled ``0..n+2`` counterclockwise, so the positive
(trigonometric) direction is the direction of increasing labels.  Inside a
triangulation, diagonals are addressed by 1-based positions: position ``k``
is the stable name of the k-th negative root.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Iterable, Sequence


class PolygonError(ValueError):
    """Invalid polygon data, such as a bad rank or two crossing diagonals."""


def check_rank(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int):
        raise PolygonError(f"rank must be an integer, got {n!r}")
    if n < 1:
        raise PolygonError(f"rank must be at least 1, got {n} (the polygon has no diagonals)")


def is_diagonal(n: int, a: int, b: int) -> bool:
    """True if vertices ``a`` and ``b`` (taken mod n+3) span a diagonal."""
    return (b - a) % (n + 3) not in (0, 1, n + 2)


@dataclass(frozen=True, order=True)
class Diagonal:
    """A diagonal ``(a, b)`` of the (n+3)-gon in canonical form ``a < b``."""

    n: int
    a: int
    b: int

    def __post_init__(self) -> None:
        check_rank(self.n)
        size = self.n + 3
        if not (0 <= self.a < self.b < size):
            raise PolygonError(f"({self.a},{self.b}) is not a canonical vertex pair of the {size}-gon")
        if not is_diagonal(self.n, self.a, self.b):
            raise PolygonError(f"({self.a},{self.b}) is a border edge of the {size}-gon")

    @classmethod
    def of(cls, n: int, a: int, b: int) -> Diagonal:
        """Build a diagonal from any two vertex representatives."""
        check_rank(n)
        a, b = a % (n + 3), b % (n + 3)
        if a > b:
            a, b = b, a
        return cls(n, a, b)

    @property
    def size(self) -> int:
        return self.n + 3

    @property
    def endpoints(self) -> tuple[int, int]:
        return (self.a, self.b)

    def has_endpoint(self, v: int) -> bool:
        return v == self.a or v == self.b

    def other(self, v: int) -> int:
        if v == self.a:
            return self.b
        if v == self.b:
            return self.a
        raise PolygonError(f"{v} is not an endpoint of {self}")

    def __str__(self) -> str:
        return f"({self.a},{self.b})"


def crosses(d1: Diagonal, d2: Diagonal) -> bool:
    """True iff the open segments of ``d1`` and ``d2`` meet."""
    if d1.n != d2.n:
        raise PolygonError(f"diagonals of different polygons: ranks {d1.n} and {d2.n}")
    a, b, c, d = d1.a, d1.b, d2.a, d2.b
    return (a < c < b < d) or (c < a < d < b)


def rotate(d: Diagonal, direction: int = 1) -> Diagonal:
    """Elementary rotation: ``+1`` is counterclockwise (r+), ``-1`` clockwise (r-)."""
    if direction not in (1, -1):
        raise PolygonError(f"direction must be +1 or -1, got {direction!r}")
    return Diagonal.of(d.n, d.a + direction, d.b + direction)


def pivot_moves(d: Diagonal) -> list[tuple[int, Diagonal]]:
    """Pivoting elementary moves out of ``d`` as ``(pivot, target)`` pairs.

    The pivot stays fixed and the other endpoint advances one vertex
    counterclockwise; moves landing on a border edge are dropped.
    """
    moves = []
    for pivot, free in ((d.a, d.b), (d.b, d.a)):
        if is_diagonal(d.n, pivot, free + 1):
            moves.append((pivot, Diagonal.of(d.n, pivot, free + 1)))
    return moves


@lru_cache(maxsize=None)
def all_diagonals(n: int) -> tuple[Diagonal, ...]:
    """All (n+3)n/2 diagonals in canonical (lexicographic) order."""
    check_rank(n)
    size = n + 3
    return tuple(Diagonal(n, a, b) for a, b in combinations(range(size), 2) if is_diagonal(n, a, b))


Triangle = tuple[int, int, int]


@dataclass(frozen=True)
class Triangulation:
    """An ordered list of n pairwise non-crossing diagonals.

    Equality is positional; use :attr:`key` to compare as sets.
    """

    n: int
    diagonals: tuple[Diagonal, ...]

    def __post_init__(self) -> None:
        check_rank(self.n)
        if not isinstance(self.diagonals, tuple):
            object.__setattr__(self, "diagonals", tuple(self.diagonals))
        problem = _first_violation(self.n, self.diagonals)
        if problem:
            raise PolygonError(problem)

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[Sequence[int]]) -> Triangulation:
        return cls(n, tuple(Diagonal.of(n, a, b) for a, b in pairs))

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, k: int) -> Diagonal:
        if not 1 <= k <= self.n:
            raise IndexError(f"position {k} out of range 1..{self.n}")
        return self.diagonals[k - 1]

    def __contains__(self, d: object) -> bool:
        return d in self._positions

    def __iter__(self):
        return iter(self.diagonals)

    @cached_property
    def _positions(self) -> dict[Diagonal, int]:
        return {d: k for k, d in enumerate(self.diagonals, start=1)}

    def index(self, d: Diagonal) -> int:
        """1-based position of ``d``."""
        try:
            return self._positions[d]
        except KeyError:
            raise PolygonError(f"{d} is not in the triangulation") from None

    @cached_property
    def key(self) -> frozenset[Diagonal]:
        return frozenset(self.diagonals)

    @cached_property
    def edges(self) -> frozenset[tuple[int, int]]:
        """Diagonals and border edges as sorted vertex pairs."""
        size = self.n + 3
        border = {tuple(sorted((v, (v + 1) % size))) for v in range(size)}
        return frozenset(border | {d.endpoints for d in self.diagonals})

    @cached_property
    def triangles(self) -> tuple[Triangle, ...]:
        """The n+1 triangles, each as a sorted vertex triple."""
        edges = self.edges
        found = []
        for x, y in sorted(edges):
            for z in range(y + 1, self.n + 3):
                if (x, z) in edges and (y, z) in edges:
                    found.append((x, y, z))
        return tuple(found)

    def triangle_sides(self, tri: Triangle) -> list[int]:
        """Positions of the diagonals bounding ``tri`` (border sides omitted)."""
        x, y, z = tri
        sides = []
        for u, v in ((x, y), (x, z), (y, z)):
            k = self._positions.get(_maybe_diagonal(self.n, u, v))
            if k is not None:
                sides.append(k)
        return sides

    def replace(self, k: int, d: Diagonal) -> Triangulation:
        diagonals = list(self.diagonals)
        diagonals[k - 1] = d
        return Triangulation(self.n, tuple(diagonals))

    def to_json(self) -> dict:
        return {"n": self.n, "diagonals": [[d.a, d.b] for d in self.diagonals]}

    def __str__(self) -> str:
        return "{" + ", ".join(str(d) for d in self.diagonals) + "}"


def _maybe_diagonal(n: int, u: int, v: int) -> Diagonal | None:
    if not is_diagonal(n, u, v):
        return None
    return Diagonal.of(n, u, v)


def _first_violation(n: int, diagonals: Sequence[Diagonal]) -> str | None:
    for d in diagonals:
        if not isinstance(d, Diagonal):
            return f"not a diagonal: {d!r}"
        if d.n != n:
            return f"diagonal {d} belongs to rank {d.n}, expected {n}"
    if len(diagonals) != n:
        return f"a triangulation of the {n + 3}-gon has {n} diagonals, got {len(diagonals)}"
    seen = set()
    for d in diagonals:
        if d in seen:
            return f"repeated diagonal {d}"
        seen.add(d)
    for d1, d2 in combinations(diagonals, 2):
        if crosses(d1, d2):
            return f"diagonals {d1} and {d2} cross"
    return None


def triangulation_from_json(data: object) -> Triangulation:
    """Parse ``{"n": int, "diagonals": [[a, b], ...]}``, reporting the first violation."""
    if not isinstance(data, dict):
        raise PolygonError("triangulation must be a JSON object")
    for field in ("n", "diagonals"):
        if field not in data:
            raise PolygonError(f"missing field {field!r}")
    n = data["n"]
    check_rank(n)
    raw = data["diagonals"]
    if not isinstance(raw, list):
        raise PolygonError("'diagonals' must be a list")
    size = n + 3
    diagonals = []
    for pos, pair in enumerate(raw, start=1):
        if (not isinstance(pair, list) or len(pair) != 2
                or not all(isinstance(v, int) and not isinstance(v, bool) for v in pair)):
            raise PolygonError(f"diagonal #{pos}: expected a pair of integers, got {pair!r}")
        a, b = pair
        if not (0 <= a < b < size):
            raise PolygonError(f"diagonal #{pos}: {pair} is not a canonical pair a < b in 0..{size - 1}")
        if not is_diagonal(n, a, b):
            raise PolygonError(f"diagonal #{pos}: {pair} is a border edge")
        diagonals.append(Diagonal(n, a, b))
    return Triangulation(n, tuple(diagonals))


def support(T: Triangulation, d: Diagonal) -> frozenset[int]:
    """Positions of the diagonals of ``T`` crossed by ``d``."""
    return frozenset(k for k, e in enumerate(T.diagonals, start=1) if crosses(e, d))


def flip(T: Triangulation, k: int) -> tuple[Triangulation, Diagonal]:
    """Replace the diagonal at position ``k`` by the other diagonal of its quadrilateral."""
    old = T[k]
    apexes = [next(v for v in tri if not old.has_endpoint(v))
              for tri in T.triangles if old.a in tri and old.b in tri]
    assert len(apexes) == 2, f"{old} does not bound two triangles"
    new = Diagonal.of(T.n, *apexes)
    return T.replace(k, new), new


def snake(n: int) -> Triangulation:
    """Zigzag triangulation whose quiver is the alternating A_n path."""
    check_rank(n)
    size = n + 3
    return Triangulation.from_pairs(
        n, [((k + 1) // 2 + 1, (size - k // 2) % size) for k in range(1, n + 1)])


def fan(n: int, apex: int = 0) -> Triangulation:
    """All diagonals at ``apex``, ordered counterclockwise."""
    check_rank(n)
    return Triangulation.from_pairs(n, [(apex, apex + k + 1) for k in range(1, n + 1)])


def mirror(d: Diagonal) -> Diagonal:
    """Reflection ``v -> -v`` of the polygon (reverses orientation)."""
    return Diagonal.of(d.n, -d.a, -d.b)


def triangle_less(T: Triangulation, i: int, j: int) -> bool:
    """Order on two diagonals of a common triangle: ``-alpha_i < -alpha_j``.

    For a triangle ``x, y, z`` in counterclockwise order with ``(x,y)`` and
    ``(x,z)`` diagonals, ``(x,y) < (x,z)``.
    """
    di, dj = T[i], T[j]
    shared = set(di.endpoints) & set(dj.endpoints)
    if i == j or len(shared) != 1:
        raise PolygonError(f"{di} and {dj} do not share exactly one vertex")
    x = shared.pop()
    y, z = di.other(x), dj.other(x)
    if tuple(sorted((x, y, z))) not in T.triangles:
        raise PolygonError(f"{di} and {dj} do not bound a common triangle")
    size = T.n + 3
    return (y - x) % size < (z - x) % size


@dataclass(frozen=True)
class DualTree:
    """Triangles of a triangulation joined across shared diagonals.

    ``edges`` holds ``(t, u, k)``: node indices ``t < u`` glued along position ``k``.
    """

    nodes: tuple[Triangle, ...]
    edges: tuple[tuple[int, int, int], ...]

    def valence(self, t: int) -> int:
        return sum(t in (a, b) for a, b, _ in self.edges)

    def leaf_edges(self) -> list[tuple[int, int, int]]:
        return [e for e in self.edges if self.valence(e[0]) == 1 or self.valence(e[1]) == 1]


def dual_tree(T: Triangulation) -> DualTree:
    nodes = T.triangles
    edges = []
    for k, d in enumerate(T.diagonals, start=1):
        ends = [t for t, tri in enumerate(nodes) if d.a in tri and d.b in tri]
        edges.append((ends[0], ends[1], k))
    return DualTree(nodes, tuple(edges))


def cut_off_vertex(T: Triangulation, k: int) -> int | None:
    """Vertex of the ear cut off by position ``k``, if that diagonal bounds an ear."""
    d = T[k]
    size = T.n + 3
    for tri in T.triangles:
        if d.a in tri and d.b in tri:
            x = next(v for v in tri if not d.has_endpoint(v))
            if {(x - 1) % size, (x + 1) % size} == set(d.endpoints):
                return x
    return None


@lru_cache(maxsize=None)
def _interval_triangulations(lo: int, hi: int) -> tuple[frozenset[tuple[int, int]], ...]:
    # triangulations of the convex polygon on consecutive vertices lo..hi
    if hi - lo < 2:
        return (frozenset(),)
    found = []
    for apex in range(lo + 1, hi):
        extra = set()
        if apex - lo >= 2:
            extra.add((lo, apex))
        if hi - apex >= 2:
            extra.add((apex, hi))
        for left in _interval_triangulations(lo, apex):
            for right in _interval_triangulations(apex, hi):
                found.append(frozenset(extra | left | right))
    return tuple(found)


@lru_cache(maxsize=None)
def enumerate_triangulations(n: int) -> tuple[Triangulation, ...]:
    """Every triangulation exactly once, diagonals sorted, list sorted."""
    check_rank(n)
    pair_sets = sorted(sorted(s) for s in _interval_triangulations(0, n + 2))
    return tuple(Triangulation.from_pairs(n, pairs) for pairs in pair_sets)
