"""The category of diagonals of a triangulation and the total (orbit) category.

Hom spaces are at most one-dimensional in both, so every Hom here is an
integer dimension in {0, 1}.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .polygon import Diagonal, PolygonError, Triangulation, all_diagonals, check_rank, is_diagonal, support
from .quiver import quiver_from_triangulation
from .repcat import hom_dim_modules, theta


@dataclass(frozen=True)
class RelativePositionWitness:
    """Vertex pattern ``v1 < u1 <= u1' < v2 < u2 <= u2'`` read ccw from ``v1``."""

    i: int
    v1: int
    u1: int
    u1p: int
    v2: int
    u2: int
    u2p: int

    @property
    def orderings(self) -> tuple[int, ...]:
        return (self.v1, self.u1, self.u1p, self.v2, self.u2, self.u2p)


def _split(d: Diagonal, v1: int, v2: int, size: int) -> tuple[int, int] | None:
    # endpoints of d on the open arcs (v1, v2) and (v2, v1)
    p2 = (v2 - v1) % size
    first = [u for u in d.endpoints if 0 < (u - v1) % size < p2]
    second = [u for u in d.endpoints if (u - v1) % size > p2]
    if len(first) != 1 or len(second) != 1:
        return None
    return first[0], second[0]


def relative_position_witness(T: Triangulation, alpha: Diagonal,
                              alpha_p: Diagonal) -> RelativePositionWitness | None:
    size = T.n + 3
    for i in sorted(support(T, alpha) & support(T, alpha_p)):
        neg = T[i]
        for v1, v2 in ((neg.a, neg.b), (neg.b, neg.a)):
            s, s_p = _split(alpha, v1, v2, size), _split(alpha_p, v1, v2, size)
            if s is None or s_p is None:
                continue
            pos = lambda v: (v - v1) % size  # noqa: E731
            (u1, u2), (w1, w2) = s, s_p
            if pos(u1) <= pos(w1) and pos(u2) <= pos(w2):
                return RelativePositionWitness(i, v1, u1, w1, v2, u2, w2)
    return None


def hom_dim_diagonals(T: Triangulation, alpha: Diagonal, alpha_p: Diagonal) -> int:
    """Geometric Hom criterion: a diagonal of ``T`` in the witness position."""
    return int(relative_position_witness(T, alpha, alpha_p) is not None)


def mesh_normal_form_oracle(T: Triangulation, alpha: Diagonal, alpha_p: Diagonal) -> int:
    """Hom via two-segment pivoting paths.

    A path first pivots at one endpoint ``p`` of ``alpha`` (advancing ``q``
    to ``x``), then at ``x`` (advancing ``p`` to ``y``).  Mesh relations
    identify it with every monotone path through the lattice rectangle
    ``(p..y) x (q..x)``; it survives iff every diagonal in that rectangle is
    positive.
    """
    n = T.n
    size = n + 3
    if alpha in T or alpha_p in T:
        return 0
    for (p, q), (y, x) in product((alpha.endpoints, alpha.endpoints[::-1]),
                                  (alpha_p.endpoints, alpha_p.endpoints[::-1])):
        steps_p, steps_q = (y - p) % size, (x - q) % size
        if all(is_diagonal(n, p + s, q + t) and Diagonal.of(n, p + s, q + t) not in T
               for s in range(steps_p + 1) for t in range(steps_q + 1)):
            return 1
    return 0


@dataclass
class HomCheckReport:
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def theta_hom_check(T: Triangulation, stop_at_first: bool = True) -> HomCheckReport:
    """Compare the geometric and module Hom criteria on all ordered positive pairs."""
    Q = quiver_from_triangulation(T)
    positives = [d for d in all_diagonals(T.n) if d not in T]
    modules = {d: theta(T, d) for d in positives}
    report = HomCheckReport()
    for a, b in product(positives, repeat=2):
        report.checked += 1
        geo = hom_dim_diagonals(T, a, b)
        alg = hom_dim_modules(Q, modules[a], modules[b])
        if geo != alg:
            report.failures.append({"from": [a.a, a.b], "to": [b.a, b.b], "geometric": geo, "module": alg})
            if stop_at_first:
                break
    return report


@dataclass(frozen=True, order=True)
class OrbitIndex:
    """Class of ``(i, j)`` in Z x {1..n} modulo ``(i, j) ~ (i+j+1, n-j+1)``.

    Stored as the member with the least nonnegative ``i``.
    """

    n: int
    i: int
    j: int

    def __post_init__(self) -> None:
        check_rank(self.n)
        if not 1 <= self.j <= self.n:
            raise PolygonError(f"orbit coordinate j={self.j} outside 1..{self.n}")
        if (self.i, self.j) != _canonical(self.n, self.i, self.j):
            raise PolygonError(f"({self.i},{self.j}) is not the canonical representative")

    @classmethod
    def of(cls, n: int, i: int, j: int) -> OrbitIndex:
        check_rank(n)
        if not 1 <= j <= n:
            raise PolygonError(f"orbit coordinate j={j} outside 1..{n}")
        return cls(n, *_canonical(n, i, j))

    def members(self, lo: int, hi: int) -> list[tuple[int, int]]:
        """Class members ``(x, y)`` with ``lo <= x <= hi``."""
        size = self.n + 3
        seeds = [(self.i, self.j), (self.i + self.j + 1, self.n - self.j + 1)]
        out = []
        for x0, y in seeds:
            x = x0 + ((lo - x0) // size) * size
            while x <= hi:
                if x >= lo:
                    out.append((x, y))
                x += size
        return sorted(out)


def _canonical(n: int, i: int, j: int) -> tuple[int, int]:
    size = n + 3
    return min((i % size, j), ((i + j + 1) % size, n - j + 1))


def kappa(n: int, i: int, j: int) -> OrbitIndex:
    """Index of the diagonal ``[i, j]`` given by integer representatives with ``2 <= j - i <= n+1``."""
    check_rank(n)
    if not 2 <= j - i <= n + 1:
        raise PolygonError(f"[{i},{j}] needs representatives with 2 <= j - i <= {n + 1}")
    return OrbitIndex.of(n, i, j - i - 1)


def kappa_of_diagonal(d: Diagonal, reverse: bool = False) -> OrbitIndex:
    """Orbit index of ``d``; ``reverse`` reads it as ``[b, a + n + 3]``."""
    if reverse:
        return kappa(d.n, d.b, d.a + d.size)
    return kappa(d.n, d.a, d.b)


def diagonal_of_kappa(idx: OrbitIndex) -> Diagonal:
    return Diagonal.of(idx.n, idx.i, idx.i + idx.j + 1)


def shift(idx: OrbitIndex) -> OrbitIndex:
    return OrbitIndex.of(idx.n, idx.i + idx.j, idx.n + 1 - idx.j)


def hammock_contains(n: int, source: tuple[int, int], point: tuple[int, int]) -> bool:
    """Lattice point ``point`` lies in the closed quadrilateral spanned by
    ``(i,j), (i,n), (i+j-1,1), (i+j-1,n-j+1)`` for ``source = (i, j)``."""
    i, j = source
    x, y = point
    s = x - i
    t = y - j + s
    return 0 <= s <= j - 1 and 0 <= t <= n - j


def orbit_hom_dim(M: OrbitIndex, N: OrbitIndex) -> int:
    if M.n != N.n:
        raise PolygonError("orbit indices of different ranks")
    return int(any(hammock_contains(M.n, (M.i, M.j), pt) for pt in N.members(M.i, M.i + M.j - 1)))


def ext1(d: Diagonal, d_p: Diagonal) -> int:
    """Ext^1(d, d') = Hom(d, d'[1]) in the total category."""
    return orbit_hom_dim(kappa_of_diagonal(d), shift(kappa_of_diagonal(d_p)))


def hom_ext_table(n: int) -> dict:
    """All ordered diagonal pairs with their total-category Hom and Ext^1."""
    diags = all_diagonals(n)
    idx = {d: kappa_of_diagonal(d) for d in diags}
    pairs = []
    for a, b in product(diags, repeat=2):
        pairs.append({"from": [a.a, a.b], "to": [b.a, b.b],
                      "hom": orbit_hom_dim(idx[a], idx[b]), "ext1": ext1(a, b)})
    return {"pairs": pairs}
