"""Almost positive roots of A_n, the bipartite involutions tau_+/tau_-,
and the compatibility degree."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from ..polygon import Diagonal, all_diagonals, check_rank, snake, support


@dataclass(frozen=True, order=True)
class Root:
    """An almost positive root: ``-alpha_i`` or a 0/1 interval vector."""

    vector: tuple[int, ...]

    def __post_init__(self) -> None:
        v = tuple(int(x) for x in self.vector)
        object.__setattr__(self, "vector", v)
        if not v:
            raise ValueError("empty root vector")
        if any(x < 0 for x in v):
            if sorted(v) != [-1] + [0] * (len(v) - 1):
                raise ValueError(f"{v} is neither a negative simple root nor positive")
            return
        ones = [i for i, x in enumerate(v) if x]
        if not ones or any(x not in (0, 1) for x in v) or ones != list(range(ones[0], ones[-1] + 1)):
            raise ValueError(f"{v} is not a positive root of A_{len(v)}")

    @classmethod
    def negative_simple(cls, n: int, i: int) -> Root:
        v = [0] * n
        v[i - 1] = -1
        return cls(tuple(v))

    @classmethod
    def interval(cls, n: int, a: int, b: int) -> Root:
        """``alpha_a + ... + alpha_b`` (1-based, inclusive)."""
        return cls(tuple(int(a <= i <= b) for i in range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.vector)

    @property
    def is_negative_simple(self) -> bool:
        return any(x < 0 for x in self.vector)

    @property
    def simple_index(self) -> int:
        """``i`` for ``-alpha_i``."""
        return self.vector.index(-1) + 1

    def multiplicity(self, i: int) -> int:
        return self.vector[i - 1]

    def __str__(self) -> str:
        if self.is_negative_simple:
            return f"-a{self.simple_index}"
        return "+".join(f"a{i + 1}" for i, x in enumerate(self.vector) if x)


def cartan_matrix(n: int) -> list[list[int]]:
    check_rank(n)
    return [[2 if i == j else -1 if abs(i - j) == 1 else 0 for j in range(n)] for i in range(n)]


def reflect(vector: Sequence[int], i: int) -> tuple[int, ...]:
    """Simple reflection ``s_i(b) = b - <b, alpha_i^vee> alpha_i`` in A_n."""
    n = len(vector)
    c = cartan_matrix(n)
    pairing = sum(vector[j] * c[j][i - 1] for j in range(n))
    out = list(vector)
    out[i - 1] -= pairing
    return tuple(out)


def bipartition(n: int, plus_odd: bool = True) -> tuple[frozenset[int], frozenset[int]]:
    """``(I_plus, I_minus)``; odd indices go to ``I_plus`` by default."""
    odd = frozenset(range(1, n + 1, 2))
    even = frozenset(range(2, n + 1, 2))
    return (odd, even) if plus_odd else (even, odd)


def tau(sign: int, r: Root, plus_odd: bool = True) -> Root:
    """``tau_+`` (``sign=+1``) or ``tau_-`` (``sign=-1``) on almost positive roots."""
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign!r}")
    plus, minus = bipartition(r.n, plus_odd)
    own, other = (plus, minus) if sign == 1 else (minus, plus)
    if r.is_negative_simple and r.simple_index in other:
        return r
    v = r.vector
    for i in sorted(own):
        v = reflect(v, i)
    return Root(v)


@lru_cache(maxsize=None)
def _root_tables(n: int) -> tuple[dict[Diagonal, Root], dict[Root, Diagonal]]:
    T0 = snake(n)
    forward = {}
    for d in all_diagonals(n):
        if d in T0:
            forward[d] = Root.negative_simple(n, T0.index(d))
        else:
            s = support(T0, d)
            forward[d] = Root(tuple(int(i in s) for i in range(1, n + 1)))
    backward = {r: d for d, r in forward.items()}
    assert len(backward) == len(forward)
    return forward, backward


def root_of_diagonal(d: Diagonal) -> Root:
    """Snake diagonals are negative simples; others have their snake support as root."""
    return _root_tables(d.n)[0][d]


def diagonal_of_root(r: Root) -> Diagonal:
    return _root_tables(r.n)[1][r]


def almost_positive_roots(n: int) -> list[Root]:
    return sorted(_root_tables(n)[1])


def compatibility_degree(alpha: Root, beta: Root, plus_odd: bool = True) -> int:
    """Transport ``alpha`` to a negative simple by alternating tau_+/tau_-, then read ``beta``."""
    n = alpha.n
    a, b = alpha, beta
    for step in range(2 * (n + 3) + 1):
        if a.is_negative_simple:
            return max(b.multiplicity(a.simple_index), 0)
        sign = 1 if step % 2 == 0 else -1
        a, b = tau(sign, a, plus_odd), tau(sign, b, plus_odd)
    raise RuntimeError(f"no negative simple root reached from {alpha} within {2 * (n + 3)} steps")


def steps_to_negative_simple(r: Root, plus_odd: bool = True) -> int | None:
    """Fewest alternating tau steps to a negative simple over both starting signs; None past the cap."""
    best = None
    for first in (1, -1):
        a = r
        for step in range(2 * (r.n + 3) + 1):
            if a.is_negative_simple:
                best = step if best is None else min(best, step)
                break
            a = tau(first if step % 2 == 0 else -first, a, plus_odd)
    return best
