"""Seeds of the type A cluster algebra, indexed by triangulations."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterator

from ..polygon import Diagonal, Triangulation, crosses, flip, snake, support
from ..quiver import ExchangeMatrix, b_matrix, mutate_matrix, quiver_from_triangulation
from .laurent import LaurentPolynomial


class StuckFlipError(RuntimeError):
    """No flip reduced the crossing count; indicates a bug, not a counterexample."""


@dataclass(frozen=True)
class Seed:
    """Cluster ``variables[k-1]`` sits on ``triangulation[k]``."""

    triangulation: Triangulation
    matrix: ExchangeMatrix
    variables: tuple[LaurentPolynomial, ...]

    @property
    def n(self) -> int:
        return self.triangulation.n

    def variable(self, d: Diagonal) -> LaurentPolynomial:
        return self.variables[self.triangulation.index(d) - 1]

    def items(self) -> Iterator[tuple[Diagonal, LaurentPolynomial]]:
        return zip(self.triangulation.diagonals, self.variables)


def initial_seed(n: int, T: Triangulation | None = None) -> Seed:
    """Seed on ``T`` (default: the snake) with the coordinate variables ``u_1..u_n``."""
    T = snake(n) if T is None else T
    variables = tuple(LaurentPolynomial.variable(T.n, i) for i in range(1, T.n + 1))
    return Seed(T, b_matrix(quiver_from_triangulation(T)), variables)


def exchange_binomial(seed: Seed, k: int) -> LaurentPolynomial:
    """``M_1 + M_2`` read from column ``k`` of the exchange matrix."""
    n = seed.n
    m1 = LaurentPolynomial.constant(n, 1)
    m2 = LaurentPolynomial.constant(n, 1)
    for i, b in enumerate(seed.matrix.column(k)):
        if b > 0:
            m1 = m1 * seed.variables[i] ** b
        elif b < 0:
            m2 = m2 * seed.variables[i] ** -b
    return m1 + m2


def mutate_seed(seed: Seed, k: int) -> Seed:
    """Exchange at position ``k``; the division must be exact (Laurent phenomenon)."""
    new_var = exchange_binomial(seed, k).exact_div(seed.variables[k - 1])
    T, _ = flip(seed.triangulation, k)
    variables = seed.variables[:k - 1] + (new_var,) + seed.variables[k:]
    return Seed(T, mutate_matrix(seed.matrix, k), variables)


FlipStrategy = Callable[[list[int]], int]


def first_flip(candidates: list[int]) -> int:
    return candidates[0]


def last_flip(candidates: list[int]) -> int:
    return candidates[-1]


STRATEGIES: dict[str, FlipStrategy] = {"first": first_flip, "last": last_flip}


def flip_path(seed: Seed, d: Diagonal, strategy: FlipStrategy = first_flip) -> Iterator[Seed]:
    """Seeds met while flipping crossed diagonals until ``d`` is in the triangulation."""
    while d not in seed.triangulation:
        T = seed.triangulation
        crossed = sorted(support(T, d))
        good = [k for k in crossed if not crosses(flip(T, k)[1], d)]
        if not good:
            raise StuckFlipError(f"no flip of {T} reduces the crossings with {d}")
        seed = mutate_seed(seed, strategy(good))
        yield seed


def cluster_variable(seed: Seed, d: Diagonal, strategy: FlipStrategy | str = "first") -> LaurentPolynomial:
    """Variable of ``d`` in the coordinates carried by ``seed``."""
    if isinstance(strategy, str):
        strategy = STRATEGIES[strategy]
    for seed in flip_path(seed, d, strategy):
        pass
    return seed.variable(d)


def denominator_vector(w: LaurentPolynomial) -> tuple[int, ...]:
    return w.denominator


def exponent_vector(w: LaurentPolynomial) -> tuple[int, ...]:
    """Unclamped exponents ``-min``; a coordinate variable ``u_i`` gives ``-1`` at ``i``."""
    return tuple(-m for m in w.min_exponents())


def enumerate_seeds(n: int, T: Triangulation | None = None) -> list[Seed]:
    """Breadth-first closure under mutation, one seed per triangulation."""
    start = initial_seed(n, T)
    seen = {start.triangulation.key: start}
    todo = deque([start])
    while todo:
        seed = todo.popleft()
        for k in range(1, n + 1):
            nxt = mutate_seed(seed, k)
            if nxt.triangulation.key not in seen:
                seen[nxt.triangulation.key] = nxt
                todo.append(nxt)
    return list(seen.values())


def random_walk(seed: Seed, length: int, rng: random.Random) -> tuple[Seed, list[int]]:
    """Mutate ``length`` times at random, never repeating the previous index."""
    steps = []
    for _ in range(length):
        choices = [k for k in range(1, seed.n + 1) if not steps or k != steps[-1]] or [1]
        k = rng.choice(choices)
        seed = mutate_seed(seed, k)
        steps.append(k)
    return seed, steps
