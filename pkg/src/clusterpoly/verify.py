"""Exhaustive and randomized verification suites.

Each suite returns a :class:`Report`; a report with no failures means every
checked claim held.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from itertools import product
from typing import Callable

from .cluster.laurent import NotExactError
from .cluster.roots import (almost_positive_roots, compatibility_degree, diagonal_of_root,
                            root_of_diagonal, steps_to_negative_simple, tau)
from .cluster.seeds import cluster_variable, exponent_vector, initial_seed, random_walk
from .diagcat import (ext1, hammock_contains, hom_dim_diagonals, kappa_of_diagonal,
                      mesh_normal_form_oracle, theta_hom_check)
from .polygon import (Diagonal, PolygonError, Triangulation, all_diagonals, crosses,
                      enumerate_triangulations, fan, flip, rotate, snake, support)
from .quiver import b_matrix, mutate_matrix, mutate_quiver, quiver_from_triangulation
from .repcat import (ar_quiver, enumerate_indecomposables, hom_dim_modules, injective, is_type_a,
                     mesh_additivity_failures, projective, theta)


@dataclass
class Report:
    suite: str
    n: int
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def claim(self, holds: bool, **detail) -> None:
        self.checked += 1
        if not holds:
            self.failures.append(detail)

    def to_json(self) -> dict:
        return {"suite": self.suite, "n": self.n, "checked": self.checked, "failures": self.failures}


def _pair(d: Diagonal) -> list[int]:
    return [d.a, d.b]


def crossing_vector(T: Triangulation, d: Diagonal) -> tuple[int, ...]:
    return tuple(int(crosses(e, d)) for e in T.diagonals)


def verify_denominator_theorem(n: int) -> Report:
    """Denominator of ``w_alpha`` in every cluster = crossing vector = dimension vector."""
    report = Report("denominators", n)
    for T in enumerate_triangulations(n):
        seed = initial_seed(n, T)
        for d in all_diagonals(n):
            if d in T:
                continue
            w = cluster_variable(seed, d)
            den = w.denominator
            dim = theta(T, d).dimension_vector(n)
            divisible = [i for i in range(1, n + 1) if w.divisible_by_variable(i)]
            report.claim(den == crossing_vector(T, d) == dim and not divisible,
                         cluster=[_pair(e) for e in T.diagonals], diagonal=_pair(d),
                         denominator=list(den), dimension_vector=list(dim), divisible_by=divisible)
    return report


def _exponent_table(n: int, triangulations) -> dict[tuple, tuple[int, ...]]:
    # (triangulation key, alpha) -> exponent vector of w_alpha in that cluster
    table = {}
    for T in triangulations:
        seed = initial_seed(n, T)
        for d in all_diagonals(n):
            w = seed.variable(d) if d in T else cluster_variable(seed, d)
            table[(T.key, d)] = exponent_vector(w)
    return table


def _flip_connected(triangulations: list[Triangulation], fixed: Diagonal) -> bool:
    keys = {T.key: T for T in triangulations}
    if not keys:
        return True
    start = triangulations[0]
    seen = {start.key}
    todo = deque([start])
    while todo:
        T = todo.popleft()
        for k in range(1, T.n + 1):
            if T[k] == fixed:
                continue
            U, _ = flip(T, k)
            if U.key in keys and U.key not in seen:
                seen.add(U.key)
                todo.append(U)
    return len(seen) == len(keys)


def verify_lemma_suite(n: int, sample: int | None = None, seed: int = 0) -> Report:
    """Exponent constancy, tau-invariance, snake multiplicities, compatibility,
    fixed-diagonal flip connectivity, and tau on clusters.

    ``sample`` restricts the exponent checks to that many random clusters
    plus the snake.
    """
    report = Report("lemmas", n)
    every = enumerate_triangulations(n)
    clusters = list(every)
    if sample is not None and sample < len(clusters):
        clusters = random.Random(seed).sample(clusters, sample)
        if snake(n).key not in {T.key for T in clusters}:
            clusters.append(snake(n))
    table = _exponent_table(n, clusters)
    diags = all_diagonals(n)

    # (a) [alpha, beta, C] does not depend on the cluster C containing beta
    exponent: dict[tuple[Diagonal, Diagonal], int] = {}
    for T in clusters:
        for alpha, beta in product(diags, T.diagonals):
            value = table[(T.key, alpha)][T.index(beta) - 1]
            known = exponent.setdefault((alpha, beta), value)
            report.claim(value == known, check="a", alpha=_pair(alpha), beta=_pair(beta),
                         cluster=[_pair(e) for e in T.diagonals], value=value, expected=known)

    roots = {d: root_of_diagonal(d) for d in diags}

    # (b) tau-invariance, where both sides were observed
    for sign in (1, -1):
        image = {d: diagonal_of_root(tau(sign, roots[d])) for d in diags}
        for (alpha, beta), value in exponent.items():
            other = exponent.get((image[alpha], image[beta]))
            if other is not None:
                report.claim(value == other, check="b", sign=sign, alpha=_pair(alpha),
                             beta=_pair(beta), value=value, image=other)

    # (c) exponents in the snake cluster are root multiplicities
    S = snake(n)
    for alpha in diags:
        for k in range(1, n + 1):
            value = exponent[(alpha, S[k])]
            report.claim(value == roots[alpha].multiplicity(k), check="c", alpha=_pair(alpha),
                         position=k, value=value)

    # (d) exponents equal the compatibility degree
    for (alpha, beta), value in exponent.items():
        if alpha != beta:
            degree = compatibility_degree(roots[alpha], roots[beta])
            report.claim(value == degree, check="d", alpha=_pair(alpha), beta=_pair(beta),
                         value=value, compatibility=degree)

    # (e) triangulations containing a fixed diagonal are flip-connected
    for d in diags:
        members = [T for T in every if d in T]
        report.claim(_flip_connected(members, d), check="e", diagonal=_pair(d))

    # (f) tau_+ and tau_- send clusters to clusters
    for T, sign in product(every, (1, -1)):
        images = [diagonal_of_root(tau(sign, roots[d])) for d in T.diagonals]
        try:
            Triangulation(n, tuple(images))
            holds = True
        except PolygonError:
            holds = False
        report.claim(holds, check="f", sign=sign, cluster=[_pair(e) for e in T.diagonals],
                     image=[_pair(e) for e in images])
    return report


def verify_homs(n: int, mesh_up_to: int = 5) -> Report:
    """Geometric vs module Hom on all pairs; vs the mesh oracle for small ranks."""
    report = Report("homs", n)
    for T in enumerate_triangulations(n):
        result = theta_hom_check(T, stop_at_first=False)
        report.checked += result.checked
        for f in result.failures:
            report.failures.append({"check": "module", "cluster": [_pair(e) for e in T.diagonals], **f})
        if n > mesh_up_to:
            continue
        positives = [d for d in all_diagonals(n) if d not in T]
        for a, b in product(positives, repeat=2):
            geo, mesh = hom_dim_diagonals(T, a, b), mesh_normal_form_oracle(T, a, b)
            report.claim(geo == mesh, check="mesh", cluster=[_pair(e) for e in T.diagonals],
                         **{"from": _pair(a), "to": _pair(b)}, geometric=geo, mesh=mesh)
    return report


def verify_ar(n: int) -> Report:
    """Projectives, injectives, mesh additivity, and the indecomposable count."""
    report = Report("ar", n)
    for T in enumerate_triangulations(n):
        Q = quiver_from_triangulation(T)
        where = [_pair(e) for e in T.diagonals]
        for i in range(1, n + 1):
            report.claim(theta(T, rotate(T[i], 1)) == projective(Q, i), check="projective",
                         cluster=where, vertex=i)
            report.claim(theta(T, rotate(T[i], -1)) == injective(Q, i), check="injective",
                         cluster=where, vertex=i)
        ar = ar_quiver(T)
        report.claim(sorted(ar.projectives()) == sorted(rotate(d, 1) for d in T.diagonals),
                     check="ar-projectives", cluster=where)
        report.claim(sorted(ar.injectives()) == sorted(rotate(d, -1) for d in T.diagonals),
                     check="ar-injectives", cluster=where)
        for f in mesh_additivity_failures(T):
            report.failures.append({"check": "mesh-additivity", "cluster": where, **f})
        report.checked += len(ar.vertices)
        count = len(enumerate_indecomposables(Q))
        report.claim(count == n * (n + 1) // 2, check="count", cluster=where, count=count)
    return report


def verify_orbit(n: int, fan_up_to: int = 5) -> Report:
    """Ext^1 against crossing, and orbit Hom against module Hom on fan indices."""
    report = Report("orbit", n)
    diags = all_diagonals(n)
    for d in diags:
        report.claim(kappa_of_diagonal(d) == kappa_of_diagonal(d, reverse=True), check="kappa",
                     diagonal=_pair(d))
    for a, b in product(diags, repeat=2):
        value = ext1(a, b)
        report.claim(value == int(crosses(a, b)), check="ext1",
                     **{"from": _pair(a), "to": _pair(b)}, ext1=value)
    if n <= fan_up_to:
        T = fan(n)
        Q = quiver_from_triangulation(T)
        positives = [d for d in diags if d not in T]
        for a, b in product(positives, repeat=2):
            ka, kb = kappa_of_diagonal(a), kappa_of_diagonal(b)
            orbit = int(hammock_contains(n, (ka.i, ka.j), (kb.i, kb.j)))
            module = hom_dim_modules(Q, theta(T, a), theta(T, b))
            report.claim(orbit == module, check="fan-hom", **{"from": _pair(a), "to": _pair(b)},
                         orbit=orbit, module=module)
    return report


def verify_mutation(n: int) -> Report:
    """Flip commutes with quiver mutation, and quiver mutation with matrix mutation."""
    report = Report("mutation", n)
    for T in enumerate_triangulations(n):
        Q = quiver_from_triangulation(T)
        for k in range(1, n + 1):
            U, _ = flip(T, k)
            mutated = mutate_quiver(Q, k)
            expected = quiver_from_triangulation(U)
            where = {"cluster": [_pair(e) for e in T.diagonals], "k": k}
            report.claim(mutated.arrows == expected.arrows, check="arrows", **where)
            report.claim(mutated.relations == expected.relations, check="relations", **where)
            report.claim(b_matrix(mutated) == mutate_matrix(b_matrix(Q), k), check="matrix", **where)
    return report


def verify_laurent(n: int, walks: int = 100, length: int = 50, seed: int = 0) -> Report:
    """Random mutation walks; every exchange must divide exactly."""
    report = Report("laurent", n)
    rng = random.Random(seed)
    for w in range(walks):
        try:
            random_walk(initial_seed(n), length, rng)
            report.claim(True)
        except NotExactError as exc:
            report.claim(False, walk=w, error=str(exc))
    return report


def verify_roots(n: int) -> Report:
    """tau involutions and orbits, plus the compatibility degree against crossing."""
    report = Report("roots", n)
    roots = almost_positive_roots(n)
    for r in roots:
        report.claim(root_of_diagonal(diagonal_of_root(r)) == r, check="round-trip", root=str(r))
        for sign in (1, -1):
            report.claim(tau(sign, tau(sign, r)) == r, check="involution", root=str(r), sign=sign)
        steps = steps_to_negative_simple(r)
        report.claim(steps is not None and steps <= 2 * (n + 3), check="orbit", root=str(r))
    for a, b in product(roots, repeat=2):
        c = compatibility_degree(a, b)
        where = {"alpha": str(a), "beta": str(b)}
        report.claim(c == compatibility_degree(b, a), check="symmetric", **where)
        report.claim(c == int(crosses(diagonal_of_root(a), diagonal_of_root(b))), check="crossing", **where)
        for sign in (1, -1):
            report.claim(c == compatibility_degree(tau(sign, a), tau(sign, b)), check="tau-invariant",
                         sign=sign, **where)
    return report


def _support_connected(Q, vertices: frozenset[int]) -> bool:
    start = next(iter(vertices))
    seen, todo = {start}, [start]
    while todo:
        v = todo.pop()
        for w in Q.neighbors(v):
            if w in vertices and w not in seen:
                seen.add(w)
                todo.append(w)
    return len(seen) == len(vertices)


def verify_structure(n: int) -> Report:
    """Supports induce paths; pairwise support intersections are connected."""
    report = Report("structure", n)
    for T in enumerate_triangulations(n):
        Q = quiver_from_triangulation(T)
        positives = [d for d in all_diagonals(n) if d not in T]
        supports = {d: support(T, d) for d in positives}
        where = [_pair(e) for e in T.diagonals]
        for d in positives:
            report.claim(is_type_a(Q, supports[d]), check="support", cluster=where, diagonal=_pair(d))
        for a, b in product(positives, repeat=2):
            common = supports[a] & supports[b]
            if common:
                report.claim(_support_connected(Q, common), check="intersection", cluster=where,
                             **{"from": _pair(a), "to": _pair(b)})
    return report


SUITES: dict[str, Callable[..., Report]] = {
    "denominators": verify_denominator_theorem,
    "homs": verify_homs,
    "ar": verify_ar,
    "orbit": verify_orbit,
    "lemmas": verify_lemma_suite,
    "laurent": verify_laurent,
    "mutation": verify_mutation,
    "roots": verify_roots,
    "structure": verify_structure,
}
