from itertools import combinations, product

import pytest
from hypothesis import given, strategies as st
from shapely.geometry import MultiPoint, Point

from clusterpoly.diagcat import (OrbitIndex, ext1, hammock_contains, hom_dim_diagonals, hom_ext_table,
                                 kappa, kappa_of_diagonal, diagonal_of_kappa, mesh_normal_form_oracle,
                                 orbit_hom_dim, relative_position_witness, shift, theta_hom_check)
from clusterpoly.polygon import (Diagonal, PolygonError, Triangulation, all_diagonals, crosses,
                                 enumerate_triangulations, fan, mirror, snake)
from clusterpoly.quiver import quiver_from_triangulation
from clusterpoly.repcat import hom_dim_modules, projective, theta

T0 = snake(2)


def D(n, a, b):
    return Diagonal.of(n, a, b)


class TestGeometricHom:
    def test_examples(self):
        assert hom_dim_diagonals(T0, D(2, 1, 3), D(2, 1, 4)) == 1
        w = relative_position_witness(T0, D(2, 1, 3), D(2, 1, 4))
        assert w.i == 1 and w.orderings == (0, 1, 1, 2, 3, 4)
        assert hom_dim_diagonals(T0, D(2, 1, 4), D(2, 1, 3)) == 0

    @pytest.mark.parametrize("n", range(1, 6))
    def test_identity_and_disjoint_supports(self, n):
        for T in enumerate_triangulations(n):
            outside = [d for d in all_diagonals(n) if d not in T]
            for d in outside:
                assert hom_dim_diagonals(T, d, d) == 1
            for a, b in product(outside, repeat=2):
                w = relative_position_witness(T, a, b)
                if w is not None:
                    v1, u1, u1p, v2, u2, u2p = ((x - w.v1) % (n + 3) for x in w.orderings)
                    assert v1 < u1 <= u1p < v2 < u2 <= u2p
                if not any(crosses(e, a) and crosses(e, b) for e in T.diagonals):
                    assert hom_dim_diagonals(T, a, b) == 0

    def test_pentagon_table(self):
        report = theta_hom_check(T0, stop_at_first=False)
        assert report.ok and report.checked == 9

    @pytest.mark.parametrize("n", range(1, 6))
    def test_module_criterion(self, n):
        for T in enumerate_triangulations(n):
            assert theta_hom_check(T).ok


class TestMeshOracle:
    def test_examples(self):
        assert mesh_normal_form_oracle(T0, D(2, 1, 3), D(2, 2, 4)) == 0
        assert mesh_normal_form_oracle(T0, D(2, 1, 3), D(2, 1, 3)) == 1

    def test_intermediate_points_are_not_enough(self):
        T = Triangulation.from_pairs(5, [(1, 5), (1, 3), (3, 5), (5, 7), (1, 7)])
        a, b = D(5, 0, 4), D(5, 2, 6)
        assert hom_dim_diagonals(T, a, b) == mesh_normal_form_oracle(T, a, b) == 0

    @pytest.mark.parametrize("n", range(1, 5))
    def test_agrees_with_geometric_criterion(self, n):
        for T in enumerate_triangulations(n):
            outside = [d for d in all_diagonals(n) if d not in T]
            for a, b in product(outside, repeat=2):
                assert mesh_normal_form_oracle(T, a, b) == hom_dim_diagonals(T, a, b)

    def test_orientation_covariance(self):
        for n in range(1, 5):
            for T in enumerate_triangulations(n):
                U = Triangulation(n, tuple(mirror(d) for d in T.diagonals))
                outside = [d for d in all_diagonals(n) if d not in T]
                for a, b in product(outside, repeat=2):
                    assert hom_dim_diagonals(T, a, b) == hom_dim_diagonals(U, mirror(b), mirror(a))


class TestOrbitIndex:
    def test_kappa_examples(self):
        assert kappa(2, 1, 3) == OrbitIndex(2, 1, 1)
        assert kappa(2, 3, 6) == OrbitIndex(2, 1, 1)

    def test_canonical_validation(self):
        with pytest.raises(PolygonError):
            OrbitIndex(2, 3, 2)
        with pytest.raises(PolygonError):
            OrbitIndex.of(2, 0, 3)
        with pytest.raises(PolygonError):
            kappa(2, 0, 1)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_bijection(self, n):
        classes = {kappa_of_diagonal(d) for d in all_diagonals(n)}
        assert len(classes) == n * (n + 3) // 2
        for d in all_diagonals(n):
            assert kappa_of_diagonal(d) == kappa_of_diagonal(d, reverse=True)
            assert diagonal_of_kappa(kappa_of_diagonal(d)) == d

    def test_shift_examples(self):
        a = OrbitIndex(2, 1, 1)
        assert shift(a) == OrbitIndex.of(2, 2, 2)
        assert shift(shift(a)) == OrbitIndex.of(2, 4, 1) != a

    @pytest.mark.parametrize("n", range(1, 7))
    def test_shift_bijective(self, n):
        classes = {kappa_of_diagonal(d) for d in all_diagonals(n)}
        assert {shift(c) for c in classes} == classes


class TestHammock:
    @staticmethod
    def hull_oracle(n, source, point):
        i, j = source
        corners = [(i, j), (i, n), (i + j - 1, 1), (i + j - 1, n - j + 1)]
        return MultiPoint(corners).convex_hull.buffer(1e-9).covers(Point(point))

    @given(st.integers(1, 7).flatmap(lambda n: st.tuples(
        st.just(n), st.integers(-3, 8), st.integers(1, n), st.integers(-3, 16), st.integers(0, n + 1))))
    def test_matches_closed_hull(self, args):
        n, i, j, x, y = args
        assert hammock_contains(n, (i, j), (x, y)) == self.hull_oracle(n, (i, j), (x, y))

    def test_examples(self):
        M = OrbitIndex(2, 1, 1)
        assert orbit_hom_dim(M, OrbitIndex.of(2, 1, 1)) == 1
        assert orbit_hom_dim(M, OrbitIndex.of(2, 1, 2)) == 1
        assert orbit_hom_dim(M, OrbitIndex.of(2, 2, 1)) == 0
        assert orbit_hom_dim(OrbitIndex.of(2, 2, 1), shift(M)) == 1

    def test_fan_is_linear_with_simple_p1(self):
        for n in range(1, 7):
            Q = quiver_from_triangulation(fan(n))
            assert Q.arrows == {(k + 1, k) for k in range(1, n)}
            assert projective(Q, 1).support == {1}

    @pytest.mark.parametrize("n", range(1, 6))
    def test_unshifted_fan_indices_match_module_hom(self, n):
        T = fan(n)
        Q = quiver_from_triangulation(T)
        outside = [d for d in all_diagonals(n) if d not in T]
        for a, b in product(outside, repeat=2):
            ka, kb = kappa_of_diagonal(a), kappa_of_diagonal(b)
            assert int(hammock_contains(n, (ka.i, ka.j), (kb.i, kb.j))) == \
                hom_dim_modules(Q, theta(T, a), theta(T, b))


class TestExt:
    def test_examples(self):
        assert ext1(D(2, 0, 2), D(2, 1, 3)) == 1
        assert ext1(D(2, 0, 2), D(2, 0, 3)) == 0

    @pytest.mark.parametrize("n", range(1, 7))
    def test_equals_crossing(self, n):
        for a, b in product(all_diagonals(n), repeat=2):
            assert ext1(a, b) == int(crosses(a, b)) == ext1(b, a)

    @pytest.mark.parametrize("n", range(1, 5))
    def test_maximal_extension_free_sets_are_triangulations(self, n):
        free = [s for s in combinations(all_diagonals(n), n)
                if all(ext1(a, b) == 0 for a, b in combinations(s, 2))]
        assert {frozenset(s) for s in free} == {T.key for T in enumerate_triangulations(n)}

    def test_table_shape(self):
        table = hom_ext_table(2)
        assert len(table["pairs"]) == 25
        assert set(table["pairs"][0]) == {"from", "to", "hom", "ext1"}
