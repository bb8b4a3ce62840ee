import json

from clusterpoly.cluster.laurent import LaurentPolynomial
from clusterpoly.cluster.seeds import initial_seed
from clusterpoly.formats import (ar_dot, ar_json, indec_rows, quiver_dot, quiver_text,
                                 variable_table, variable_text)
from clusterpoly.polygon import Diagonal, Triangulation, crosses, snake
from clusterpoly.quiver import quiver_from_triangulation
from clusterpoly.repcat import ar_quiver


def test_quiver_renderings():
    Q = quiver_from_triangulation(snake(2))
    assert quiver_text(Q) == "1 -> 2\n"
    dot = quiver_dot(Q)
    assert dot.startswith("digraph Q {") and "  1 -> 2;" in dot


def test_relations_in_dot_comments():
    T = Triangulation.from_pairs(3, [(0, 2), (2, 4), (0, 4)])
    dot = quiver_dot(quiver_from_triangulation(T))
    assert dot.count("// zero:") == 3


def test_ar_dot_flags_and_determinism():
    ar = ar_quiver(snake(2))
    dot = ar_dot(ar)
    assert dot == ar_dot(ar_quiver(snake(2)))
    assert '"1,3" [label="(1,3)\\n11\\nP/I", shape=box];' in dot
    data = ar_json(ar)
    assert [v["projective"] for v in data["vertices"]] == [True, True, False]
    assert len(data["arrows"]) == 2


def test_indec_rows_use_crossing_indicators():
    T = snake(4)
    rows = indec_rows(T)
    assert len(rows) == 10
    for r in rows:
        d = Diagonal.of(4, *r["diagonal"])
        assert r["dimension_vector"] == [int(crosses(e, d)) for e in T.diagonals]
        assert r["support"] == [i for i, x in enumerate(r["dimension_vector"], start=1) if x]


def test_variable_table_shape_and_round_trip():
    table = variable_table(initial_seed(2))
    assert json.loads(json.dumps(table)) == table
    assert table["cluster"] == [[0, 2], [2, 4]]
    rows = {tuple(r["diagonal"]): r for r in table["variables"]}
    assert rows[(1, 3)]["denominator"] == [1, 1]
    assert rows[(1, 3)]["numerator"] == [[1, [0, 0]], [1, [0, 1]], [1, [1, 0]]]
    for r in table["variables"]:
        w = LaurentPolynomial.from_terms(2, r["numerator"])
        assert w.is_polynomial() and not any(w.divisible_by_variable(i) for i in (1, 2))
    assert "(1 + u1 + u2)/(u1*u2)" in variable_text(table)
