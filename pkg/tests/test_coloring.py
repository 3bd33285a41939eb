import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from planecolor.coloring import (
    Color,
    Coloring,
    SolveSpec,
    Unsatisfiable,
    brute_force_solve,
    enumerate_colorings,
    solve,
    verify_coloring,
)
from planecolor.errors import ResourceLimitError, SolveTimeout
from planecolor.graph import Graph

from conftest import cycle_graph, path_graph, random_graph


def all_zero(g):
    return Coloring({v: Color.ZERO for v in g.vertices})


def test_verify_rejects_partial():
    g = cycle_graph(3)
    with pytest.raises(ValueError):
        verify_coloring(g, Coloring({0: Color.ZERO}), SolveSpec(0, 6))


def test_verify_reports_violations():
    g = cycle_graph(3)
    rep = verify_coloring(g, all_zero(g), SolveSpec(0, 6))
    assert not rep.valid
    assert len(rep.violations) == 3  # every vertex has 2 Zero neighbors


def test_verify_precolor_mismatch():
    g = path_graph(2)
    c = Coloring({0: Color.K, 1: Color.ZERO})
    spec = SolveSpec(0, 6, Coloring({0: Color.ZERO}))
    rep = verify_coloring(g, c, spec)
    assert not rep.valid
    assert ("precolor", 0) in rep.violations


def test_c5_00_unsat():
    # odd cycle is not bipartite
    assert isinstance(solve(cycle_graph(5), SolveSpec(0, 0)), Unsatisfiable)


def test_c5_06_sat():
    g = cycle_graph(5)
    c = solve(g, SolveSpec(0, 6))
    assert verify_coloring(g, c, SolveSpec(0, 6)).valid


def test_adjacent_zero_precolor_unsat():
    g = cycle_graph(5)
    pre = Coloring({0: Color.ZERO, 1: Color.ZERO})
    assert isinstance(solve(g, SolveSpec(0, 6, pre)), Unsatisfiable)


def test_unsatisfiable_is_falsy():
    r = solve(cycle_graph(3), SolveSpec(0, 0))
    assert isinstance(r, Unsatisfiable)
    assert not r
    assert r.exhausted


def test_c3_01_has_three_colorings():
    # exactly one Zero vertex; the other two K vertices see one K each
    cols = enumerate_colorings(cycle_graph(3), SolveSpec(0, 1))
    assert len(cols) == 3
    for c in cols:
        assert sum(1 for v in range(3) if c[v] is Color.ZERO) == 1


def test_enumeration_is_lexicographic():
    cols = enumerate_colorings(path_graph(3), SolveSpec(0, 2))
    keys = [tuple(0 if c[v] is Color.ZERO else 1 for v in range(3)) for c in cols]
    assert keys == sorted(keys)
    assert len(keys) == len(set(keys))


def test_enumeration_limit_and_threshold():
    g = Graph(vertices=range(31))
    with pytest.raises(ResourceLimitError):
        enumerate_colorings(g, SolveSpec(0, 0))
    cols = enumerate_colorings(g, SolveSpec(0, 0), limit=5)
    assert len(cols) == 5


def test_solutions_extend_precoloring():
    g = cycle_graph(7)
    pre = Coloring({2: Color.ZERO, 5: Color.K})
    for c in enumerate_colorings(g, SolveSpec(0, 2, pre)):
        assert c.extends(pre)
        assert verify_coloring(g, c, SolveSpec(0, 2, pre)).valid


def test_solver_first_equals_enumeration_head(corpus):
    for name, g in corpus:
        if len(g) > 12:
            continue
        for d2 in (0, 1, 3):
            spec = SolveSpec(0, d2)
            got = solve(g, spec)
            cols = enumerate_colorings(g, spec, limit=1)
            if isinstance(got, Unsatisfiable):
                assert cols == [], (name, d2)
            else:
                assert cols and cols[0].assignment == got.assignment, (name, d2)


def test_solve_agrees_with_brute_oracle(corpus):
    for name, g in corpus:
        if len(g) > 12:
            continue
        for d1, d2 in [(0, 0), (0, 1), (0, 2), (0, 3), (0, 6), (1, 1), (1, 2)]:
            spec = SolveSpec(d1, d2)
            a = solve(g, spec)
            b = brute_force_solve(g, spec)
            assert isinstance(a, Unsatisfiable) == isinstance(b, Unsatisfiable), (
                name,
                d1,
                d2,
            )
            if not isinstance(a, Unsatisfiable):
                # both deterministic orders are lexicographic: exact match
                assert a.assignment == b.assignment, (name, d1, d2)


def test_bipartite_iff_00(corpus):
    import networkx as nx

    for name, g in corpus:
        if len(g) > 12 or len(g) == 0:
            continue
        h = nx.Graph()
        h.add_nodes_from(g.vertices)
        h.add_edges_from(g.edges())
        sat = not isinstance(solve(g, SolveSpec(0, 0)), Unsatisfiable)
        assert sat == nx.is_bipartite(h), name


def test_monotone_in_d2(corpus):
    for name, g in corpus:
        if len(g) > 12:
            continue
        sat_prev = False
        for d2 in range(0, 7):
            sat = not isinstance(solve(g, SolveSpec(0, d2)), Unsatisfiable)
            assert sat or not sat_prev, name  # SAT never turns into UNSAT
            sat_prev = sat


def test_brute_force_limit():
    with pytest.raises(ResourceLimitError):
        brute_force_solve(Graph(vertices=range(21)), SolveSpec(0, 0))


def test_timeout_raises():
    # near-threshold UNSAT instance taking far longer than the budget
    g = random_graph(90, 0.09, 1)
    with pytest.raises(SolveTimeout):
        solve(g, SolveSpec(2, 2), timeout=0.02)


def test_inconsistent_precoloring_is_unsat_not_error():
    g = path_graph(2)
    pre = Coloring({0: Color.ZERO, 1: Color.ZERO})
    assert isinstance(solve(g, SolveSpec(0, 6, pre)), Unsatisfiable)


def test_precolored_vertex_must_exist():
    g = path_graph(2)
    with pytest.raises(ValueError):
        solve(g, SolveSpec(0, 6, Coloring({9: Color.K})))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(2, 9), st.integers(0, 3))
def test_random_agreement_property(seed, n, d2):
    g = random_graph(n, 0.4, seed)
    spec = SolveSpec(0, d2)
    a = solve(g, spec)
    b = brute_force_solve(g, spec)
    assert isinstance(a, Unsatisfiable) == isinstance(b, Unsatisfiable)
    if not isinstance(a, Unsatisfiable):
        assert a.assignment == b.assignment
        assert verify_coloring(g, a, spec).valid
