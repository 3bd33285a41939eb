from fractions import Fraction

import pytest

from planecolor.errors import ResourceLimitError
from planecolor.graph import Graph
from planecolor.mad import mad, mad_by_enumeration

from conftest import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    path_graph,
    petersen,
    star_graph,
)


def test_known_values():
    assert mad(cycle_graph(5)) == 2
    assert mad(complete_graph(4)) == 3
    assert mad(petersen()) == 3
    assert mad(path_graph(4)) == Fraction(3, 2)
    assert mad(star_graph(5)) == Fraction(5, 3)
    assert mad(Graph(vertices=[0])) == 0
    with pytest.raises(ValueError):
        mad(Graph())


def test_mad_is_exact_rational():
    # a triangle with a pendant: densest subgraph is the triangle itself
    g = cycle_graph(3)
    g.add_edge(0, 3)
    assert mad(g) == 2
    assert isinstance(mad(g), (int, Fraction))


def test_dense_subgraph_dominates():
    # K4 plus a long tail: the tail never dilutes the max
    g = complete_graph(4)
    for i in range(4, 10):
        g.add_edge(i - 1, i)
    assert mad(g) == 3


def test_flow_equals_enumeration(corpus):
    for name, g in corpus:
        if len(g) > 14:
            continue
        assert mad(g) == mad_by_enumeration(g), name


def test_enumeration_guard():
    with pytest.raises(ResourceLimitError):
        mad_by_enumeration(complete_bipartite(11, 11))


def test_k3t_value():
    # mad(K_{3,5}) = 2*15/8 = 15/4; used by the mini-discharging criterion
    assert mad(complete_bipartite(3, 5)) == Fraction(15, 4)
    assert mad(complete_bipartite(3, 5)) >= Fraction(10, 3)
