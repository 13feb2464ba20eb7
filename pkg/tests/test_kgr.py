from __future__ import annotations

import pytest
from hypothesis import given

from conftest import cone_pairs_st
from kostka.errors import MalformedStarMatrix
from kostka.kgr import (
    Vertex,
    build_graph,
    components,
    fast_reducibility,
    find_conservative_subtree,
    graph_payload,
    is_connected,
    is_forest,
    mu_star_of,
    pair_graph,
    segment_crossings,
    sink_of_component,
    source_rows,
    to_dot,
    verify_subtree,
)
from kostka.partitions import KostkaPair, pad
from kostka.ryser import StarMatrix, matrix_reducible, ryser_canonical, star_matrix


def _v(row: int, col: int, sign: int) -> Vertex:
    return Vertex(row=row, col=col, sign=sign)


GOLDEN_ARCS = {
    (_v(1, 8, -1), _v(1, 4, 1)),
    (_v(3, 4, -1), _v(3, 3, 1)),
    (_v(3, 6, -1), _v(3, 5, 1)),
    (_v(5, 3, -1), _v(5, 2, 1)),
    (_v(5, 7, -1), _v(5, 6, 1)),
    (_v(6, 2, -1), _v(6, 1, 1)),
    (_v(6, 5, -1), _v(6, 4, 1)),
    (_v(5, 2, 1), _v(6, 2, -1)),
    (_v(7, 2, 1), _v(6, 2, -1)),
    (_v(3, 3, 1), _v(5, 3, -1)),
    (_v(7, 3, 1), _v(5, 3, -1)),
    (_v(1, 4, 1), _v(3, 4, -1)),
    (_v(6, 4, 1), _v(3, 4, -1)),
    (_v(3, 5, 1), _v(6, 5, -1)),
    (_v(7, 5, 1), _v(6, 5, -1)),
    (_v(2, 6, 1), _v(3, 6, -1)),
    (_v(5, 6, 1), _v(3, 6, -1)),
    (_v(2, 7, 1), _v(5, 7, -1)),
    (_v(7, 7, 1), _v(5, 7, -1)),
    (_v(2, 8, 1), _v(1, 8, -1)),
}

GOLDEN_SUBTREE = {
    _v(1, 4, 1),
    _v(1, 8, -1),
    _v(2, 8, 1),
    _v(3, 3, 1),
    _v(3, 4, -1),
    _v(5, 2, 1),
    _v(5, 3, -1),
    _v(6, 2, -1),
    _v(6, 4, 1),
    _v(7, 2, 1),
    _v(7, 3, 1),
}


class TestGoldenGraph:
    def test_vertices_and_arcs(self, running_pair):
        graph = pair_graph(running_pair)
        assert len(graph.vertices) == 21
        assert len(graph.arcs) == 20
        assert set(graph.arcs) == GOLDEN_ARCS

    def test_shape_properties(self, running_pair):
        graph = pair_graph(running_pair)
        assert is_connected(graph)
        assert is_forest(graph)
        assert segment_crossings(graph) == 0
        assert len(components(graph)) == 1

    def test_source_census(self, running_pair):
        graph = pair_graph(running_pair)
        assert source_rows(graph) == {2: 3, 7: 4}
        assert mu_star_of(running_pair) == (0, 3, 0, 0, 0, 0, 4)

    def test_conservative_subtree(self, running_pair):
        graph = pair_graph(running_pair)
        witness = find_conservative_subtree(graph)
        assert witness is not None
        assert witness.kind == "sink-source"
        assert witness.columns == (2, 3, 4, 8)
        assert witness.sink == _v(6, 2, -1)
        assert witness.source == _v(6, 4, 1)
        assert set(witness.vertices) == GOLDEN_SUBTREE
        assert verify_subtree(graph, witness.vertices)

    def test_fast_reduction_matches_split(self, running_pair):
        fast = fast_reducibility(running_pair)
        assert fast is not None
        assert fast.columns == (2, 3, 4, 8)
        assert fast.selected == KostkaPair(
            (4, 3, 3, 3, 2, 1), (3, 3, 2, 2, 2, 2, 2), rank=7
        )
        assert fast.complement == KostkaPair(
            (4, 4, 4, 4, 1, 1), (4, 4, 2, 2, 2, 2, 2), rank=7
        )


class TestRefereeNegatives:
    def test_non_column_closed_set(self, running_pair):
        graph = pair_graph(running_pair)
        assert not verify_subtree(graph, {_v(6, 2, -1)})

    def test_whole_graph_is_not_proper(self, running_pair):
        graph = pair_graph(running_pair)
        assert not verify_subtree(graph, graph.vertices)

    def test_closed_tree_without_sink_row_source(self, running_pair):
        graph = pair_graph(running_pair)
        col2 = {_v(6, 2, -1), _v(5, 2, 1), _v(7, 2, 1)}
        assert not verify_subtree(graph, col2)
        col23 = col2 | {_v(5, 3, -1), _v(3, 3, 1), _v(7, 3, 1)}
        assert not verify_subtree(graph, col23)

    def test_empty_set(self, running_pair):
        assert not verify_subtree(pair_graph(running_pair), ())


class TestDisconnectedGraphs:
    def test_square_pair_splits_as_component(self):
        pair = KostkaPair((2, 2), (2, 2))
        graph = pair_graph(pair)
        assert not is_connected(graph)
        assert len(components(graph)) == 2
        witness = find_conservative_subtree(graph)
        assert witness is not None
        assert witness.kind == "component"
        fast = fast_reducibility(pair)
        assert fast is not None
        assert fast.selected == KostkaPair((1, 1), (1, 1), rank=2)
        assert fast.complement == KostkaPair((1, 1), (1, 1), rank=2)

    def test_sink_per_component(self, running_pair):
        graph = pair_graph(running_pair)
        start = graph.vertices[0]
        sink = sink_of_component(graph, start)
        assert sink not in graph.out  # sinks have no outgoing arc
        assert sink == _v(6, 1, 1)


class TestInvariants:
    @given(cone_pairs_st(max_boxes=12))
    def test_forest_planar_and_sourced(self, pair):
        graph = pair_graph(pair)
        assert is_forest(graph)
        assert segment_crossings(graph) == 0
        mu_star = pad(mu_star_of(pair), pair.rank)
        expected = {i + 1: c for i, c in enumerate(mu_star) if c}
        assert source_rows(graph) == expected

    @given(cone_pairs_st(max_boxes=12))
    def test_out_degree_at_most_one(self, pair):
        graph = pair_graph(pair)
        tails = [t for t, _ in graph.arcs]
        assert len(tails) == len(set(tails))

    @given(cone_pairs_st(max_boxes=12))
    def test_connectivity_criterion(self, pair):
        graph = pair_graph(pair)
        arr = graph.star.array
        all_closed = all(
            (arr[:, j] == -1).any() for j in range(1, arr.shape[1])
        )
        assert is_connected(graph) == all_closed

    @given(cone_pairs_st(max_boxes=12))
    def test_found_witnesses_satisfy_the_referee(self, pair):
        graph = pair_graph(pair)
        witness = find_conservative_subtree(graph)
        if witness is not None:
            assert verify_subtree(graph, witness.vertices)

    @given(cone_pairs_st(max_boxes=12))
    def test_fast_implies_exhaustive(self, pair):
        fast = fast_reducibility(pair)
        if fast is not None:
            assert matrix_reducible(ryser_canonical(pair)) is not None
            total = fast.selected.n + fast.complement.n
            assert total == pair.n


class TestRendering:
    def test_dot_output(self, running_pair):
        graph = pair_graph(running_pair)
        witness = find_conservative_subtree(graph)
        dot = to_dot(graph, witness)
        assert dot.startswith("digraph")
        assert dot.count('"red"') > 0
        assert dot.count("->") == 20

    def test_payload_shape(self, running_pair):
        graph = pair_graph(running_pair)
        payload = graph_payload(graph, find_conservative_subtree(graph))
        assert payload["connected"] is True
        assert len(payload["vertices"]) == 21
        assert len(payload["arcs"]) == 20
        assert payload["witness"]["columns"] == [2, 3, 4, 8]
        assert payload["witness"]["sink"] == [6, 2]


class TestStarValidation:
    def test_bad_column_signature_is_rejected(self, running_pair):
        with pytest.raises(MalformedStarMatrix):
            StarMatrix(
                pair=KostkaPair((2,), (1, 1)),
                entries=((1, 1), (0, 0)),
                mu_star=(2, 0),
            )

    def test_star_of_canonical_always_builds(self, running_pair):
        # the running example's star is validated during construction
        star = star_matrix(ryser_canonical(running_pair))
        graph = build_graph(star)
        assert graph.star is star
