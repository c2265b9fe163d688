import pytest

from backend.core.errors import InvalidPathError
from backend.core.graphs import DirectedGraph, build_graph_wba, enumerate_paths, linear_graph


class TestDirectedGraph:
    """Graphs and their paths."""

    def test_linear_graph(self):
        g = linear_graph(4)
        assert g.vertices == 3
        assert g.edges == ((0, 1), (1, 0), (1, 2), (2, 1))

    def test_linear_graph_needs_level_three(self):
        with pytest.raises(ValueError):
            linear_graph(2)

    @pytest.mark.parametrize("vertices,edges", [(0, ()), (2, ((0, 2),)), (1, ((-1, 0),))])
    def test_invalid_graphs(self, vertices, edges):
        with pytest.raises(ValueError):
            DirectedGraph(vertices, edges)

    def test_paths_of_length_two(self):
        assert enumerate_paths(linear_graph(3), 2) == [(0, 1, 0), (1, 0, 1)]
        assert enumerate_paths(linear_graph(4), 2) == [
            (0, 1, 0), (0, 1, 2), (1, 0, 1), (1, 2, 1), (2, 1, 0), (2, 1, 2),
        ]

    def test_vertices_are_paths_of_length_zero(self):
        assert enumerate_paths(linear_graph(4), 0) == [(0,), (1,), (2,)]

    def test_negative_length(self):
        with pytest.raises(ValueError):
            enumerate_paths(linear_graph(3), -1)

    def test_is_path(self):
        g = linear_graph(4)
        assert g.is_path((0, 1, 2))
        assert not g.is_path((0, 2))
        assert not g.is_path(())
        with pytest.raises(InvalidPathError):
            g.check_path((2, 0))


class TestGraphWBA:
    """H[𝒢] on pairs of equal-length paths."""

    @pytest.fixture
    def H(self):
        return build_graph_wba(linear_graph(4), 2)

    def test_dimensions(self, H):
        assert H.dims() == {0: 9, 1: 16, 2: 36}

    def test_product_concatenates(self, H):
        x = H.pair((0, 1), (1, 0))
        y = H.pair((1, 0), (0, 1))
        assert H.mul(x, y) == H.pair((0, 1, 0), (1, 0, 1))

    def test_product_of_non_composable_paths(self, H):
        x = H.pair((0, 1), (1, 0))
        y = H.pair((0, 1), (0, 1))
        assert H.mul(x, y).is_zero()

    def test_unit(self, H):
        assert len(H.one().support()) == 9
        x = H.pair((1, 2), (1, 0))
        assert H.mul(H.one(), x) == x
        assert H.mul(x, H.one()) == x

    def test_coproduct_sums_over_middle_paths(self, H):
        x = H.pair((0, 1), (2, 1))
        delta = H.delta(x)
        assert len(delta.support()) == 4
        assert delta.coefficient((H.pair_id((0, 1), (1, 0)), H.pair_id((1, 0), (2, 1)))) == 1

    def test_counit(self, H):
        assert H.counit(H.pair((0, 1), (0, 1))) == 1
        assert H.counit(H.pair((0, 1), (1, 2))) == 0

    def test_labels(self, H):
        assert H.label(H.pair_id((0, 1, 0), (1, 2, 1))) == "[0,1,0|1,2,1]"

    def test_bad_pairs(self, H):
        with pytest.raises(InvalidPathError):
            H.pair((0, 1), (1,))
        with pytest.raises(InvalidPathError):
            H.pair((0, 2), (1, 0))

    def test_parallel_edges(self):
        H = build_graph_wba(DirectedGraph(2, ((0, 1), (0, 1), (1, 0))), 1)
        assert H.dim(1) == 4
