import pytest

from backend.core.axioms import is_group_like
from backend.core.catalog import mhatq2
from backend.core.errors import InvalidPathError
from backend.core.exactfield import RootOfUnityLevel
from backend.core.graphs import build_graph_wba, linear_graph
from backend.core.quantum import alpha, mq2_determinant, mq2_relations, quantum_determinant, rtt_coefficient, rtt_relations
from backend.core.quotient import check_central, free_matrix_bialgebra
from shared.schemas.reports import GroupLikeKind


class TestRCoefficients:
    """R_{i;ℓ} on length-two paths of the linear graph."""

    def test_up_up_at_level_three(self, level3):
        assert rtt_coefficient(level3, (0, 1, 0), (0, 1, 0)) == -level3.epsilon

    def test_down_down_at_level_three(self, level3):
        expected = level3.q_half_power(-1) * level3.q_half_power(-4) / level3.qint(2)
        assert rtt_coefficient(level3, (1, 0, 1), (1, 0, 1)) == expected

    def test_different_start_vertices(self, level3):
        assert rtt_coefficient(level3, (0, 1, 0), (1, 0, 1)).is_zero()

    def test_straight_paths(self):
        level = RootOfUnityLevel(4)
        assert rtt_coefficient(level, (0, 1, 2), (0, 1, 2)) == level.q_half_power(-3)
        assert rtt_coefficient(level, (0, 1, 2), (0, 1, 0)).is_zero()

    def test_mixed_family(self):
        level = RootOfUnityLevel(4)
        assert rtt_coefficient(level, (1, 2, 1), (1, 0, 1)) == level.q_half_power(-1)

    def test_accepts_integer_level(self, level3):
        assert rtt_coefficient(3, (0, 1, 0), (0, 1, 0)) == rtt_coefficient(level3, (0, 1, 0), (0, 1, 0))

    @pytest.mark.parametrize("i,l", [((0, 0, 0), (0, 1, 0)), ((0, 1), (0, 1))])
    def test_bad_paths(self, level3, i, l):
        with pytest.raises(InvalidPathError):
            rtt_coefficient(level3, i, l)


class TestRelations:
    """RTT and M_q(2) relations."""

    def test_level_three_has_no_relations(self, level3):
        # q⁴ + q² + 1 = 0 at r = 3 makes every RTT relation vanish
        H = build_graph_wba(linear_graph(3), 2, level3.field)
        assert rtt_relations(level3, H) == []

    @pytest.mark.parametrize("r", [4, 5])
    def test_rtt_relations_are_quadratic(self, r):
        level = RootOfUnityLevel(r)
        H = build_graph_wba(linear_graph(r), 2, level.field)
        relations = rtt_relations(level, H)
        assert relations
        assert all(rho.degrees() == [2] for rho in relations)

    def test_rtt_needs_matching_field(self, level3):
        H = build_graph_wba(linear_graph(3), 2)
        with pytest.raises(ValueError):
            rtt_relations(level3, H)

    def test_rtt_scale_must_be_nonzero(self, level3):
        H = build_graph_wba(linear_graph(3), 2, level3.field)
        with pytest.raises(ValueError):
            rtt_relations(level3, H, scale=0)

    def test_mq2_relations(self, level3):
        T = free_matrix_bialgebra(2, level3.field, 2)
        relations = mq2_relations(T, level3.q)
        assert len(relations) == 6
        det = mq2_determinant(T, level3.q)
        assert det.degrees() == [2]
        assert len(det.support()) == 2


class TestQuantumDeterminant:
    """det_q on the level-r graph algebra."""

    def test_level_three_has_four_terms(self):
        det = quantum_determinant(3)
        assert len(det.support()) == 4

    def test_level_three_coefficients(self, level3):
        H = build_graph_wba(linear_graph(3), 2, level3.field)
        det = quantum_determinant(level3, H)
        up, down = (0, 1, 0), (1, 0, 1)
        expected = H.pair(up, up) - H.pair(up, down) - H.pair(down, up) + H.pair(down, down)
        assert det == expected

    def test_level_four_has_sixteen_terms(self):
        assert len(quantum_determinant(4).support()) == 16

    def test_alpha(self):
        level = RootOfUnityLevel(5)
        assert alpha(level, 0) == 1
        assert alpha(level, 3) == 1
        assert alpha(level, 1) ** 2 == level.field.rational(1) / 2

    @pytest.mark.parametrize("r", [3, 4])
    def test_group_like_and_central_in_quotient(self, r):
        M, det = mhatq2(r, 2)
        assert M.coideal_report.passed
        assert is_group_like(M, det) == GroupLikeKind.BOTH
        assert check_central(M, det).passed

    def test_quotient_dimensions_at_level_four(self):
        M, _ = mhatq2(4, 2)
        assert M.dims(2) == {0: 9, 1: 16, 2: 18}

    def test_level_three_quotient_is_the_graph_algebra(self):
        M, _ = mhatq2(3, 2)
        assert M.dims(2) == {0: 4, 1: 4, 2: 4}
