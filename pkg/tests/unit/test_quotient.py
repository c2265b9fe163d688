import pytest

from backend.core.axioms import check_wba_axioms, is_group_like
from backend.core.catalog import radford_tensor
from backend.core.errors import CoidealError
from backend.core.quotient import GradedQuotient, check_central, free_matrix_bialgebra
from shared.schemas.reports import GroupLikeKind


class TestMq2:
    """M_q(2) as a graded quotient of the free matrix bialgebra."""

    def test_dimensions(self, mq2_parts):
        Q, _, _ = mq2_parts
        assert Q.dims() == {0: 1, 1: 4, 2: 10, 3: 20}

    def test_relations_hold(self, mq2_parts, level3):
        Q, _, _ = mq2_parts
        q = level3.q
        a, b, c, d = (Q.element(g) for g in Q.generators)
        m = Q.mul
        assert m(b, a) == m(a, b).scale(q)
        assert m(c, a) == m(a, c).scale(q)
        assert m(d, b) == m(b, d).scale(q)
        assert m(d, c) == m(c, d).scale(q)
        assert m(b, c) == m(c, b)
        assert m(a, d) - m(d, a) == m(b, c).scale(q.inverse() - q)

    def test_coideal(self, mq2_parts):
        Q, _, _ = mq2_parts
        assert Q.coideal_report.passed
        assert Q.coideal_report.checked > 0

    def test_det_is_central_and_group_like(self, mq2_parts):
        Q, _, det = mq2_parts
        assert check_central(Q, det).passed
        assert is_group_like(Q, det) == GroupLikeKind.BOTH
        assert Q.counit(det) == 1

    def test_generators_are_not_central(self, mq2_parts):
        Q, _, _ = mq2_parts
        a = Q.element(Q.generators[0])
        report = check_central(Q, a)
        assert not report.passed

    def test_wba_axioms_at_cutoff_two(self, mq2_parts):
        Q, _, _ = mq2_parts
        assert check_wba_axioms(Q, cutoff=2).passed

    def test_lift_and_project(self, mq2_parts):
        Q, _, det = mq2_parts
        assert Q.project(Q.lift(det)) == det


class TestBadQuotients:
    """Relations that do not define a quotient bialgebra."""

    def test_non_coideal_relation(self):
        T = free_matrix_bialgebra(2, cutoff=2)
        Q = GradedQuotient(T, [T.mul(T.gen("a"), T.gen("b"))])
        assert not Q.coideal_report.passed
        assert "quotient.coideal" in Q.coideal_report.failed_axioms()
        with pytest.raises(CoidealError):
            Q.delta(Q.element(Q.generators[0]))

    def test_relations_must_have_degree_two(self):
        T = free_matrix_bialgebra(2, cutoff=2)
        with pytest.raises(ValueError):
            GradedQuotient(T, [T.gen("a")])

    def test_quotients_need_a_cutoff(self, sweedler_algebra):
        with pytest.raises(ValueError):
            GradedQuotient(sweedler_algebra, [])


class TestTensorAlgebra:
    """Radford's T(V)."""

    def test_dimensions(self):
        T = radford_tensor(3)
        assert T.dims() == {0: 1, 1: 2, 2: 4, 3: 8}

    def test_letter_coproduct(self):
        T = radford_tensor(2)
        one_v, i = T.element("1v"), T.element("i")
        assert T.render(T.delta(i)) == "1v⊗i + i⊗1v"
        assert T.counit(one_v) == 1 and T.counit(i) == 0
        assert T.label(T.mul(one_v, i).support()[0]) == "1v·i"

    def test_passes_wba(self):
        assert check_wba_axioms(radford_tensor(2)).passed
