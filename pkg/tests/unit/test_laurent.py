import pytest

from backend.core.catalog import build, radford_tensor
from backend.core.errors import LocalizationError, NotGroupLikeError
from backend.core.laurent import LaurentModel, check_isomorphism, span_dims, unzigzag, zigzag
from backend.core.localization import AnnihilatorStrategy, DenominatorMonoid, localize


@pytest.fixture(scope="module")
def glq2():
    entry = build("glq2")
    return entry, entry.host


@pytest.fixture(scope="module")
def det_localization(glq2):
    entry, _ = glq2
    Q, det = entry.extras["base"], entry.extras["det"]
    monoid = DenominatorMonoid(Q, [det], strategy=AnnihilatorStrategy.declared_regular(), names=["detq"])
    return localize(Q, monoid)


def test_zigzag_interleaves_exponents():
    assert [zigzag(e) for e in (0, -1, 1, -2, 2)] == [0, 1, 2, 3, 4]
    assert [unzigzag(z) for z in range(7)] == [0, -1, 1, -2, 2, -3, 3]


class TestLaurentModel:
    """GL_q(2) as M_q(2)[X]/(det_q X − 1)."""

    def test_x_inverts_det(self, glq2):
        _, model = glq2
        X, g = model.inverse_element(), model.generator()
        assert model.mul(X, g) == model.one()
        assert model.mul(g, X) == model.one()

    def test_dimensions(self, glq2):
        _, model = glq2
        assert model.dim(0) == 3
        assert model.dim(1) == 12
        assert model.dim(2) == 27

    def test_labels(self, glq2):
        entry, model = glq2
        assert model.render(model.inverse_element()) == "X"
        assert model.render(model.generator()) == "g"
        a = entry.extras["base"].element("a")
        assert model.render(model.embed(a, -1)) == "aX"

    def test_embed_is_multiplicative(self, glq2):
        entry, model = glq2
        Q, det = entry.extras["base"], entry.extras["det"]
        a = Q.element("a")
        assert model.embed(Q.mul(a, det)) == model.mul(model.embed(a), model.generator())

    def test_span_dims(self, glq2):
        _, model = glq2
        assert span_dims(model, cutoff=1, bound=2) == {0: 3, 1: 12}

    def test_construction_reports(self, glq2):
        _, model = glq2
        assert [r.suite for r in model.reports] == ["central", "regular"]
        assert all(r.passed for r in model.reports)


class TestFractionModel:
    """The model agrees with the fraction construction."""

    def test_isomorphism(self, glq2, det_localization):
        _, model = glq2
        report = check_isomorphism(model, det_localization)
        assert report.passed, report.failed_axioms()

    def test_inverse_maps_to_one_over_det(self, glq2, det_localization):
        _, model = glq2
        L = det_localization
        a = model.to_fraction(model.inverse_element(), L)
        assert a.word == (0,)
        assert L.equal(a, L.inverse_of_generator(0))
        assert model.from_fraction(L.inverse_of_generator(0)) == model.inverse_element()


class TestRejectedDenominators:
    """Elements the model cannot invert."""

    def test_degree_zero(self):
        T = radford_tensor(3)
        with pytest.raises(LocalizationError):
            LaurentModel(T, T.one())

    def test_not_group_like(self, mq2_parts):
        Q, _, _ = mq2_parts
        with pytest.raises(NotGroupLikeError):
            LaurentModel(Q, Q.element("a"))

    def test_finite_dimensional_host(self, sweedler_algebra):
        with pytest.raises(LocalizationError):
            LaurentModel(sweedler_algebra, sweedler_algebra.element("f"))
