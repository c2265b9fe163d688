import pytest

from backend.core.algebra import BasisId, Element, LinearMap, Tensor, TensorWBA, mutated, tabulate
from backend.core.catalog import h4, sweedler
from backend.core.errors import DegreeOverflowError, FieldMismatchError
from backend.core.exactfield import CycloField
from backend.core.quotient import free_matrix_bialgebra


class TestSparseElements:
    """Element and Tensor arithmetic."""

    def test_zero_coefficients_are_dropped(self):
        F = CycloField.of(1)
        x = Element(F, {BasisId(0, 0): 1, BasisId(0, 1): 0})
        assert x.support() == [BasisId(0, 0)]
        assert (x - x).is_zero()
        assert not (x - x)

    def test_tensor_of_multiplies_out(self):
        F = CycloField.of(1)
        a = Element(F, {BasisId(0, 0): 1, BasisId(0, 1): 2})
        b = Element.basis(F, BasisId(0, 1), 3)
        t = Tensor.of(a, b)
        assert t.coefficient((BasisId(0, 0), BasisId(0, 1))) == 3
        assert t.coefficient((BasisId(0, 1), BasisId(0, 1))) == 6

    def test_field_mismatch(self):
        x = Element.basis(CycloField.of(1), BasisId(0, 0))
        y = Element.basis(CycloField.of(8), BasisId(0, 0))
        with pytest.raises(FieldMismatchError):
            x + y


class TestSweedlerTables:
    """Products, coproducts and rendering of W."""

    def test_products(self, sweedler_algebra):
        W = sweedler_algebra
        e = W.element
        assert W.mul(e("f"), e("f")) == W.one()
        assert W.mul(e("y"), e("f")) == e("fy", -1)
        assert W.mul(e("fy"), e("f")) == e("y", -1)
        assert W.mul(e("y"), e("y")).is_zero()
        assert W.product(e("f"), e("y"), e("f")) == e("y", -1)

    def test_coproduct_is_multiplicative(self, sweedler_algebra):
        W = sweedler_algebra
        e = W.element
        assert W.delta(W.mul(e("f"), e("y"))) == W.mul_tensor(W.delta(e("f")), W.delta(e("y")))

    def test_render(self, sweedler_algebra):
        W = sweedler_algebra
        assert W.render(W.delta(W.element("y"))) == "f⊗y + y⊗1"
        assert W.render(W.element("fy", -1) + W.element("y")) == "y - fy"

    def test_power(self, sweedler_algebra):
        W = sweedler_algebra
        assert W.power(W.element("f"), 4) == W.one()
        assert W.power(W.element("f"), 0) == W.one()

    def test_counital_maps_are_trivial_in_a_bialgebra(self, sweedler_algebra):
        W = sweedler_algebra
        for b in W.basis():
            x = W.element(b)
            assert W.counital_source(x) == W.one().scale(W.counit(x))
            assert W.counital_target(x) == W.one().scale(W.counit(x))

    def test_unknown_label(self, sweedler_algebra):
        with pytest.raises(KeyError):
            sweedler_algebra.lookup("g")


class TestGradedHosts:
    """Cutoffs and the free matrix bialgebra."""

    def test_free_matrix_dims(self):
        T = free_matrix_bialgebra(2, cutoff=3)
        assert T.dims() == {0: 1, 1: 4, 2: 16, 3: 64}

    def test_degree_overflow(self):
        T = free_matrix_bialgebra(2, cutoff=2)
        a = T.gen("a")
        x = T.mul(a, a)
        with pytest.raises(DegreeOverflowError):
            T.mul(x, a)

    def test_matrix_coproduct(self):
        T = free_matrix_bialgebra(2, cutoff=2)
        a, b, c = T.gen("a"), T.gen("b"), T.gen("c")
        assert T.delta(a) == Tensor.of(a, a) + Tensor.of(b, c)
        assert T.counit(a) == 1 and T.counit(b) == 0

    def test_labels(self):
        T = free_matrix_bialgebra(2, cutoff=2)
        assert T.label(T.word_id((0, 3))) == "ad"
        assert T.label(T.basis(0)[0]) == "1"


class TestTensorWBA:
    """H₁⊗H₂ structure."""

    def test_pure_tensors_multiply_componentwise(self):
        W, _ = sweedler()
        H = h4()
        T = TensorWBA(W, H)
        x = T.pure(W.element("f"), H.element("2̄"))
        y = T.pure(W.element("y"), H.element("3̄"))
        assert T.mul(x, y) == T.pure(W.element("fy"), H.element("2̄"))
        assert T.dim(0) == 16

    def test_lift_maps(self):
        W, _ = sweedler()
        H = h4()
        T = TensorWBA(W, H)
        swap = lambda x: W.mul(W.mul(W.element("f"), x), W.element("f"))
        mapped = T.lift_maps(swap, lambda x: x)
        x = T.pure(W.element("y"), H.element("0̄"))
        assert mapped(x) == T.pure(W.element("y", -1), H.element("0̄"))


class TestMapsAndMutation:
    """LinearMap, tabulate and the mutation harness."""

    def test_linear_map_compose(self, sweedler_algebra):
        W = sweedler_algebra
        conj = LinearMap(W, W, rule=lambda b: W.product(W.element("f"), W.element(b), W.element("f")), name="I")
        twice = conj.compose(conj)
        for b in W.basis():
            assert twice.on_basis(b) == W.element(b)

    def test_linear_map_missing_image(self, sweedler_algebra):
        W = sweedler_algebra
        partial = LinearMap(W, W, images={W.lookup("1"): W.one()})
        with pytest.raises(KeyError):
            partial(W.element("f"))

    def test_tabulate_preserves_structure(self):
        T = free_matrix_bialgebra(2, cutoff=2)
        table = tabulate(T)
        for b in T.basis(1):
            assert table.delta_basis(b) == T.delta_basis(b)
        assert table.dims() == T.dims()

    def test_mutation_changes_one_constant(self, sweedler_algebra):
        W = sweedler_algebra
        f = W.lookup("f")
        broken = mutated(W, "counit", f)
        assert broken.counit_basis(f) == 2
        assert W.counit_basis(f) == 1
