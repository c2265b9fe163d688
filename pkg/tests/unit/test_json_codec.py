import json

import pytest
from pydantic import ValidationError

from backend.adapters.json_codec import (
    dumps,
    element_from_doc,
    element_to_doc,
    emit,
    fraction_to_doc,
    graph_from_doc,
    load_json,
    load_wba,
    rform_to_doc,
    scalar_from_doc,
    scalar_to_doc,
    wba_from_doc,
    wba_to_doc,
)
from backend.core.axioms import check_wba_axioms
from backend.core.catalog import build, radford_tensor, sweedler
from backend.core.errors import DocumentError, FieldMismatchError
from backend.core.exactfield import CycloField
from backend.core.localization import localize
from shared.schemas.documents import ProductEntry, WBADoc


class TestScalars:
    """Scalar documents."""

    def test_cyclotomic_scalar(self):
        F = CycloField.of(24)
        z = F.zeta(5) - F.rational(1) / 2
        doc = scalar_to_doc(z)
        assert doc.conductor == 24
        assert doc.coeffs[0] == "-1/2"
        assert scalar_from_doc(doc, F) == z

    def test_zero_has_no_coefficients(self):
        assert scalar_to_doc(CycloField.of(8).zero()).coeffs == []

    def test_field_mismatch(self):
        doc = scalar_to_doc(CycloField.of(8).zeta())
        with pytest.raises(FieldMismatchError):
            scalar_from_doc(doc, CycloField.of(12))


class TestAlgebraDocuments:
    """Structure tables written and read back."""

    def test_sweedler_tables(self, sweedler_algebra):
        W = sweedler_algebra
        doc = wba_to_doc(W)
        assert doc.labels == {0: ["1", "f", "y", "fy"]}
        assert doc.counit["y"].coeffs == []
        loaded = wba_from_doc(WBADoc.model_validate_json(dumps(doc)))
        assert loaded.dims() == {0: 4}
        assert loaded.mul(loaded.element("y"), loaded.element("f")) == loaded.element("fy", -1)
        assert check_wba_axioms(loaded).passed

    def test_graded_tables_keep_the_cutoff(self):
        doc = wba_to_doc(radford_tensor(2))
        assert doc.cutoff == 2
        loaded = wba_from_doc(doc)
        assert loaded.dims() == {0: 1, 1: 2, 2: 4}
        assert check_wba_axioms(loaded).passed

    def test_unknown_label(self, sweedler_algebra):
        doc = wba_to_doc(sweedler_algebra)
        unit = doc.unit
        doc.product.append(ProductEntry(left="g", right="f", value=unit))
        with pytest.raises(DocumentError):
            wba_from_doc(doc)

    def test_duplicate_labels(self, sweedler_algebra):
        data = wba_to_doc(sweedler_algebra).model_dump(mode="json")
        data["labels"] = {"0": ["1", "f", "f", "fy"]}
        with pytest.raises(ValidationError):
            WBADoc(**data)

    def test_load_from_file(self, sweedler_algebra, tmp_path):
        path = tmp_path / "w.json"
        emit(wba_to_doc(sweedler_algebra), str(path))
        text = path.read_text(encoding="utf-8")
        assert text.endswith("\n")
        assert load_wba(str(path)).name == "W"

    def test_load_errors(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json", encoding="utf-8")
        with pytest.raises(DocumentError):
            load_json(str(bad))
        incomplete = tmp_path / "incomplete.json"
        incomplete.write_text(json.dumps({"name": "X"}), encoding="utf-8")
        with pytest.raises(DocumentError):
            load_wba(str(incomplete))


class TestOtherDocuments:
    """Elements, r-forms, fractions and graphs."""

    def test_element_round_trip(self, mq2_parts):
        Q, _, det = mq2_parts
        doc = element_to_doc(Q, det)
        assert len(doc.terms) == 2
        assert element_from_doc(Q, doc) == det

    def test_element_label_mismatch(self, sweedler_algebra):
        W = sweedler_algebra
        doc = element_to_doc(W, W.element("f"))
        doc.terms[0].label = "y"
        with pytest.raises(DocumentError):
            element_from_doc(W, doc)

    def test_rform_document(self):
        W, r = sweedler(2)
        doc = rform_to_doc(r)
        assert doc.algebra == "W"
        assert doc.mode == "recursive"
        values = {(e.left, e.right): e.value.coeffs for e in doc.entries}
        assert values[("f", "f")] == ["-1"]
        assert values[("y", "y")] == ["2"]

    def test_fraction_document(self):
        entry = build("sweedler")
        L = localize(entry.host, entry.monoid())
        doc = fraction_to_doc(L.fraction(entry.host.element("y"), (0, 0)))
        assert doc.den == [0, 0]
        assert doc.names == ["f"]
        assert doc.text == "(y)/f·f"

    def test_graph_documents(self):
        g = graph_from_doc({"vertices": 2, "edges": [[0, 1], [1, 0]]})
        assert g.successors(0) == [1]
        with pytest.raises(DocumentError):
            graph_from_doc({"vertices": 0, "edges": []})
        with pytest.raises(DocumentError):
            graph_from_doc({"vertices": 2, "edges": [[0, 5]]})

    def test_dumps_is_deterministic(self):
        assert dumps({"b": 1, "a": "ζ"}) == '{\n  "a": "ζ",\n  "b": 1\n}\n'
