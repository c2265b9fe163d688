"""
JSON Codec

Conversion between engine objects and the document models in
shared.schemas.documents, and the JSON writer used by every command.
Output is deterministic: keys sorted, two-space indent, trailing newline.
"""

import json
import logging
import sys
from fractions import Fraction as Rational
from pathlib import Path
from typing import Any, Dict, Optional, Union

from pydantic import BaseModel, ValidationError

from backend.core.algebra import BasedWBA, BasisId, Element, TableWBA, Tensor, iter_tuples
from backend.core.coquasi import RForm
from backend.core.errors import DocumentError, FieldMismatchError
from backend.core.exactfield import CycloField, Scalar
from backend.core.graphs import DirectedGraph
from backend.core.localization import Fraction, LocalizedWBA
from shared.schemas.documents import (
    CoproductEntry,
    ElementDoc,
    FractionDoc,
    GraphDoc,
    ProductEntry,
    RFormDoc,
    RFormEntry,
    ScalarDoc,
    TensorDoc,
    TensorTermDoc,
    TermDoc,
    WBADoc,
)

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Scalars and elements
# ---------------------------------------------------------------------------


def scalar_to_doc(x: Scalar) -> ScalarDoc:
    coeffs = [str(c) for c in x.coeffs]
    while coeffs and coeffs[-1] == "0":
        coeffs.pop()
    return ScalarDoc(conductor=x.field.conductor, coeffs=coeffs, text=str(x))


def scalar_from_doc(doc: ScalarDoc, field: CycloField) -> Scalar:
    if doc.conductor != field.conductor:
        raise FieldMismatchError(f"scalar over ℚ(ζ_{doc.conductor}) read into ℚ(ζ_{field.conductor})")
    try:
        return field.from_coeffs(Rational(c) for c in doc.coeffs)
    except (ValueError, ZeroDivisionError) as exc:
        raise DocumentError(f"bad scalar coefficients {doc.coeffs}: {exc}") from None


def element_to_doc(H: BasedWBA, x: Element) -> ElementDoc:
    terms = [TermDoc(label=H.label(b), degree=b.degree, index=b.index, coeff=scalar_to_doc(c))
             for b, c in sorted(x.terms())]
    return ElementDoc(terms=terms, text=H.render(x))


def element_from_doc(H: BasedWBA, doc: ElementDoc) -> Element:
    out: Dict[BasisId, Scalar] = {}
    for term in doc.terms:
        b = BasisId(term.degree, term.index)
        if H.label(b) != term.label:
            raise DocumentError(f"basis id ({term.degree}, {term.index}) of {H.name} is {H.label(b)!r}, not {term.label!r}")
        out[b] = scalar_from_doc(term.coeff, H.field)
    return Element(H.field, out)


def tensor_to_doc(H: BasedWBA, t: Tensor) -> TensorDoc:
    terms = [TensorTermDoc(left=H.label(a), right=H.label(b), coeff=scalar_to_doc(c))
             for (a, b), c in sorted(t.terms())]
    return TensorDoc(terms=terms, text=H.render(t))


def fraction_to_doc(a: Fraction) -> FractionDoc:
    L = a.owner
    return FractionDoc(
        num=element_to_doc(L.host, a.numerator),
        den=list(a.word),
        names=list(L.monoid.names),
        text=a.render(),
    )


# ---------------------------------------------------------------------------
# Algebras
# ---------------------------------------------------------------------------


def wba_to_doc(H: BasedWBA, cutoff: Optional[int] = None) -> WBADoc:
    """Structure tables of H on basis elements of degree ≤ cutoff."""
    top = H.cutoff if cutoff is None else cutoff
    basis = H.basis() if H.cutoff is None else H.basis(up_to=top)
    labels: Dict[int, list] = {}
    for b in basis:
        labels.setdefault(b.degree, []).append(H.label(b))
    product = [
        ProductEntry(left=H.label(a), right=H.label(b), value=element_to_doc(H, H.mul_basis(a, b)))
        for a, b in iter_tuples(basis, 2, top if H.cutoff is not None else None)
        if H.mul_basis(a, b)
    ]
    coproduct = [CoproductEntry(basis=H.label(b), value=tensor_to_doc(H, H.delta_basis(b))) for b in basis]
    counit = {H.label(b): scalar_to_doc(H.counit_basis(b)) for b in basis}
    return WBADoc(
        name=H.name,
        conductor=H.field.conductor,
        cutoff=None if H.cutoff is None else top,
        labels=labels,
        unit=element_to_doc(H, H.one()),
        product=product,
        coproduct=coproduct,
        counit=counit,
    )


def wba_from_doc(doc: WBADoc) -> TableWBA:
    """A table algebra from its document; products not listed are zero."""
    field = CycloField.of(doc.conductor)
    index = {lab: BasisId(d, i) for d, labs in doc.labels.items() for i, lab in enumerate(labs)}

    def key(label: str) -> BasisId:
        try:
            return index[label]
        except KeyError:
            raise DocumentError(f"{doc.name} has no basis element labelled {label!r}") from None

    def element(value: ElementDoc) -> Element:
        return Element(field, {key(t.label): scalar_from_doc(t.coeff, field) for t in value.terms})

    product = {(key(e.left), key(e.right)): element(e.value) for e in doc.product}
    coproduct = {
        key(e.basis): Tensor(field, {(key(t.left), key(t.right)): scalar_from_doc(t.coeff, field)
                                     for t in e.value.terms})
        for e in doc.coproduct
    }
    counit = {key(lab): scalar_from_doc(value, field) for lab, value in doc.counit.items()}
    return TableWBA(doc.name, field, doc.labels, product, coproduct, counit, element(doc.unit), cutoff=doc.cutoff)


def rform_to_doc(r: RForm, cutoff: Optional[int] = None) -> RFormDoc:
    H = r.host
    plain, bar = r.table(cutoff), r.table(cutoff, bar=True)
    zero = H.field.zero()
    entries = [
        RFormEntry(left=H.label(a), right=H.label(b), value=scalar_to_doc(plain.get((a, b), zero)),
                   bar=scalar_to_doc(bar.get((a, b), zero)))
        for a, b in sorted(set(plain) | set(bar))
    ]
    return RFormDoc(algebra=H.name, mode=r.mode, entries=entries)


def graph_from_doc(doc: Union[GraphDoc, Dict[str, Any]]) -> DirectedGraph:
    if not isinstance(doc, GraphDoc):
        try:
            doc = GraphDoc(**doc)
        except ValidationError as exc:
            raise DocumentError(f"invalid graph document: {exc}") from None
    try:
        return DirectedGraph.from_document(doc)
    except ValueError as exc:
        raise DocumentError(str(exc)) from None


# ---------------------------------------------------------------------------
# Files
# ---------------------------------------------------------------------------


def dumps(document: Union[BaseModel, Dict[str, Any]]) -> str:
    data = document.model_dump(mode="json") if isinstance(document, BaseModel) else document
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def emit(document: Union[BaseModel, Dict[str, Any]], output: str = "-") -> None:
    """Write a document to a path, or to stdout for '-'."""
    text = dumps(document)
    if output == "-":
        sys.stdout.write(text)
        return
    Path(output).write_text(text, encoding="utf-8")
    logger.info(f"wrote {output}")


def load_json(path: str) -> Dict[str, Any]:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON in {path}: {exc}") from None


def load_wba(path: str) -> TableWBA:
    try:
        return wba_from_doc(WBADoc(**load_json(path)))
    except ValidationError as exc:
        raise DocumentError(f"invalid algebra document {path}: {exc}") from None


def fraction_from_doc(L: LocalizedWBA, doc: FractionDoc) -> Fraction:
    return L.fraction(element_from_doc(L.host, doc.num), doc.den)
