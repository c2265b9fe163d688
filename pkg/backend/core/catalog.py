"""
Example Catalog

Constructors for the named example algebras and the manifest runner.

The manifest in shared/dictionaries/catalog.yaml lists, per example, its
default parameters, the named elements generating the denominator monoid, the
annihilator strategy and the check suites it must pass.
"""

import inspect
import logging
import pathlib
from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction as Rational
from functools import lru_cache
from typing import Any, Callable, Dict, List, Mapping, Optional, Sequence, Tuple

import yaml

from backend.core.algebra import BasedWBA, BasisId, Element, LinearMap, TableWBA, Tensor, TensorWBA
from backend.core.axioms import check_antipode, check_group_likes, check_wba_axioms, check_weakness
from backend.core.coquasi import (
    ConjugationAction,
    RForm,
    RecursiveRForm,
    check_almost_central,
    check_coquasi,
    commutative_rform,
    conjugation,
)
from backend.core.errors import AlmostCentralityError, CatalogError, RegularityError
from backend.core.exactfield import CycloField, RootOfUnityLevel, Scalar
from backend.core.graphs import DirectedGraph, build_graph_wba, linear_graph
from backend.core.laurent import LaurentModel, check_isomorphism
from backend.core.localization import (
    AnnihilatorStrategy,
    DenominatorMonoid,
    LocalizedWBA,
    check_fraction_coalgebra,
    check_fraction_ring,
    check_ore,
    check_regular,
    dimension_table,
    localize,
)
from backend.core.quantum import mq2_determinant, mq2_relations, quantum_determinant, rtt_relations
from backend.core.quotient import GradedQuotient, check_central, free_matrix_bialgebra, tensor_algebra
from backend.core.settings import TOOL_VERSION, settings
from backend.core.universal import envelope_factorization
from shared.schemas.config import ExampleDescriptor
from shared.schemas.reports import RunReport

logger = logging.getLogger(__name__)

ROOT = pathlib.Path(__file__).resolve().parents[2]
CATALOG_FILE = ROOT / "shared/dictionaries/catalog.yaml"

Map = Callable[[Element], Element]


def _identity(x: Element) -> Element:
    return x


@lru_cache(maxsize=1)
def _manifest() -> Dict[str, ExampleDescriptor]:
    raw = yaml.safe_load(CATALOG_FILE.read_text()) or []
    return {item["name"]: ExampleDescriptor(**item) for item in raw}


def list_examples() -> List[ExampleDescriptor]:
    return list(_manifest().values())


def describe(name: str) -> ExampleDescriptor:
    try:
        return _manifest()[name]
    except KeyError:
        raise CatalogError(f"unknown example {name!r}; known: {', '.join(_manifest())}") from None


# ---------------------------------------------------------------------------
# Table helpers
# ---------------------------------------------------------------------------


def _table_wba(
    name: str,
    field: CycloField,
    labels: Sequence[str],
    product: Mapping[Tuple[str, str], Mapping[str, int]],
    coproduct: Mapping[str, Mapping[Tuple[str, str], int]],
    counit: Mapping[str, int],
    unit: str,
    words: Optional[Mapping[str, Sequence[str]]] = None,
    generators: Optional[Sequence[str]] = None,
) -> TableWBA:
    """A degree-0 table algebra given with labels; missing products are zero."""
    ids = {lab: BasisId(0, i) for i, lab in enumerate(labels)}

    def elem(terms: Mapping[str, Any]) -> Element:
        return Element(field, {ids[k]: field.coerce(v) for k, v in terms.items() if v})

    prod = {(ids[a], ids[b]): elem(product.get((a, b), {})) for a in labels for b in labels}
    delta = {
        ids[a]: Tensor(field, {(ids[x], ids[y]): field.coerce(c) for (x, y), c in coproduct[a].items()})
        for a in labels
    }
    return TableWBA(
        name,
        field,
        {0: list(labels)},
        prod,
        delta,
        {ids[a]: counit[a] for a in labels},
        elem({unit: 1}),
        words={ids[k]: tuple(ids[x] for x in w) for k, w in words.items()} if words else None,
        generators=[ids[g] for g in generators] if generators else None,
    )


def _rational(value: Any) -> Rational:
    try:
        return Rational(str(value))
    except (ValueError, ZeroDivisionError):
        raise CatalogError(f"expected a rational number, got {value!r}") from None


def _boolean(value: Any) -> bool:
    if isinstance(value, bool):
        return value
    text = str(value).strip().lower()
    if text in ("1", "true", "yes", "on"):
        return True
    if text in ("0", "false", "no", "off"):
        return False
    raise CatalogError(f"expected a boolean, got {value!r}")


PARAM_TYPES: Dict[str, Callable[[Any], Any]] = {
    "r": int,
    "alpha": _rational,
    "include_nilpotent": _boolean,
    "antipode": str,
}


# ---------------------------------------------------------------------------
# Finite-dimensional examples
# ---------------------------------------------------------------------------


def sweedler(alpha: Any = 1, field: Optional[CycloField] = None) -> Tuple[TableWBA, RecursiveRForm]:
    """
    Sweedler's four-dimensional algebra with basis 1, f, y, fy, f² = 1,
    y² = 0, yf = −fy, Δf = f⊗f, Δy = y⊗1 + f⊗y, and the r-form with
    r(f⊗f) = −1, r(y⊗y) = α.
    """
    F = field or CycloField.of(1)
    a = F.coerce(_rational(alpha))
    product = {
        ("1", "1"): {"1": 1}, ("1", "f"): {"f": 1}, ("1", "y"): {"y": 1}, ("1", "fy"): {"fy": 1},
        ("f", "1"): {"f": 1}, ("y", "1"): {"y": 1}, ("fy", "1"): {"fy": 1},
        ("f", "f"): {"1": 1}, ("f", "y"): {"fy": 1}, ("f", "fy"): {"y": 1},
        ("y", "f"): {"fy": -1},
        ("fy", "f"): {"y": -1},
    }
    coproduct = {
        "1": {("1", "1"): 1},
        "f": {("f", "f"): 1},
        "y": {("y", "1"): 1, ("f", "y"): 1},
        "fy": {("fy", "f"): 1, ("1", "fy"): 1},
    }
    W = _table_wba(
        "W", F, ["1", "f", "y", "fy"], product, coproduct,
        counit={"1": 1, "f": 1, "y": 0, "fy": 0}, unit="1",
        words={"1": (), "f": ("f",), "y": ("y",), "fy": ("f", "y")},
        generators=["f", "y"],
    )
    f, y = W.lookup("f"), W.lookup("y")
    values = {(f, f): F.coerce(-1), (y, y): a}
    return W, RecursiveRForm(W, values, dict(values))


def sweedler_antipodes(W: TableWBA) -> Dict[str, LinearMap]:
    """The antipode S(y) = −fy, S(fy) = y and the variant S(y) = y, S(fy) = −fy."""
    e = W.element
    base = {W.lookup("1"): e("1"), W.lookup("f"): e("f")}
    corrected = dict(base)
    corrected[W.lookup("y")] = e("fy", -1)
    corrected[W.lookup("fy")] = e("y")
    printed = dict(base)
    printed[W.lookup("y")] = e("y")
    printed[W.lookup("fy")] = e("fy", -1)
    return {
        "corrected": LinearMap(W, W, images=corrected, name="S"),
        "as_printed": LinearMap(W, W, images=printed, name="S′"),
    }


H4_LABELS = ("0̄", "1̄", "2̄", "3̄")


def h4(field: Optional[CycloField] = None) -> TableWBA:
    """The monoid algebra of (ℤ/4ℤ, ·) with Δx = x⊗x and ε(x) = 1."""
    F = field or CycloField.of(1)
    labels = list(H4_LABELS)
    product = {(labels[i], labels[j]): {labels[(i * j) % 4]: 1} for i in range(4) for j in range(4)}
    coproduct = {lab: {(lab, lab): 1} for lab in labels}
    return _table_wba("H₄", F, labels, product, coproduct, counit={lab: 1 for lab in labels}, unit="1̄")


# ---------------------------------------------------------------------------
# Graded examples
# ---------------------------------------------------------------------------


def mq2(r: int = 3, cutoff: Optional[int] = None) -> Tuple[GradedQuotient, RecursiveRForm, Element]:
    """M_q(2) over ℚ(ζ_{8r}) with q = ε², its r-form and det_q = da − qbc."""
    level = RootOfUnityLevel(r)
    q = level.q
    free = free_matrix_bialgebra(2, level.field, cutoff if cutoff is not None else settings().cutoff)
    Q = GradedQuotient(free, mq2_relations(free, q), name="M_q(2)")
    a, b, c, d = Q.generators
    qi = q.inverse()
    values = {(a, a): q, (a, d): 1, (d, a): 1, (d, d): q, (c, b): q - qi}
    bar_values = {(a, a): qi, (a, d): 1, (d, a): 1, (d, d): qi, (c, b): qi - q}
    det = Q.project(mq2_determinant(free, q))
    return Q, RecursiveRForm(Q, values, bar_values), det


def mhatq2(r: int = 3, cutoff: Optional[int] = None) -> Tuple[GradedQuotient, Element]:
    """The graph algebra of the level-r linear graph modulo the RTT relations, and det_q."""
    level = RootOfUnityLevel(r)
    H = build_graph_wba(linear_graph(r), cutoff if cutoff is not None else settings().cutoff, level.field,
                        name=f"A({r})")
    Q = GradedQuotient(H, rtt_relations(level, H), name="M̂_q(2)")
    return Q, Q.project(quantum_determinant(level, H))


def radford_tensor(cutoff: Optional[int] = None) -> BasedWBA:
    """T(V) on V = span{1v, i} with Δ(1v) = 1v⊗1v − i⊗i, Δ(i) = 1v⊗i + i⊗1v."""
    return tensor_algebra(
        ("1v", "i"),
        [[(1, 0, 0), (-1, 1, 1)], [(1, 0, 1), (1, 1, 0)]],
        [1, 0],
        cutoff=cutoff if cutoff is not None else settings().cutoff,
    )


def glq2_antipode(model: LaurentModel, q: Scalar) -> LinearMap:
    """S(a) = dX, S(b) = −qbX, S(c) = −q⁻¹cX, S(d) = aX, S(X) = det_q on generators."""
    Q = model.host
    X = model.inverse_element()
    a, b, c, d = (model.embed(Q.element(g)) for g in Q.generators)

    def key(x: Element) -> BasisId:
        (b_id,) = x.support()
        return b_id

    m = model.mul
    images = {
        key(a): m(d, X),
        key(b): m(b, X).scale(-q),
        key(c): m(c, X).scale(-q.inverse()),
        key(d): m(a, X),
        key(X): model.generator(),
    }
    return LinearMap(model, model, images=images, name="S")


def laurent(Q: GradedQuotient, det: Element, name: str) -> LaurentModel:
    model = LaurentModel(Q, det, name=name)
    X = model.inverse_element()
    gens = [model.embed(Q.element(g)) for g in Q.generators or []]
    model.generators = [x.support()[0] for x in gens + [X]]
    return model


# ---------------------------------------------------------------------------
# Entries
# ---------------------------------------------------------------------------


@dataclass
class CatalogEntry:
    """A built example with its named elements and manifest data."""
    name: str
    host: BasedWBA
    descriptor: ExampleDescriptor
    parameters: Dict[str, Any]
    elements: Dict[str, Element]
    rform: Optional[RForm] = None
    rform_conjugation: bool = False
    conjugations: Dict[str, Tuple[Map, Map]] = dataclass_field(default_factory=dict)
    generator_names: List[str] = dataclass_field(default_factory=list)
    antipode: Optional[LinearMap] = None
    antipode_elements: Optional[List[BasisId]] = None
    extras: Dict[str, Any] = dataclass_field(default_factory=dict)

    @property
    def cutoff(self) -> Optional[int]:
        return self.host.cutoff

    def element(self, name: str) -> Element:
        try:
            return self.elements[name]
        except KeyError:
            raise CatalogError(f"{self.name} has no element named {name!r}; known: {', '.join(self.elements)}") from None

    def strategy(self, kind: Optional[str] = None) -> AnnihilatorStrategy:
        kind = kind or self.descriptor.strategy
        if kind == "finite-test-set":
            return AnnihilatorStrategy.finite_test_set([self.element(n) for n in self.descriptor.test_set or ["one"]])
        if kind == "declared-regular":
            return AnnihilatorStrategy.declared_regular()
        return AnnihilatorStrategy.bounded_search(settings().search_limit)

    def monoid(self, names: Optional[Sequence[str]] = None, strategy: Optional[str] = None) -> DenominatorMonoid:
        names = list(names) if names else list(self.generator_names)
        if not names:
            raise CatalogError(f"{self.name} has no denominator generators")
        gens = [self.element(n) for n in names]
        if self.rform_conjugation and self.rform is not None:
            action = ConjugationAction.from_rform(self.rform, gens)
        elif any(n in self.conjugations for n in names):
            maps = [self.conjugations.get(n, (_identity, _identity)) for n in names]
            action = ConjugationAction.from_maps(self.host, gens, [m[0] for m in maps], [m[1] for m in maps])
        else:
            action = ConjugationAction.identity(self.host, gens)
        return DenominatorMonoid(self.host, gens, action, self.strategy(strategy), names)


def _named(H: BasedWBA, labels: Mapping[str, str]) -> Dict[str, Element]:
    return {name: H.element(label) for name, label in labels.items()}


def _build_sweedler(alpha: Any = 1, antipode: str = "corrected", field: Optional[CycloField] = None) -> Dict[str, Any]:
    W, r = sweedler(alpha, field)
    antipodes = sweedler_antipodes(W)
    if antipode not in antipodes:
        raise CatalogError(f"antipode must be one of {', '.join(antipodes)}")
    return dict(
        host=W, rform=r, rform_conjugation=True,
        elements=_named(W, {"one": "1", "f": "f", "y": "y", "fy": "fy"}),
        antipode=antipodes[antipode], extras={"antipodes": antipodes},
    )


def _build_h4() -> Dict[str, Any]:
    H = h4()
    names = {"one": "1̄", "zerobar": "0̄", "onebar": "1̄", "twobar": "2̄", "threebar": "3̄"}
    return dict(host=H, rform=commutative_rform(H), elements=_named(H, names))


def _matrix_elements(Q: GradedQuotient) -> Dict[str, Element]:
    return {name: Q.element(g) for name, g in zip("abcd", Q.generators)}


def _build_mq2(r: int = 3, cutoff: Optional[int] = None) -> Dict[str, Any]:
    Q, rform, det = mq2(r, cutoff)
    elements = {"one": Q.one(), **_matrix_elements(Q), "detq": det}
    return dict(host=Q, rform=rform, elements=elements, extras={"det": det})


def _build_mhatq2(r: int = 3, cutoff: Optional[int] = None) -> Dict[str, Any]:
    Q, det = mhatq2(r, cutoff)
    return dict(host=Q, elements={"one": Q.one(), "detq": det}, extras={"det": det})


def _build_glq2(r: int = 3, cutoff: Optional[int] = None) -> Dict[str, Any]:
    Q, _, det = mq2(r, cutoff)
    model = laurent(Q, det, "GL_q(2)")
    elements = {"one": model.one(), "X": model.inverse_element(), "detq": model.generator()}
    elements.update({name: model.embed(x) for name, x in _matrix_elements(Q).items()})
    return dict(
        host=model, elements=elements,
        antipode=glq2_antipode(model, RootOfUnityLevel(r).q), antipode_elements=list(model.generators),
        extras={"base": Q, "det": det},
    )


def _build_glhatq2(r: int = 3, cutoff: Optional[int] = None) -> Dict[str, Any]:
    Q, det = mhatq2(r, cutoff)
    model = laurent(Q, det, "ĜL_q(2)")
    elements = {"one": model.one(), "X": model.inverse_element(), "detq": model.generator()}
    return dict(host=model, elements=elements, extras={"base": Q, "det": det})


def _build_radford(cutoff: Optional[int] = None) -> Dict[str, Any]:
    T = radford_tensor(cutoff)
    return dict(host=T, elements={"one": T.one(), "1v": T.element("1v"), "i": T.element("i")})


def _sweedler_conjugation(W: BasedWBA, r: RForm) -> Tuple[Map, Map]:
    f = W.element("f")
    return (lambda x: conjugation(r, f, x, "forward")), (lambda x: conjugation(r, f, x, "inverse"))


def _build_w_mq2(r: int = 3, alpha: Any = 1, cutoff: Optional[int] = None) -> Dict[str, Any]:
    level = RootOfUnityLevel(r)
    W, rW = sweedler(alpha, level.field)
    Q, _, det = mq2(r, cutoff)
    T = TensorWBA(W, Q)
    forward, inverse = _sweedler_conjugation(W, rW)
    one_w, one_q = W.one(), Q.one()
    elements = {
        "one": T.one(),
        "f": T.pure(W.element("f"), one_q),
        "y": T.pure(W.element("y"), one_q),
        "detq": T.pure(one_w, det),
    }
    elements.update({name: T.pure(one_w, x) for name, x in _matrix_elements(Q).items()})
    return dict(
        host=T, elements=elements,
        conjugations={"f": (T.lift_maps(forward, _identity), T.lift_maps(inverse, _identity))},
    )


def _build_h4_mq2(r: int = 3, cutoff: Optional[int] = None) -> Dict[str, Any]:
    level = RootOfUnityLevel(r)
    H = h4(level.field)
    Q, _, det = mq2(r, cutoff)
    T = TensorWBA(H, Q)
    one_h = H.element("1̄")
    elements = {
        "one": T.one(),
        "zerobar": T.pure(H.element("0̄"), Q.one()),
        "onebar": T.one(),
        "detq": T.pure(one_h, det),
    }
    return dict(host=T, elements=elements)


def _build_w_h4_mhat(r: int = 3, alpha: Any = 1, include_nilpotent: bool = True,
                     cutoff: Optional[int] = None) -> Dict[str, Any]:
    level = RootOfUnityLevel(r)
    W, rW = sweedler(alpha, level.field)
    H = h4(level.field)
    M, det = mhatq2(r, cutoff)
    inner = TensorWBA(H, M)
    T = TensorWBA(W, inner)
    forward, inverse = _sweedler_conjugation(W, rW)
    one_inner = inner.one()
    elements = {
        "one": T.one(),
        "f": T.pure(W.element("f"), one_inner),
        "y": T.pure(W.element("y"), one_inner),
        "zerobar": T.pure(W.one(), inner.pure(H.element("0̄"), M.one())),
        "detq": T.pure(W.one(), inner.pure(H.element("1̄"), det)),
    }
    out = dict(
        host=T, elements=elements,
        conjugations={"f": (T.lift_maps(forward, _identity), T.lift_maps(inverse, _identity))},
    )
    if not include_nilpotent:
        out["generator_names"] = ["f", "zerobar", "detq"]
    return out


BUILDERS: Dict[str, Callable[..., Dict[str, Any]]] = {
    "sweedler": _build_sweedler,
    "h4": _build_h4,
    "mq2": _build_mq2,
    "glq2": _build_glq2,
    "mhatq2": _build_mhatq2,
    "glhatq2": _build_glhatq2,
    "radford": _build_radford,
    "w-mq2": _build_w_mq2,
    "h4-mq2": _build_h4_mq2,
    "w-h4-mhat": _build_w_h4_mhat,
}


def _coerce_parameters(name: str, builder: Callable, params: Mapping[str, Any]) -> Dict[str, Any]:
    accepted = set(inspect.signature(builder).parameters) - {"field"}
    out = {}
    for key, value in params.items():
        if key not in accepted:
            raise CatalogError(f"{name} does not take parameter {key!r}; accepted: {', '.join(sorted(accepted))}")
        if value is None:
            continue
        convert = PARAM_TYPES.get(key, lambda v: v)
        try:
            out[key] = convert(value)
        except (TypeError, ValueError) as exc:
            raise CatalogError(f"bad value {value!r} for {key}: {exc}") from None
    if "r" in out and out["r"] < 3:
        raise CatalogError(f"level r must be at least 3, got {out['r']}")
    return out


def build(name: str, cutoff: Optional[int] = None, **params: Any) -> CatalogEntry:
    """Build a catalog example with its manifest defaults overridden by `params`."""
    descriptor = describe(name)
    builder = BUILDERS[name]
    merged = {**descriptor.parameters, **params}
    if "cutoff" in inspect.signature(builder).parameters:
        merged["cutoff"] = cutoff if cutoff is not None else descriptor.cutoff
    elif cutoff is not None:
        logger.info(f"{name} is finite-dimensional; ignoring cutoff {cutoff}")
    kwargs = _coerce_parameters(name, builder, merged)
    logger.debug(f"building {name} with {kwargs}")
    parts = builder(**kwargs)
    parts.setdefault("generator_names", list(descriptor.generators))
    shown = {k: (str(v) if isinstance(v, Rational) else v) for k, v in kwargs.items()}
    return CatalogEntry(name=name, descriptor=descriptor, parameters=shown, **parts)


def graph_entry(graph: DirectedGraph, cutoff: Optional[int] = None, name: str = "graph") -> CatalogEntry:
    """The graph WBA of a user-supplied graph, checked with the wba suite."""
    top = cutoff if cutoff is not None else settings().cutoff
    H = build_graph_wba(graph, top, name=f"A({name})")
    descriptor = ExampleDescriptor(name=name, title=f"Graph algebra of {graph.vertices} vertices",
                                   cutoff=top, suites=["wba"])
    return CatalogEntry(name=name, host=H, descriptor=descriptor, parameters={}, elements={"one": H.one()})


# ---------------------------------------------------------------------------
# Manifest runner
# ---------------------------------------------------------------------------


def _localization_of_base(entry: CatalogEntry, cutoff: Optional[int]) -> LocalizedWBA:
    Q, det = entry.extras["base"], entry.extras["det"]
    monoid = DenominatorMonoid(Q, [det], strategy=AnnihilatorStrategy.declared_regular(), names=["detq"])
    return localize(Q, monoid, cutoff)


def _suite_wba(entry: CatalogEntry, cutoff: Optional[int], run: RunReport) -> None:
    run.reports.append(check_wba_axioms(entry.host, cutoff))


def _suite_coquasi(entry: CatalogEntry, cutoff: Optional[int], run: RunReport) -> None:
    if entry.rform is None:
        raise CatalogError(f"{entry.name} has no r-form")
    both = [entry.element(n) for n, kind in entry.descriptor.group_likes.items() if kind == "both"]
    run.reports.append(check_coquasi(entry.host, entry.rform, cutoff, both))


def _suite_grouplike(entry: CatalogEntry, cutoff: Optional[int], run: RunReport) -> None:
    run.reports.append(check_group_likes(entry.host, entry.elements, entry.descriptor.group_likes))


def _suite_almost_central(entry: CatalogEntry, cutoff: Optional[int], run: RunReport) -> None:
    run.reports.append(check_almost_central(entry.host, entry.monoid().action, cutoff))


def _suite_ore(entry: CatalogEntry, cutoff: Optional[int], run: RunReport) -> None:
    run.reports.append(check_ore(entry.host, entry.monoid(), cutoff=cutoff))


def _suite_antipode(entry: CatalogEntry, cutoff: Optional[int], run: RunReport) -> None:
    if entry.antipode is None:
        raise CatalogError(f"{entry.name} has no antipode")
    run.reports.append(check_antipode(entry.host, entry.antipode, cutoff, entry.antipode_elements))


def _suite_localization(entry: CatalogEntry, cutoff: Optional[int], run: RunReport) -> None:
    part = localization_run(entry, cutoff=cutoff)
    run.reports.extend(part.reports)
    run.dimensions = part.dimensions
    run.results.update(part.results)


def _suite_coideal(entry: CatalogEntry, cutoff: Optional[int], run: RunReport) -> None:
    report = getattr(entry.host, "coideal_report", None)
    if report is None:
        raise CatalogError(f"{entry.name} is not a quotient")
    run.reports.append(report)


def _suite_central(entry: CatalogEntry, cutoff: Optional[int], run: RunReport) -> None:
    run.reports.append(check_central(entry.host, entry.element("detq"), cutoff))


def _suite_laurent(entry: CatalogEntry, cutoff: Optional[int], run: RunReport) -> None:
    model = entry.host
    run.reports.extend(model.reports)
    run.reports.append(check_isomorphism(model, _localization_of_base(entry, cutoff), cutoff))


def _suite_universal(entry: CatalogEntry, cutoff: Optional[int], run: RunReport) -> None:
    model = entry.host
    Q = entry.extras["base"]
    iota = LinearMap(Q, model, rule=lambda b: model.embed(Q.element(b)), name="ι")
    L = _localization_of_base(entry, cutoff)
    factor = envelope_factorization(L, iota, entry.antipode, inverses=[model.inverse_element()], cutoff=cutoff)
    run.reports.extend(factor.reports)


def _suite_weakness(entry: CatalogEntry, cutoff: Optional[int], run: RunReport) -> None:
    run.reports.append(check_weakness(entry.host, cutoff))


SUITE_RUNNERS: Dict[str, Callable[[CatalogEntry, Optional[int], RunReport], None]] = {
    "wba": _suite_wba,
    "coquasi": _suite_coquasi,
    "grouplike": _suite_grouplike,
    "almost_central": _suite_almost_central,
    "ore": _suite_ore,
    "antipode": _suite_antipode,
    "localization": _suite_localization,
    "coideal": _suite_coideal,
    "central": _suite_central,
    "laurent": _suite_laurent,
    "universal": _suite_universal,
    "weakness": _suite_weakness,
}


def run_manifest(entry: CatalogEntry, suites: Optional[Sequence[str]] = None, cutoff: Optional[int] = None,
                 command: str = "check") -> RunReport:
    """Run the named suites (default: the manifest's) and collect their reports."""
    chosen = list(suites) if suites else list(entry.descriptor.suites)
    run = RunReport(version=TOOL_VERSION, command=command, example=entry.name, parameters=dict(entry.parameters))
    if entry.generator_names:
        run.strategy = entry.strategy().describe()
    for suite in chosen:
        runner = SUITE_RUNNERS.get(suite)
        if runner is None:
            raise CatalogError(f"unknown suite {suite!r}")
        logger.info(f"{entry.name}: running suite {suite}")
        runner(entry, cutoff, run)
    failed = [r.suite for r in run.reports if not r.passed]
    if failed:
        logger.warning(f"{entry.name}: failing suites {', '.join(failed)}")
    return run


def localization_run(
    entry: CatalogEntry,
    at: Optional[Sequence[str]] = None,
    strategy: Optional[str] = None,
    cutoff: Optional[int] = None,
    bound: Optional[int] = None,
    command: str = "localize",
    checks: bool = True,
) -> RunReport:
    """
    Localize an example at the named generators and report the outcome. When
    the monoid is not almost central or a declared-regular generator is a zero
    divisor, the failing report is returned instead of a localization.
    """
    monoid = entry.monoid(at, strategy)
    run = RunReport(version=TOOL_VERSION, command=command, example=entry.name, parameters=dict(entry.parameters),
                    strategy=monoid.strategy.describe())
    run.results["generators"] = list(monoid.names)
    try:
        L = localize(entry.host, monoid, cutoff, bound)
    except AlmostCentralityError as exc:
        logger.warning(str(exc))
        run.reports.append(check_almost_central(entry.host, monoid.action, cutoff))
        return run
    except RegularityError as exc:
        logger.warning(str(exc))
        run.reports.extend(check_regular(entry.host, g, cutoff) for g in monoid.generators)
        return run
    run.reports.extend(L.reports)
    run.results["bound"] = L.bound
    if checks:
        run.reports.append(check_fraction_ring(L))
    if monoid.commuting:
        if checks:
            run.reports.append(check_fraction_coalgebra(L))
        run.dimensions = dimension_table(L, cutoff)
    else:
        logger.warning(f"{L.name}: generators do not commute; no dimension table")
    if L.materialized is not None:
        if checks:
            run.reports.append(check_wba_axioms(L.materialized))
        run.results["materialized_dim"] = L.materialized.dim(0)
        run.results["materialized_basis"] = [a.render() for a in L.materialized.fractions]
    return run
