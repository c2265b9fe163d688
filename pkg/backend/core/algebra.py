"""
Based Algebras

Weak bialgebras presented by structure constants on an explicit basis, with
sparse elements and tensors.

Structure rules are looked up lazily and memoized per basis pair, so graded
algebras truncated at a degree cutoff only materialize what a computation
touches. Any request above the cutoff raises DegreeOverflowError.
"""

import itertools
import logging
from fractions import Fraction
from typing import Callable, Dict, Iterable, Iterator, List, Mapping, NamedTuple, Optional, Sequence, Tuple, Union

from backend.core.errors import DegreeOverflowError, FieldMismatchError, WBAError
from backend.core.exactfield import CycloField, Rational, Scalar

logger = logging.getLogger(__name__)


class BasisId(NamedTuple):
    degree: int
    index: int


Coefficient = Union[Scalar, Rational]


class _Sparse:
    """Shared arithmetic for sparse combinations keyed by basis data."""

    __slots__ = ("field", "_terms")

    def __init__(self, field: CycloField, terms: Optional[Mapping] = None):
        self.field = field
        clean = {}
        if terms:
            for key, coeff in terms.items():
                coeff = field.coerce(coeff)
                if not coeff.is_zero():
                    clean[key] = coeff
        self._terms = clean

    @classmethod
    def _raw(cls, field, terms):
        obj = cls.__new__(cls)
        obj.field = field
        obj._terms = terms
        return obj

    def _check(self, other):
        if type(other) is not type(self):
            return False
        if other.field != self.field:
            raise FieldMismatchError(
                f"{type(self).__name__} over ℚ(ζ_{self.field.conductor}) combined with ℚ(ζ_{other.field.conductor})"
            )
        return True

    def terms(self):
        return self._terms.items()

    def coefficient(self, key) -> Scalar:
        return self._terms.get(key, self.field.zero())

    def support(self) -> List:
        return sorted(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        out = dict(self._terms)
        for key, coeff in other._terms.items():
            new = out.get(key)
            new = coeff if new is None else new + coeff
            if new.is_zero():
                out.pop(key, None)
            else:
                out[key] = new
        return self._raw(self.field, out)

    def __neg__(self):
        return self._raw(self.field, {k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        return self + (-other)

    def scale(self, coeff: Coefficient):
        coeff = self.field.coerce(coeff)
        if coeff.is_zero():
            return self._raw(self.field, {})
        return self._raw(self.field, {k: v * coeff for k, v in self._terms.items()})

    def __rmul__(self, coeff):
        if isinstance(coeff, (Scalar, int, Fraction)):
            return self.scale(coeff)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, _Sparse) or type(other) is not type(self):
            return NotImplemented
        return self.field == other.field and self._terms == other._terms

    __hash__ = None


class Element(_Sparse):
    """Finite linear combination of basis elements of one algebra."""

    __slots__ = ()

    @classmethod
    def zero(cls, field: CycloField) -> "Element":
        return cls._raw(field, {})

    @classmethod
    def basis(cls, field: CycloField, b: BasisId, coeff: Coefficient = 1) -> "Element":
        return cls(field, {b: coeff})

    def degrees(self) -> List[int]:
        return sorted({b.degree for b in self._terms})

    def max_degree(self) -> int:
        return max((b.degree for b in self._terms), default=0)

    def homogeneous(self, degree: int) -> "Element":
        return Element._raw(self.field, {b: c for b, c in self._terms.items() if b.degree == degree})

    def render(self, label: Callable[[BasisId], str]) -> str:
        return _render(self._terms, lambda key: label(key))


class Tensor(_Sparse):
    """Finite linear combination of n-fold tensors of basis elements."""

    __slots__ = ()

    @classmethod
    def zero(cls, field: CycloField) -> "Tensor":
        return cls._raw(field, {})

    @classmethod
    def of(cls, *factors: Element) -> "Tensor":
        field = factors[0].field
        out: Dict[Tuple[BasisId, ...], Scalar] = {}
        for combo in itertools.product(*(f.terms() for f in factors)):
            key = tuple(b for b, _ in combo)
            coeff = field.one()
            for _, c in combo:
                coeff = coeff * c
            out[key] = out[key] + coeff if key in out else coeff
        return cls(field, out)

    def render(self, label: Callable[[BasisId], str]) -> str:
        return _render(self._terms, lambda key: "⊗".join(label(b) for b in key))


def _render(terms: Mapping, label: Callable) -> str:
    if not terms:
        return "0"
    parts = []
    for key in sorted(terms):
        coeff = terms[key]
        name = label(key)
        if coeff == 1:
            parts.append(name)
        elif coeff == -1:
            parts.append(f"-{name}")
        else:
            parts.append(f"{coeff}*{name}")
    return " + ".join(parts).replace("+ -", "- ")


class LinearMap:
    """
    Linear map between based algebras, given on basis elements either by an
    explicit table or by a rule evaluated lazily and memoized.
    """

    def __init__(
        self,
        source: "BasedWBA",
        target: "BasedWBA",
        images: Optional[Mapping[BasisId, Element]] = None,
        rule: Optional[Callable[[BasisId], Element]] = None,
        name: str = "map",
    ):
        if images is None and rule is None:
            raise ValueError("a linear map needs basis images or a rule")
        self.source = source
        self.target = target
        self.name = name
        self._images: Dict[BasisId, Element] = dict(images or {})
        self._rule = rule

    def on_basis(self, b: BasisId) -> Element:
        image = self._images.get(b)
        if image is None:
            if self._rule is None:
                raise KeyError(f"{self.name} has no image for basis element {self.source.label(b)}")
            image = self._rule(b)
            self._images[b] = image
        return image

    def defined_on(self) -> List[BasisId]:
        return sorted(self._images)

    def __call__(self, x: Element) -> Element:
        out = Element.zero(self.target.field)
        for b, c in x.terms():
            out = out + self.on_basis(b).scale(c)
        return out

    def compose(self, first: "LinearMap", name: Optional[str] = None) -> "LinearMap":
        """self ∘ first."""
        return LinearMap(first.source, self.target, rule=lambda b: self(first.on_basis(b)),
                         name=name or f"{self.name}∘{first.name}")


# ---------------------------------------------------------------------------
# Based weak bialgebras
# ---------------------------------------------------------------------------


class BasedWBA:
    """
    A weak bialgebra with a basis graded by degree.

    Subclasses provide `_product`, `_coproduct`, `_counit` and `_unit` on basis
    elements. `cutoff` is None for finite-dimensional algebras, otherwise the
    largest degree that may be materialized.
    """

    def __init__(
        self,
        name: str,
        field: CycloField,
        cutoff: Optional[int] = None,
        words: Optional[Mapping[BasisId, Tuple[BasisId, ...]]] = None,
        generators: Optional[Sequence[BasisId]] = None,
    ):
        self.name = name
        self.field = field
        self.cutoff = cutoff
        self.words = dict(words) if words is not None else None
        self.generators = list(generators) if generators is not None else None
        self._mul_cache: Dict[Tuple[BasisId, BasisId], Element] = {}
        self._delta_cache: Dict[BasisId, Tensor] = {}
        self._counit_cache: Dict[BasisId, Scalar] = {}
        self._unit_element: Optional[Element] = None
        self._unit_delta: Optional[Tensor] = None

    # -- basis (subclass hooks) -----------------------------------------------

    def dim(self, degree: int) -> int:
        raise NotImplementedError

    def label(self, b: BasisId) -> str:
        raise NotImplementedError

    def max_degree(self) -> int:
        """Largest degree with basis elements that may be listed."""
        return 0 if self.cutoff is None else self.cutoff

    def _product(self, a: BasisId, b: BasisId) -> Element:
        raise NotImplementedError

    def _coproduct(self, a: BasisId) -> Tensor:
        raise NotImplementedError

    def _counit(self, a: BasisId) -> Scalar:
        raise NotImplementedError

    def _unit(self) -> Element:
        raise NotImplementedError

    # -- basis ----------------------------------------------------------------

    def check_degree(self, degree: int) -> None:
        if self.cutoff is not None and degree > self.cutoff:
            raise DegreeOverflowError(degree, self.cutoff)

    def dims(self, up_to: Optional[int] = None) -> Dict[int, int]:
        top = self.max_degree() if up_to is None else up_to
        return {d: self.dim(d) for d in range(top + 1)}

    def basis(self, degree: Optional[int] = None, up_to: Optional[int] = None) -> List[BasisId]:
        if degree is not None:
            self.check_degree(degree)
            return [BasisId(degree, i) for i in range(self.dim(degree))]
        top = self.max_degree() if up_to is None else min(up_to, self.max_degree())
        return [b for d in range(top + 1) for b in self.basis(d)]

    def labels(self) -> Dict[int, List[str]]:
        return {d: [self.label(b) for b in self.basis(d)] for d in range(self.max_degree() + 1)}

    def lookup(self, label: str) -> BasisId:
        for b in self.basis():
            if self.label(b) == label:
                return b
        raise KeyError(f"{self.name} has no basis element labelled {label!r}")

    def element(self, b: Union[BasisId, str], coeff: Coefficient = 1) -> Element:
        if isinstance(b, str):
            b = self.lookup(b)
        return Element.basis(self.field, b, coeff)

    def scalar(self, value: Coefficient) -> Scalar:
        return self.field.coerce(value)

    def render(self, x: Union[Element, Tensor]) -> str:
        return x.render(self.label)

    # -- algebra --------------------------------------------------------------

    def one(self) -> Element:
        if self._unit_element is None:
            self._unit_element = self._unit()
        return self._unit_element

    def mul_basis(self, a: BasisId, b: BasisId) -> Element:
        key = (a, b)
        cached = self._mul_cache.get(key)
        if cached is None:
            self.check_degree(a.degree + b.degree)
            cached = self._product(a, b)
            self._mul_cache[key] = cached
        return cached

    def mul(self, x: Element, y: Element) -> Element:
        self._same_field(x, y)
        out: Dict[BasisId, Scalar] = {}
        for a, ca in x.terms():
            for b, cb in y.terms():
                coeff = ca * cb
                for c, cc in self.mul_basis(a, b).terms():
                    value = cc * coeff
                    new = out.get(c)
                    out[c] = value if new is None else new + value
        return Element(self.field, out)

    def product(self, *factors: Element) -> Element:
        out = self.one()
        for f in factors:
            out = self.mul(out, f)
        return out

    def power(self, x: Element, k: int) -> Element:
        return self.product(*([x] * k))

    def _same_field(self, *items):
        for item in items:
            if item.field != self.field:
                raise FieldMismatchError(f"element over ℚ(ζ_{item.field.conductor}) used in {self.name}")

    # -- coalgebra ------------------------------------------------------------

    def delta_basis(self, a: BasisId) -> Tensor:
        cached = self._delta_cache.get(a)
        if cached is None:
            self.check_degree(a.degree)
            cached = self._coproduct(a)
            self._delta_cache[a] = cached
        return cached

    def counit_basis(self, a: BasisId) -> Scalar:
        cached = self._counit_cache.get(a)
        if cached is None:
            self.check_degree(a.degree)
            cached = self.field.coerce(self._counit(a))
            self._counit_cache[a] = cached
        return cached

    def delta(self, x: Element) -> Tensor:
        self._same_field(x)
        out = Tensor.zero(self.field)
        for a, c in x.terms():
            out = out + self.delta_basis(a).scale(c)
        return out

    def counit(self, x: Element) -> Scalar:
        out = self.field.zero()
        for a, c in x.terms():
            out = out + c * self.counit_basis(a)
        return out

    def unit_coproduct(self) -> Tensor:
        if self._unit_delta is None:
            self._unit_delta = self.delta(self.one())
        return self._unit_delta

    def delta2(self, x: Element) -> Tensor:
        """(Δ⊗id)Δ(x)."""
        out: Dict[Tuple[BasisId, ...], Scalar] = {}
        for (a, b), c in self.delta(x).terms():
            for (a1, a2), c1 in self.delta_basis(a).terms():
                key = (a1, a2, b)
                value = c * c1
                out[key] = out[key] + value if key in out else value
        return Tensor(self.field, out)

    # -- tensor helpers -------------------------------------------------------

    def mul_tensor(self, s: Tensor, t: Tensor) -> Tensor:
        """Componentwise product in H^{⊗n}."""
        out: Dict[Tuple[BasisId, ...], Scalar] = {}
        for ka, ca in s.terms():
            for kb, cb in t.terms():
                factors = [self.mul_basis(a, b) for a, b in zip(ka, kb)]
                if any(f.is_zero() for f in factors):
                    continue
                base = ca * cb
                for combo in itertools.product(*(f.terms() for f in factors)):
                    key = tuple(b for b, _ in combo)
                    coeff = base
                    for _, c in combo:
                        coeff = coeff * c
                    out[key] = out[key] + coeff if key in out else coeff
        return Tensor(self.field, out)

    def tensor(self, *factors: Element) -> Tensor:
        return Tensor.of(*factors)

    def apply_on_factor(self, t: Tensor, position: int, fn: Callable[[Element], Element]) -> Tensor:
        """Apply a linear map to one tensor factor."""
        out = Tensor.zero(self.field)
        for key, c in t.terms():
            image = fn(Element.basis(self.field, key[position]))
            for b, cb in image.terms():
                new_key = key[:position] + (b,) + key[position + 1:]
                out = out + Tensor(self.field, {new_key: c * cb})
        return out

    # -- counital maps --------------------------------------------------------

    def counital_source(self, x: Element) -> Element:
        """ε_s(x) = Σ 1′ ε(x 1″)."""
        out = Element.zero(self.field)
        for (a, b), c in self.unit_coproduct().terms():
            value = self.counit(self.mul(x, Element.basis(self.field, b)))
            if not value.is_zero():
                out = out + Element.basis(self.field, a, c * value)
        return out

    def counital_target(self, x: Element) -> Element:
        """ε_t(x) = Σ ε(1′ x) 1″."""
        out = Element.zero(self.field)
        for (a, b), c in self.unit_coproduct().terms():
            value = self.counit(self.mul(Element.basis(self.field, a), x))
            if not value.is_zero():
                out = out + Element.basis(self.field, b, c * value)
        return out

    def __repr__(self):
        return f"<{type(self).__name__} {self.name} over ℚ(ζ_{self.field.conductor})>"


class TableWBA(BasedWBA):
    """A based WBA whose structure constants are given as explicit tables."""

    def __init__(
        self,
        name: str,
        field: CycloField,
        labels: Mapping[int, Sequence[str]],
        product: Mapping[Tuple[BasisId, BasisId], Element],
        coproduct: Mapping[BasisId, Tensor],
        counit: Mapping[BasisId, Coefficient],
        unit: Element,
        cutoff: Optional[int] = None,
        words=None,
        generators=None,
    ):
        super().__init__(name, field, cutoff=cutoff, words=words, generators=generators)
        self._labels = {int(d): list(v) for d, v in labels.items()}
        self._product_table = dict(product)
        self._coproduct_table = dict(coproduct)
        self._counit_table = dict(counit)
        self._unit_value = unit
        self._index = {lab: BasisId(d, i) for d, labs in self._labels.items() for i, lab in enumerate(labs)}

    def dim(self, degree: int) -> int:
        return len(self._labels.get(degree, []))

    def max_degree(self) -> int:
        return max(self._labels) if self._labels else 0

    def label(self, b: BasisId) -> str:
        return self._labels[b.degree][b.index]

    def lookup(self, label: str) -> BasisId:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"{self.name} has no basis element labelled {label!r}") from None

    def _product(self, a, b):
        return self._product_table.get((a, b), Element.zero(self.field))

    def _coproduct(self, a):
        return self._coproduct_table.get(a, Tensor.zero(self.field))

    def _counit(self, a):
        return self._counit_table.get(a, 0)

    def _unit(self):
        return self._unit_value


def tabulate(host: BasedWBA, name: Optional[str] = None) -> TableWBA:
    """Materialize every structure constant of host up to its cutoff."""
    basis = host.basis()
    product = {}
    for a in basis:
        for b in basis:
            if host.cutoff is None or a.degree + b.degree <= host.cutoff:
                value = host.mul_basis(a, b)
                if value:
                    product[(a, b)] = value
    return TableWBA(
        name or host.name,
        host.field,
        host.labels(),
        product,
        {a: host.delta_basis(a) for a in basis},
        {a: host.counit_basis(a) for a in basis},
        host.one(),
        cutoff=host.cutoff,
        words=host.words,
        generators=host.generators,
    )


# ---------------------------------------------------------------------------
# Tensor products
# ---------------------------------------------------------------------------


class TensorWBA(BasedWBA):
    """H₁⊗H₂ with componentwise product and coproduct; degrees add."""

    def __init__(self, left: BasedWBA, right: BasedWBA, name: Optional[str] = None):
        if left.field != right.field:
            raise FieldMismatchError(f"cannot tensor {left.name} and {right.name}: different fields")
        cutoffs = [c for c in (left.cutoff, right.cutoff) if c is not None]
        super().__init__(name or f"{left.name}⊗{right.name}", left.field, cutoff=min(cutoffs) if cutoffs else None)
        self.left = left
        self.right = right
        self._pairs: Dict[int, List[Tuple[BasisId, BasisId]]] = {}
        self._pair_index: Dict[Tuple[BasisId, BasisId], BasisId] = {}

    def max_degree(self) -> int:
        if self.cutoff is None:
            return self.left.max_degree() + self.right.max_degree()
        return self.cutoff

    def _pairs_of(self, degree: int) -> List[Tuple[BasisId, BasisId]]:
        pairs = self._pairs.get(degree)
        if pairs is None:
            pairs = []
            for d1 in range(degree + 1):
                d2 = degree - d1
                if d1 > self.left.max_degree() or d2 > self.right.max_degree():
                    continue
                pairs.extend(itertools.product(self.left.basis(d1), self.right.basis(d2)))
            self._pairs[degree] = pairs
            for i, pair in enumerate(pairs):
                self._pair_index[pair] = BasisId(degree, i)
        return pairs

    def dim(self, degree: int) -> int:
        return len(self._pairs_of(degree))

    def components(self, b: BasisId) -> Tuple[BasisId, BasisId]:
        return self._pairs_of(b.degree)[b.index]

    def pair_id(self, a: BasisId, b: BasisId) -> BasisId:
        self._pairs_of(a.degree + b.degree)
        return self._pair_index[(a, b)]

    def label(self, b: BasisId) -> str:
        a1, a2 = self.components(b)
        return f"{self.left.label(a1)}⊗{self.right.label(a2)}"

    def pure(self, x: Element, y: Element) -> Element:
        """The element x⊗y."""
        out: Dict[BasisId, Scalar] = {}
        for a, ca in x.terms():
            for b, cb in y.terms():
                self.check_degree(a.degree + b.degree)
                out[self.pair_id(a, b)] = ca * cb
        return Element(self.field, out)

    def split(self, x: Element) -> Tensor:
        """View an element of H₁⊗H₂ as a 2-tensor of component basis elements."""
        return Tensor(self.field, {self.components(b): c for b, c in x.terms()})

    def join(self, t: Tensor) -> Element:
        out = Element.zero(self.field)
        for (a, b), c in t.terms():
            out = out + Element.basis(self.field, self.pair_id(a, b), c)
        return out

    def lift_maps(self, f: Callable[[Element], Element], g: Callable[[Element], Element]) -> Callable[[Element], Element]:
        """The map f⊗g on elements."""

        def mapped(x: Element) -> Element:
            out = Element.zero(self.field)
            for (a, b), c in self.split(x).terms():
                left = f(Element.basis(self.field, a))
                right = g(Element.basis(self.field, b))
                out = out + self.pure(left, right).scale(c)
            return out

        return mapped

    def _product(self, a, b):
        a1, a2 = self.components(a)
        b1, b2 = self.components(b)
        return self.pure(self.left.mul_basis(a1, b1), self.right.mul_basis(a2, b2))

    def _coproduct(self, a):
        a1, a2 = self.components(a)
        out: Dict[Tuple[BasisId, BasisId], Scalar] = {}
        for (x1, x2), c1 in self.left.delta_basis(a1).terms():
            for (y1, y2), c2 in self.right.delta_basis(a2).terms():
                key = (self.pair_id(x1, y1), self.pair_id(x2, y2))
                value = c1 * c2
                out[key] = out[key] + value if key in out else value
        return Tensor(self.field, out)

    def _counit(self, a):
        a1, a2 = self.components(a)
        return self.left.counit_basis(a1) * self.right.counit_basis(a2)

    def _unit(self):
        return self.pure(self.left.one(), self.right.one())


def tensor_wba(left: BasedWBA, right: BasedWBA, name: Optional[str] = None) -> TensorWBA:
    return TensorWBA(left, right, name=name)


def iter_tuples(basis: Sequence[BasisId], arity: int, cutoff: Optional[int]) -> Iterator[Tuple[BasisId, ...]]:
    """Basis tuples whose total degree stays within the cutoff."""
    for combo in itertools.product(basis, repeat=arity):
        if cutoff is None or sum(b.degree for b in combo) <= cutoff:
            yield combo


def mutated(host: TableWBA, kind: str, key, delta: Coefficient = 1) -> TableWBA:
    """
    Copy of a table algebra with one structure constant perturbed.

    kind is "product" (key = (a, b), adds delta·a to the product), "coproduct"
    (key = a, adds delta·a⊗a) or "counit" (key = a).
    """
    product = dict(host._product_table)
    coproduct = dict(host._coproduct_table)
    counit = dict(host._counit_table)
    if kind == "product":
        a, b = key
        product[(a, b)] = product.get((a, b), Element.zero(host.field)) + Element.basis(host.field, a, delta)
    elif kind == "coproduct":
        coproduct[key] = coproduct.get(key, Tensor.zero(host.field)) + Tensor(host.field, {(key, key): delta})
    elif kind == "counit":
        counit[key] = host.field.coerce(counit.get(key, 0)) + host.field.coerce(delta)
    else:
        raise WBAError(f"unknown mutation kind {kind!r}")
    return TableWBA(f"{host.name}~{kind}", host.field, host._labels, product, coproduct, counit,
                    host.one(), cutoff=host.cutoff, words=host.words, generators=host.generators)
