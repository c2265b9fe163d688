"""
Coquasi-triangular Structure

Universal r-forms, their weak convolution inverses, the conjugation maps
I_g(x) = r̄(x′⊗g) x″ r(x‴⊗g) and the almost-centrality checker for
denominator monoids.
"""

import logging
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from backend.core.algebra import BasedWBA, BasisId, Coefficient, Element, LinearMap, Tensor, TensorWBA, iter_tuples
from backend.core.axioms import is_group_like, new_report
from backend.core.errors import DegreeOverflowError, NotGroupLikeError, WBAError
from backend.core.exactfield import Scalar
from backend.core.settings import settings
from shared.schemas.reports import GroupLikeKind, Report

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# r-forms
# ---------------------------------------------------------------------------


class RForm:
    """A bilinear form r on H⊗H together with its weak convolution inverse r̄."""

    mode = "abstract"

    def __init__(self, host: BasedWBA):
        self.host = host
        self._r: Dict[Tuple[BasisId, BasisId], Scalar] = {}
        self._rbar: Dict[Tuple[BasisId, BasisId], Scalar] = {}

    def _value(self, a: BasisId, b: BasisId) -> Coefficient:
        raise NotImplementedError

    def _bar_value(self, a: BasisId, b: BasisId) -> Coefficient:
        raise NotImplementedError

    def value(self, a: BasisId, b: BasisId) -> Scalar:
        key = (a, b)
        cached = self._r.get(key)
        if cached is None:
            cached = self.host.field.coerce(self._value(a, b))
            self._r[key] = cached
        return cached

    def bar_value(self, a: BasisId, b: BasisId) -> Scalar:
        key = (a, b)
        cached = self._rbar.get(key)
        if cached is None:
            cached = self.host.field.coerce(self._bar_value(a, b))
            self._rbar[key] = cached
        return cached

    def r(self, x: Element, y: Element) -> Scalar:
        return _bilinear(self.value, x, y, self.host)

    def rbar(self, x: Element, y: Element) -> Scalar:
        return _bilinear(self.bar_value, x, y, self.host)

    def table(self, cutoff: Optional[int] = None, bar: bool = False) -> Dict[Tuple[BasisId, BasisId], Scalar]:
        """All nonzero values on basis pairs with total degree within the cutoff."""
        top = self.host.cutoff if cutoff is None else cutoff
        basis = self.host.basis(up_to=top) if self.host.cutoff is not None else self.host.basis()
        fn = self.bar_value if bar else self.value
        out = {}
        for a, b in iter_tuples(basis, 2, top):
            v = fn(a, b)
            if not v.is_zero():
                out[(a, b)] = v
        return out


def _bilinear(fn: Callable[[BasisId, BasisId], Scalar], x: Element, y: Element, host: BasedWBA) -> Scalar:
    out = host.field.zero()
    for a, ca in x.terms():
        for b, cb in y.terms():
            v = fn(a, b)
            if not v.is_zero():
                out = out + ca * cb * v
    return out


class TableRForm(RForm):
    """r and r̄ given by explicit tables on basis pairs; missing pairs are zero."""

    mode = "table"

    def __init__(self, host: BasedWBA, values: Mapping, bar_values: Mapping):
        super().__init__(host)
        self._table = {k: host.field.coerce(v) for k, v in values.items()}
        self._bar_table = {k: host.field.coerce(v) for k, v in bar_values.items()}

    def _value(self, a, b):
        return self._table.get((a, b), 0)

    def _bar_value(self, a, b):
        return self._bar_table.get((a, b), 0)


class RecursiveRForm(RForm):
    """
    r and r̄ given on algebra generators and extended to basis words by

        r(xy⊗z) = r(y⊗z′) r(x⊗z″)      r(x⊗yz) = r(x′⊗y) r(x″⊗z)
        r̄(xy⊗z) = r̄(x⊗z′) r̄(y⊗z″)      r̄(x⊗yz) = r̄(x′⊗z) r̄(x″⊗y)

    with r(1⊗x) = r(x⊗1) = ε(x). Every basis element must carry a word whose
    proper suffixes are again basis words.
    """

    mode = "recursive"

    def __init__(self, host: BasedWBA, generator_values: Mapping, generator_bar_values: Mapping):
        if host.words is None:
            raise WBAError(f"{host.name} has no basis words; recursive r-forms need them")
        super().__init__(host)
        self._gen = {k: host.field.coerce(v) for k, v in generator_values.items()}
        self._gen_bar = {k: host.field.coerce(v) for k, v in generator_bar_values.items()}
        self._by_word = {w: b for b, w in host.words.items()}
        self.prefer_left = True

    def _word(self, b: BasisId) -> Tuple[BasisId, ...]:
        return tuple(self.host.words[b])

    def _suffix(self, word: Tuple[BasisId, ...]) -> BasisId:
        try:
            return self._by_word[word]
        except KeyError:
            raise WBAError(f"word {word} of {self.host.name} has no basis element") from None

    def _eval(self, a: BasisId, b: BasisId, bar: bool) -> Scalar:
        H = self.host
        fn = self.bar_value if bar else self.value
        wa, wb = self._word(a), self._word(b)
        if not wa:
            return H.counit_basis(b)
        if not wb:
            return H.counit_basis(a)
        if len(wa) == 1 and len(wb) == 1:
            table = self._gen_bar if bar else self._gen
            return table.get((a, b), H.field.zero())
        split_left = len(wa) > 1 and (self.prefer_left or len(wb) == 1)
        out = H.field.zero()
        if split_left:
            u, v = wa[0], self._suffix(wa[1:])
            for (z1, z2), c in H.delta_basis(b).terms():
                if bar:
                    term = fn(u, z1) * fn(v, z2)
                else:
                    term = fn(v, z1) * fn(u, z2)
                out = out + c * term
        else:
            u, v = wb[0], self._suffix(wb[1:])
            for (x1, x2), c in H.delta_basis(a).terms():
                if bar:
                    term = fn(x1, v) * fn(x2, u)
                else:
                    term = fn(x1, u) * fn(x2, v)
                out = out + c * term
        return out

    def _value(self, a, b):
        return self._eval(a, b, bar=False)

    def _bar_value(self, a, b):
        return self._eval(a, b, bar=True)

    def routed(self, prefer_left: bool) -> "RecursiveRForm":
        """Same generator data, decomposing the other argument first."""
        twin = RecursiveRForm(self.host, self._gen, self._gen_bar)
        twin.prefer_left = prefer_left
        return twin


class ProductRForm(RForm):
    """r((x₁⊗x₂)⊗(y₁⊗y₂)) = r₁(x₁⊗y₁) r₂(x₂⊗y₂) on a tensor product host."""

    mode = "product"

    def __init__(self, host: TensorWBA, left: RForm, right: RForm):
        super().__init__(host)
        self.left = left
        self.right = right

    def _value(self, a, b):
        a1, a2 = self.host.components(a)
        b1, b2 = self.host.components(b)
        return self.left.value(a1, b1) * self.right.value(a2, b2)

    def _bar_value(self, a, b):
        a1, a2 = self.host.components(a)
        b1, b2 = self.host.components(b)
        return self.left.bar_value(a1, b1) * self.right.bar_value(a2, b2)


class CommutativeRForm(RForm):
    """r(x⊗y) = ε(xy) = r̄(x⊗y) on a commutative WBA."""

    mode = "commutative"

    def _value(self, a, b):
        return self.host.counit(self.host.mul_basis(a, b))

    _bar_value = _value


def tensor_rform(host: TensorWBA, left: RForm, right: RForm) -> ProductRForm:
    if left.host is not host.left or right.host is not host.right:
        raise WBAError("tensor r-form factors must live on the tensor factors of the host")
    return ProductRForm(host, left, right)


def commutative_rform(H: BasedWBA, cutoff: Optional[int] = None) -> CommutativeRForm:
    basis = H.basis() if H.cutoff is None else H.basis(up_to=H.cutoff if cutoff is None else cutoff)
    for a, b in iter_tuples(basis, 2, H.cutoff if cutoff is None else cutoff):
        if H.mul_basis(a, b) != H.mul_basis(b, a):
            raise WBAError(f"{H.name} is not commutative: {H.label(a)}·{H.label(b)} differs from the reverse")
    return CommutativeRForm(H)


def rform_eval(r: RForm, x: Element, y: Element, bar: bool = False) -> Scalar:
    return r.rbar(x, y) if bar else r.r(x, y)


# ---------------------------------------------------------------------------
# Axiom suite
# ---------------------------------------------------------------------------


def _pairs(H: BasedWBA, x: BasisId):
    return H.delta_basis(x).terms()


def check_coquasi(
    H: BasedWBA,
    r: RForm,
    cutoff: Optional[int] = None,
    group_likes: Optional[Sequence[Element]] = None,
) -> Report:
    """
    Check the coquasi-triangular axioms, the twelve identities derived from them
    and the four identities for group-like elements on all basis pairs and
    triples within the cutoff. Group-like basis elements are always included.
    """
    report = new_report("coquasi", H, cutoff)
    top = report.cutoff
    basis = H.basis() if H.cutoff is None else H.basis(up_to=top)
    F = H.field
    one = H.one()
    e = H.element
    rv, rb = r.value, r.bar_value
    sources: Dict[BasisId, Element] = {}
    targets: Dict[BasisId, Element] = {}

    def s_of(b):
        if b not in sources:
            sources[b] = H.counital_source(e(b))
        return sources[b]

    def t_of(b):
        if b not in targets:
            targets[b] = H.counital_target(e(b))
        return targets[b]

    def cmp(axiom, witness, lhs, rhs):
        report.tick()
        if lhs != rhs:
            render = str if isinstance(lhs, Scalar) else H.render
            report.add_violation(axiom, [H.label(b) for b in witness], render(lhs), render(rhs))

    def eps_mul(a, b):
        return H.counit(H.mul_basis(a, b))

    for (x,) in iter_tuples(basis, 1, top):
        cmp("derived.unit_right", (x,), r.r(e(x), one), H.counit_basis(x))
        cmp("derived.unit_left", (x,), r.r(one, e(x)), H.counit_basis(x))

    for x, y in iter_tuples(basis, 2, top):
        rxy = rv(x, y)
        dx, dy = list(_pairs(H, x)), list(_pairs(H, y))
        left = F.zero()
        right = F.zero()
        inv_l = F.zero()
        inv_r = F.zero()
        braid_l = Element.zero(F)
        braid_r = Element.zero(F)
        for (x1, x2), cx in dx:
            for (y1, y2), cy in dy:
                c = cx * cy
                left = left + c * eps_mul(x1, y1) * rv(x2, y2)
                right = right + c * rv(x1, y1) * eps_mul(y2, x2)
                inv_l = inv_l + c * rb(x1, y1) * rv(x2, y2)
                inv_r = inv_r + c * rv(x1, y1) * rb(x2, y2)
                braid_l = braid_l + H.mul_basis(x1, y1).scale(c * rv(x2, y2))
                braid_r = braid_r + H.mul_basis(y2, x2).scale(c * rv(x1, y1))
        cmp("coquasi.counit_left", (x, y), rxy, left)
        cmp("coquasi.counit_right", (x, y), rxy, right)
        cmp("coquasi.inverse_left", (x, y), inv_l, eps_mul(y, x))
        cmp("coquasi.inverse_right", (x, y), inv_r, eps_mul(x, y))
        cmp("coquasi.braiding", (x, y), braid_l, braid_r)
        _derived_pair(H, r, x, y, dx, dy, cmp, s_of, t_of)

    for x, y, z in iter_tuples(basis, 3, top):
        lhs = r.r(H.mul_basis(x, y), e(z))
        rhs = F.zero()
        for (z1, z2), c in _pairs(H, z):
            rhs = rhs + c * rv(y, z1) * rv(x, z2)
        cmp("coquasi.mul_left", (x, y, z), lhs, rhs)
        lhs = r.r(e(x), H.mul_basis(y, z))
        rhs = F.zero()
        for (x1, x2), c in _pairs(H, x):
            rhs = rhs + c * rv(x1, y) * rv(x2, z)
        cmp("coquasi.mul_right", (x, y, z), lhs, rhs)

    likes = [g for g in (group_likes or [])]
    for b in basis:
        if b.degree == 0 and is_group_like(H, e(b)) == GroupLikeKind.BOTH:
            likes.append(e(b))
    _group_like_identities(H, r, basis, top, likes, cmp)

    logger.info(report.summary())
    return report


def _derived_pair(H: BasedWBA, r: RForm, x: BasisId, y: BasisId, dx, dy, cmp, s_of, t_of):
    F = H.field
    e = H.element
    rv = r.value
    ex, ey = e(x), e(y)
    rxy = rv(x, y)

    sums = [F.zero() for _ in range(4)]
    six_l = Tensor.zero(F)
    six_r = Tensor.zero(F)
    for (x1, x2), cx in dx:
        for (y1, y2), cy in dy:
            c = cx * cy
            sums[0] = sums[0] + c * rv(x1, y1) * r.r(e(x2), s_of(y2))
            sums[1] = sums[1] + c * r.r(e(x1), t_of(y1)) * rv(x2, y2)
            sums[2] = sums[2] + c * r.r(s_of(x2), e(y1)) * rv(x1, y2)
            sums[3] = sums[3] + c * rv(x2, y1) * r.r(t_of(x1), e(y2))
            six_l = six_l + Tensor.of(t_of(y2), s_of(x2)).scale(c * rv(x1, y1))
            six_r = six_r + Tensor.of(t_of(x1), s_of(y1)).scale(c * rv(x2, y2))
    cmp("derived.source_right", (x, y), sums[0], rxy)
    cmp("derived.target_right", (x, y), sums[1], rxy)
    cmp("derived.source_left", (x, y), sums[2], rxy)
    cmp("derived.target_left", (x, y), sums[3], rxy)
    cmp("derived.counital_swap", (x, y), six_l, six_r)

    cmp("derived.target_argument", (x, y), r.r(ex, t_of(y)), H.counit(H.mul_basis(x, y)))
    cmp("derived.source_argument", (x, y), r.r(ex, s_of(y)), H.counit(H.mul_basis(y, x)))
    tx, sx = t_of(x), s_of(x)
    cmp("derived.target_first", (x, y), r.r(tx, ey), H.counit(H.mul(tx, ey)))
    cmp("derived.source_first", (x, y), r.r(sx, ey), H.counit(H.mul(ey, sx)))

    lhs11 = Element.zero(F)
    rhs11 = Element.zero(F)
    for (y1, y2), cy in dy:
        lhs11 = lhs11 + s_of(y2).scale(cy * rv(x, y1))
    for (x1, x2), cx in dx:
        rhs11 = rhs11 + H.counital_source(t_of(x2)).scale(cx * rv(x1, y))
    cmp("derived.source_transport", (x, y), lhs11, rhs11)

    lhs12 = Element.zero(F)
    rhs12 = Element.zero(F)
    for (y1, y2), cy in dy:
        lhs12 = lhs12 + t_of(y1).scale(cy * rv(x, y2))
    for (x1, x2), cx in dx:
        rhs12 = rhs12 + H.counital_target(s_of(x1)).scale(cx * rv(x2, y))
    cmp("derived.target_transport", (x, y), lhs12, rhs12)


def _group_like_identities(H: BasedWBA, r: RForm, basis, top, likes: Sequence[Element], cmp):
    F = H.field
    e = H.element
    for gi, g in enumerate(likes):
        gdeg = g.max_degree()
        label = H.render(g)
        dg = H.delta(g)
        for (x,) in iter_tuples(basis, 1, None if top is None else top - gdeg):
            left = F.zero()
            right = F.zero()
            for (x1, x2), c in _pairs(H, x):
                left = left + c * r.rbar(e(x1), g) * r.r(e(x2), g)
                right = right + c * r.r(e(x1), g) * r.rbar(e(x2), g)
            cmp(f"grouplike.inverse_left[{label}]", (x,), left, H.counit_basis(x))
            cmp(f"grouplike.inverse_right[{label}]", (x,), right, H.counit_basis(x))
        for x, y in iter_tuples(basis, 2, None if top is None else top - gdeg):
            lhs = F.zero()
            for (g1, g2), c in dg.terms():
                lhs = lhs + c * r.value(x, g1) * r.value(y, g2)
            rhs = F.zero()
            for (x1, x2), cx in _pairs(H, x):
                for (y1, y2), cy in _pairs(H, y):
                    rhs = rhs + cx * cy * r.r(e(x1), g) * r.r(e(y1), g) * H.counit(H.mul_basis(y2, x2))
            cmp(f"grouplike.coproduct[{label}]", (x, y), lhs, rhs)
            lhs = F.zero()
            for (g1, g2), c in dg.terms():
                lhs = lhs + c * r.bar_value(x, g1) * r.bar_value(y, g2)
            rhs = F.zero()
            for (x1, x2), cx in _pairs(H, x):
                for (y1, y2), cy in _pairs(H, y):
                    rhs = rhs + cx * cy * H.counit(H.mul_basis(x1, y1)) * r.rbar(e(x2), g) * r.rbar(e(y2), g)
            cmp(f"grouplike.coproduct_bar[{label}]", (x, y), lhs, rhs)


# ---------------------------------------------------------------------------
# Conjugation and almost central monoids
# ---------------------------------------------------------------------------


def conjugation(r: RForm, g: Element, x: Element, direction: str = "forward") -> Element:
    """I_g(x) = r̄(x′⊗g) x″ r(x‴⊗g); the inverse swaps r and r̄."""
    H = r.host
    if is_group_like(H, g) != GroupLikeKind.BOTH:
        raise NotGroupLikeError(f"{H.render(g)} is not group-like in {H.name}")
    if direction not in ("forward", "inverse"):
        raise ValueError(f"direction must be 'forward' or 'inverse', got {direction!r}")
    first, last = (r.rbar, r.r) if direction == "forward" else (r.r, r.rbar)
    out = Element.zero(H.field)
    for (a1, a2, a3), c in H.delta2(x).terms():
        coeff = first(H.element(a1), g)
        if coeff.is_zero():
            continue
        coeff = coeff * last(H.element(a3), g)
        if not coeff.is_zero():
            out = out + H.element(a2, c * coeff)
    return out


class ConjugationAction:
    """
    The automorphisms I_g for the generators g of a denominator monoid.

    Words compose as I_{g₁⋯g_k} = I_{g₁}∘⋯∘I_{g_k}.
    """

    def __init__(
        self,
        host: BasedWBA,
        generators: Sequence[Element],
        forward: Sequence[Callable[[Element], Element]],
        inverse: Sequence[Callable[[Element], Element]],
        kind: str,
    ):
        if not (len(generators) == len(forward) == len(inverse)):
            raise ValueError("one forward and one inverse map per generator")
        self.host = host
        self.generators = list(generators)
        self.kind = kind
        self._forward = [self._memoized(f, f"I[{i}]") for i, f in enumerate(forward)]
        self._inverse = [self._memoized(f, f"I⁻¹[{i}]") for i, f in enumerate(inverse)]

    def _memoized(self, fn: Callable[[Element], Element], name: str) -> LinearMap:
        H = self.host
        return LinearMap(H, H, rule=lambda b: fn(H.element(b)), name=name)

    @classmethod
    def identity(cls, host: BasedWBA, generators: Sequence[Element]) -> "ConjugationAction":
        ident = [lambda x: x] * len(generators)
        return cls(host, generators, ident, ident, kind="identity")

    @classmethod
    def from_rform(cls, r: RForm, generators: Sequence[Element]) -> "ConjugationAction":
        fwd = [(lambda x, g=g: conjugation(r, g, x, "forward")) for g in generators]
        inv = [(lambda x, g=g: conjugation(r, g, x, "inverse")) for g in generators]
        return cls(r.host, generators, fwd, inv, kind=f"rform:{r.mode}")

    @classmethod
    def from_maps(cls, host, generators, forward, inverse) -> "ConjugationAction":
        return cls(host, generators, forward, inverse, kind="explicit")

    @property
    def is_identity(self) -> bool:
        return self.kind == "identity"

    def forward(self, i: int, x: Element) -> Element:
        return self._forward[i](x)

    def inverse(self, i: int, x: Element) -> Element:
        return self._inverse[i](x)

    def apply_word(self, word: Sequence[int], x: Element) -> Element:
        if self.is_identity:
            return x
        for i in reversed(word):
            x = self._forward[i](x)
        return x

    def apply_inverse_word(self, word: Sequence[int], x: Element) -> Element:
        if self.is_identity:
            return x
        for i in word:
            x = self._inverse[i](x)
        return x


def element_key(x: Element) -> Tuple:
    return tuple(sorted(x.terms()))


def enumerate_monoid(
    host: BasedWBA,
    generators: Sequence[Element],
    max_length: int,
    max_degree: Optional[int] = None,
) -> Tuple[List[Tuple[Tuple[int, ...], Element]], bool]:
    """
    Distinct elements of the monoid generated by `generators`, with a shortest
    word for each, breadth first up to max_length. The flag reports whether
    the enumeration closed up (no new elements at the last length).
    """
    seen = {element_key(host.one()): ((), host.one())}
    frontier = [((), host.one())]
    closed = False
    for _ in range(max_length):
        grown = []
        for word, value in frontier:
            for i, g in enumerate(generators):
                if max_degree is not None and value.max_degree() + g.max_degree() > max_degree:
                    continue
                try:
                    new = host.mul(value, g)
                except DegreeOverflowError:
                    continue
                key = element_key(new)
                if key not in seen:
                    seen[key] = (word + (i,), new)
                    grown.append((word + (i,), new))
        if not grown:
            closed = True
            break
        frontier = grown
    return list(seen.values()), closed


def check_almost_central(
    H: BasedWBA,
    action: ConjugationAction,
    cutoff: Optional[int] = None,
    word_length: Optional[int] = None,
) -> Report:
    """
    Check gx = I_g(x)g and I_g(G) ⊆ G for every generator, and that
    each I_g is a WBA automorphism with the given inverse.
    """
    report = new_report("almost_central", H, cutoff)
    top = report.cutoff
    word_length = word_length or settings().word_length
    basis = H.basis() if H.cutoff is None else H.basis(up_to=top)
    report.notes["action"] = action.kind
    report.notes["generators"] = [H.render(g) for g in action.generators]

    def cmp(axiom, witness, lhs, rhs):
        report.tick()
        if lhs != rhs:
            report.add_violation(axiom, witness, H.render(lhs), H.render(rhs))

    usable = []
    for i, g in enumerate(action.generators):
        report.tick()
        kind = is_group_like(H, g)
        if kind != GroupLikeKind.BOTH:
            report.add_violation("almost_central.group_like", [H.render(g)], kind.value, GroupLikeKind.BOTH.value)
            if action.kind.startswith("rform"):
                continue
        usable.append(i)

    for i in usable:
        g = action.generators[i]
        gdeg = g.max_degree()
        name = H.render(g)
        for (x,) in iter_tuples(basis, 1, None if top is None else top - gdeg):
            ex = H.element(x)
            cmp("almost_central.commutes", [name, H.label(x)], H.mul(g, ex), H.mul(action.forward(i, ex), g))

    members, closed = enumerate_monoid(H, action.generators, word_length, max_degree=top)
    keys = {element_key(v) for _, v in members}
    report.notes["monoid_elements"] = len(members)
    report.notes["monoid_closed"] = closed
    for i in usable:
        for j, h in enumerate(action.generators):
            report.tick()
            image = action.forward(i, h)
            if element_key(image) not in keys:
                report.add_violation("almost_central.closed", [H.render(action.generators[i]), H.render(h)],
                                     H.render(image), "an element of G")

    for i in usable:
        name = H.render(action.generators[i])
        fwd = lambda x, i=i: action.forward(i, x)
        inv = lambda x, i=i: action.inverse(i, x)
        cmp("automorphism.unit", [name], fwd(H.one()), H.one())
        for (x,) in iter_tuples(basis, 1, top):
            ex = H.element(x)
            image = fwd(ex)
            cmp("automorphism.inverse_left", [name, H.label(x)], inv(image), ex)
            cmp("automorphism.inverse_right", [name, H.label(x)], fwd(inv(ex)), ex)
            report.tick()
            if H.counit(image) != H.counit(ex):
                report.add_violation("automorphism.counit", [name, H.label(x)], str(H.counit(image)), str(H.counit(ex)))
            mapped = Tensor.zero(H.field)
            for (a, b), c in H.delta(ex).terms():
                mapped = mapped + Tensor.of(fwd(H.element(a)), fwd(H.element(b))).scale(c)
            report.tick()
            if H.delta(image) != mapped:
                report.add_violation("automorphism.coproduct", [name, H.label(x)], H.render(H.delta(image)), H.render(mapped))
        for x, y in iter_tuples(basis, 2, top):
            ex, ey = H.element(x), H.element(y)
            cmp("automorphism.product", [name, H.label(x), H.label(y)], fwd(H.mul(ex, ey)), H.mul(fwd(ex), fwd(ey)))

    logger.info(report.summary())
    return report
