"""
Universal Maps

The map σ: H[G⁻¹] → T induced by a WBA homomorphism ψ: H → T that sends the
denominators to invertible elements, σ(x/g) = ψ(x)·ψ(g)⁻¹, and its checks.
"""

import logging
from typing import List, NamedTuple, Optional, Sequence

from backend.core.algebra import BasedWBA, Element, LinearMap, Tensor
from backend.core.axioms import check_antipode, new_report
from backend.core.errors import DegreeOverflowError, LocalizationError
from backend.core.linalg import ImageSolver
from backend.core.localization import Fraction, LocalizedWBA
from backend.core.settings import settings
from shared.schemas.reports import Report

logger = logging.getLogger(__name__)


def find_inverse(T: BasedWBA, t: Element) -> Element:
    """Two-sided inverse of t in a finite-dimensional T, by a linear solve."""
    if T.cutoff is not None:
        raise LocalizationError(f"inverses in {T.name} must be supplied; it is not finite-dimensional")
    basis = T.basis()
    solver = ImageSolver([dict(T.mul(t, T.element(b)).terms()) for b in basis], T.field)
    coeffs = solver.solve(dict(T.one().terms()))
    if coeffs is None:
        raise LocalizationError(f"{T.render(t)} has no right inverse in {T.name}")
    u = Element(T.field, {b: c for b, c in zip(basis, coeffs) if not c.is_zero()})
    if T.mul(u, t) != T.one():
        raise LocalizationError(f"{T.render(t)} has a right inverse but no left inverse in {T.name}")
    return u


class FractionMap:
    """σ(x/g₁⋯g_k) = ψ(x)·ψ(g_k)⁻¹⋯ψ(g₁)⁻¹."""

    def __init__(self, L: LocalizedWBA, psi: LinearMap, inverses: Optional[Sequence[Element]] = None,
                 name: str = "σ"):
        if psi.source is not L.host:
            raise LocalizationError(f"ψ must be defined on {L.host.name}")
        self.L = L
        self.psi = psi
        self.target = psi.target
        self.name = name
        if inverses is None:
            inverses = [find_inverse(self.target, psi(g)) for g in L.monoid.generators]
        if len(inverses) != len(L.monoid.generators):
            raise LocalizationError("one inverse per monoid generator is required")
        self.inverses = list(inverses)

    def __call__(self, a: Fraction) -> Element:
        T = self.target
        out = self.psi(a.numerator)
        for i in reversed(a.word):
            out = T.mul(out, self.inverses[i])
        return out

    def on_tensor(self, t) -> Tensor:
        out = Tensor.zero(self.target.field)
        for c, a, b in t.terms:
            left, right = self(a), self(b)
            if left and right:
                out = out + Tensor.of(left, right).scale(c)
        return out

    def linear_map(self) -> LinearMap:
        """σ on the explicit basis of a materialized localization."""
        M = self.L.materialized
        if M is None:
            raise LocalizationError(f"{self.L.name} has no explicit basis")
        return LinearMap(M, self.target, rule=lambda b: self(M.fractions[b.index]), name=self.name)


def universal_map(L: LocalizedWBA, psi: LinearMap, inverses: Optional[Sequence[Element]] = None) -> FractionMap:
    return FractionMap(L, psi, inverses)


def spanning_fractions(L: LocalizedWBA, cutoff: Optional[int] = None) -> List[Fraction]:
    """x/1 and x/g for host basis elements x and generators g."""
    H = L.host
    top = L.cutoff if cutoff is None else cutoff
    basis = H.basis() if H.cutoff is None else H.basis(up_to=top)
    out = []
    for b in basis:
        out.append(L.fraction(H.element(b)))
        for i in range(len(L.monoid.generators)):
            out.append(L.fraction(H.element(b), (i,)))
    return out


def check_homomorphism(psi: LinearMap, cutoff: Optional[int] = None) -> Report:
    """ψ(xy) = ψ(x)ψ(y), (ψ⊗ψ)Δ = Δψ, ε∘ψ = ε and ψ(1) = 1 on basis elements."""
    H, T = psi.source, psi.target
    report = new_report("homomorphism", H, cutoff)
    top = report.cutoff
    basis = H.basis() if H.cutoff is None else H.basis(up_to=top)

    def cmp(axiom, witness, lhs, rhs):
        report.tick()
        if lhs != rhs:
            render = str if not hasattr(lhs, "terms") else T.render
            report.add_violation(axiom, witness, render(lhs), render(rhs))

    cmp("psi.unit", ["1"], psi(H.one()), T.one())
    for x in basis:
        image = psi.on_basis(x)
        cmp("psi.counit", [H.label(x)], T.counit(image), H.counit_basis(x))
        mapped = Tensor.zero(T.field)
        for (a, b), c in H.delta_basis(x).terms():
            left, right = psi.on_basis(a), psi.on_basis(b)
            if left and right:
                mapped = mapped + Tensor.of(left, right).scale(c)
        cmp("psi.coproduct", [H.label(x)], T.delta(image), mapped)
        for y in basis:
            if top is not None and x.degree + y.degree > top:
                continue
            cmp("psi.product", [H.label(x), H.label(y)], psi(H.mul_basis(x, y)), T.mul(image, psi.on_basis(y)))
    logger.info(report.summary())
    return report


def check_universal(sigma: FractionMap, cutoff: Optional[int] = None,
                    samples: Optional[Sequence[Fraction]] = None) -> Report:
    """
    σ∘φ = ψ, ψ(g)·σ(1/g) = 1 = σ(1/g)·ψ(g), and σ is a WBA homomorphism that
    does not depend on representatives, on a spanning set of fractions.
    """
    L, T = sigma.L, sigma.target
    report = Report(suite="universal", subject=L.name, cutoff=L.cutoff if cutoff is None else cutoff,
                    max_witnesses=settings().max_witnesses)
    samples = list(samples) if samples is not None else spanning_fractions(L, cutoff)
    skipped = 0

    def cmp(axiom, witness, lhs, rhs):
        report.tick()
        if lhs != rhs:
            render = str if not hasattr(lhs, "terms") else T.render
            report.add_violation(axiom, witness, render(lhs), render(rhs))

    H = L.host
    for b in (H.basis() if H.cutoff is None else H.basis(up_to=report.cutoff)):
        x = H.element(b)
        cmp("universal.triangle", [H.label(b)], sigma(L.phi(x)), sigma.psi(x))

    for i, g in enumerate(L.monoid.generators):
        name = L.monoid.names[i]
        image = sigma.psi(g)
        cmp("universal.inverse_right", [name], T.mul(image, sigma.inverses[i]), T.one())
        cmp("universal.inverse_left", [name], T.mul(sigma.inverses[i], image), T.one())

    cmp("universal.unit", ["1"], sigma(L.one()), T.one())
    for a in samples:
        witness = [a.render()]
        try:
            value = sigma(a)
            cmp("universal.counit", witness, T.counit(value), L.counit(a))
            cmp("universal.coproduct", witness, T.delta(value), sigma.on_tensor(L.delta(a)))
            for i in range(len(L.monoid.generators)):
                cmp("universal.well_defined", witness, sigma(L.expand(a, (i,))), value)
        except DegreeOverflowError:
            skipped += 1
    for a, b in zip(samples, samples[1:]):
        try:
            cmp("universal.product", [a.render(), b.render()], sigma(L.mul(a, b)), T.mul(sigma(a), sigma(b)))
        except DegreeOverflowError:
            skipped += 1
    if skipped:
        report.notes["skipped"] = skipped
    logger.info(report.summary())
    return report


def check_uniqueness(first: FractionMap, second: FractionMap, cutoff: Optional[int] = None) -> Report:
    """Two induced maps agree on the spanning fractions x/1 and x/g."""
    L = first.L
    report = new_report("uniqueness", L.host, cutoff)
    for a in spanning_fractions(L, cutoff):
        report.tick()
        try:
            lhs, rhs = first(a), second(a)
        except DegreeOverflowError:
            continue
        if lhs != rhs:
            report.add_violation("universal.uniqueness", [a.render()], first.target.render(lhs),
                                 second.target.render(rhs))
    return report


class Factorization(NamedTuple):
    map: FractionMap
    reports: List[Report]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)


def envelope_factorization(
    L: LocalizedWBA,
    iota: LinearMap,
    antipode: LinearMap,
    inverses: Optional[Sequence[Element]] = None,
    cutoff: Optional[int] = None,
) -> "Factorization":
    """
    Factor a map ι: H → T into a weak Hopf algebra T through H[G⁻¹].

    The inverse of a group-like ι(g) defaults to S(ι(g)). The antipode is
    checked on the generators of T when they are known.
    """
    T = iota.target
    if inverses is None:
        inverses = [antipode(iota(g)) for g in L.monoid.generators]
    sigma = FractionMap(L, iota, inverses, name="ρ")
    elements = T.generators
    reports = [
        check_antipode(T, antipode, cutoff=cutoff, elements=elements),
        check_homomorphism(iota, cutoff),
        check_universal(sigma, cutoff),
    ]
    return Factorization(sigma, reports)
