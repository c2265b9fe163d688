"""
Laurent Model

H[X]/(gX − 1) for a central, regular group-like g of positive degree δ.

Every element has a unique expansion Σ c·gᵉ with e ∈ ℤ and c running over a
graded complement C_d of g·H_{d−δ} in H_d. The model is based on the pairs
(c, e): a basis id has the degree d of c and index zigzag(e)·|C_d| + j, where
zigzag interleaves 0, −1, 1, −2, ... Enumeration lists exponents in
[−exponent_bound, exponent_bound]; products may leave that window.
"""

import logging
from typing import Dict, List, Optional, Tuple

from backend.core.algebra import BasedWBA, BasisId, Element, Tensor
from backend.core.axioms import is_group_like, new_report
from backend.core.errors import DegreeOverflowError, LocalizationError, NotGroupLikeError, RegularityError
from backend.core.linalg import EchelonForm, ImageSolver
from backend.core.localization import Fraction, LocalizedWBA, check_regular
from backend.core.quotient import check_central
from shared.schemas.reports import GroupLikeKind, Report, Verdict

logger = logging.getLogger(__name__)


def zigzag(e: int) -> int:
    return 2 * e if e >= 0 else -2 * e - 1


def unzigzag(z: int) -> int:
    return z // 2 if z % 2 == 0 else -(z + 1) // 2


class LaurentModel(BasedWBA):
    """The localization of H at the powers of g, with X = g⁻¹."""

    def __init__(self, host: BasedWBA, g: Element, name: Optional[str] = None, exponent_bound: int = 1):
        if host.cutoff is None:
            raise LocalizationError("the Laurent model needs a graded host with a cutoff")
        degrees = g.degrees()
        if len(degrees) != 1:
            raise LocalizationError("the Laurent model needs a homogeneous denominator")
        self.delta_degree = degrees[0]
        if self.delta_degree == 0:
            raise LocalizationError(f"{host.render(g)} has degree 0; its powers need not be distinct")
        if is_group_like(host, g) == GroupLikeKind.NEITHER:
            raise NotGroupLikeError(f"{host.render(g)} is not group-like in {host.name}")
        central = check_central(host, g)
        if not central.passed:
            raise LocalizationError(f"{host.render(g)} is not central in {host.name}")
        regular = check_regular(host, g)
        if not regular.passed:
            raise RegularityError(f"{host.render(g)} is a zero divisor in {host.name}")
        self._check_powers(host, g)
        super().__init__(name or f"{host.name}[X]", host.field, cutoff=host.cutoff)
        self.host = host
        self.g = g
        self.exponent_bound = exponent_bound
        self.reports: List[Report] = [central, regular]
        self._solvers: Dict[int, Optional[ImageSolver]] = {}
        self._complement: Dict[int, List[BasisId]] = {}
        self._position: Dict[BasisId, int] = {}

    @staticmethod
    def _check_powers(host: BasedWBA, g: Element) -> None:
        seen = [host.one()]
        power = host.one()
        for _ in range(host.cutoff // g.max_degree()):
            power = host.mul(power, g)
            if any(power == p for p in seen):
                raise LocalizationError(f"{host.render(g)} has finite order")
            seen.append(power)

    # -- complements --------------------------------------------------------

    def _solver(self, degree: int) -> Optional[ImageSolver]:
        if degree not in self._solvers:
            below = degree - self.delta_degree
            if below < 0:
                self._solvers[degree] = None
            else:
                H = self.host
                columns = [dict(H.mul(H.element(b), self.g).terms()) for b in H.basis(below)]
                self._solvers[degree] = ImageSolver(columns, self.field)
        return self._solvers[degree]

    def complement(self, degree: int) -> List[BasisId]:
        basis = self._complement.get(degree)
        if basis is None:
            solver = self._solver(degree)
            pivots = solver.image_pivots if solver is not None else set()
            basis = [b for b in self.host.basis(degree) if b not in pivots]
            self._complement[degree] = basis
            for j, b in enumerate(basis):
                self._position[b] = j
            logger.debug(f"{self.name}: complement of g·H in degree {degree} has dimension {len(basis)}")
        return basis

    def dim(self, degree: int) -> int:
        return (2 * self.exponent_bound + 1) * len(self.complement(degree))

    def pair(self, b: BasisId) -> Tuple[BasisId, int]:
        """Basis id → (complement element of H, exponent)."""
        size = len(self.complement(b.degree))
        z, j = divmod(b.index, size)
        return self.complement(b.degree)[j], unzigzag(z)

    def pair_id(self, c: BasisId, e: int) -> BasisId:
        size = len(self.complement(c.degree))
        return BasisId(c.degree, zigzag(e) * size + self._position[c])

    def label(self, b: BasisId) -> str:
        c, e = self.pair(b)
        base = self.host.label(c)
        if e == 0:
            return base
        power = "X" if e == -1 else f"X^{-e}" if e < 0 else "g" if e == 1 else f"g^{e}"
        return power if base == "1" else f"{base}{power}"

    # -- embedding ----------------------------------------------------------

    def decompose(self, z: Element) -> List[Tuple[Element, int]]:
        """z = Σ_k r_k·g^k with every r_k supported on complements."""
        out = []
        H = self.host
        for d in z.degrees():
            current = z.homogeneous(d)
            k = 0
            while current:
                solver = self._solver(d - k * self.delta_degree)
                if solver is None:
                    out.append((current, k))
                    break
                remainder, coeffs = solver.split(dict(current.terms()))
                if remainder:
                    out.append((Element(self.field, remainder), k))
                below = H.basis(d - (k + 1) * self.delta_degree)
                current = Element(self.field, {b: c for b, c in zip(below, coeffs) if not c.is_zero()})
                k += 1
        return out

    def embed(self, z: Element, e: int = 0) -> Element:
        """The model element z·gᵉ for z ∈ H."""
        out: Dict[BasisId, object] = {}
        for r, k in self.decompose(z):
            for c, coeff in r.terms():
                self.complement(c.degree)
                key = self.pair_id(c, e + k)
                out[key] = out[key] + coeff if key in out else coeff
        return Element(self.field, out)

    def inverse_element(self) -> Element:
        """X = g⁻¹."""
        return self.embed(self.host.one(), -1)

    def generator(self) -> Element:
        return self.embed(self.g)

    # -- structure ----------------------------------------------------------

    def _product(self, a, b):
        c1, e1 = self.pair(a)
        c2, e2 = self.pair(b)
        return self.embed(self.host.mul_basis(c1, c2), e1 + e2)

    def _coproduct(self, a):
        c, e = self.pair(a)
        out = Tensor.zero(self.field)
        for (x, y), coeff in self.host.delta_basis(c).terms():
            left = self.embed(self.host.element(x), e)
            right = self.embed(self.host.element(y), e)
            out = out + Tensor.of(left, right).scale(coeff)
        return out

    def _counit(self, a):
        c, _ = self.pair(a)
        return self.host.counit_basis(c)

    def _unit(self):
        return self.embed(self.host.one())

    # -- fraction model -----------------------------------------------------

    def _check_localization(self, L: LocalizedWBA):
        if L.host is not self.host or len(L.monoid.generators) != 1 or L.monoid.generators[0] != self.g:
            raise LocalizationError(f"{L.name} is not the localization of {self.host.name} at the powers of g")

    def to_fraction(self, x: Element, L: LocalizedWBA) -> Fraction:
        """c·gᵉ ↦ c·gᵉ/1 for e ≥ 0 and c/g^{−e} otherwise."""
        self._check_localization(L)
        out = L.zero()
        H = self.host
        for b, coeff in x.terms():
            c, e = self.pair(b)
            if e >= 0:
                term = L.fraction(H.mul(H.element(c, coeff), H.power(self.g, e)))
            else:
                term = L.fraction(H.element(c, coeff), (0,) * (-e))
            out = L.add(out, term)
        return out

    def from_fraction(self, a: Fraction) -> Element:
        """x/gᵏ ↦ x·Xᵏ."""
        self._check_localization(a.owner)
        return self.embed(a.numerator, -len(a.word))


def laurent_model(H: BasedWBA, g: Element, name: Optional[str] = None, exponent_bound: int = 1) -> LaurentModel:
    return LaurentModel(H, g, name=name, exponent_bound=exponent_bound)


def check_isomorphism(model: LaurentModel, L: LocalizedWBA, cutoff: Optional[int] = None,
                      exponents: Tuple[int, ...] = (-1, 0, 1)) -> Report:
    """
    The maps to and from fractions compose to the identity on model basis
    elements and on fractions x/gᵏ, X·g = 1, and products are preserved on
    degree-one elements.
    """
    report = new_report("laurent", model, cutoff)
    top = report.cutoff
    H = model.host
    skipped = 0
    X = model.inverse_element()

    report.tick()
    if model.mul(X, model.generator()) != model.one():
        report.add_violation("laurent.inverse", ["X", H.render(model.g)], model.render(model.mul(X, model.generator())), "1")

    for d in range(top + 1):
        for c in model.complement(d):
            for e in exponents:
                if d + max(e, 0) * model.delta_degree > top:
                    continue
                x = Element.basis(model.field, model.pair_id(c, e))
                report.tick()
                back = model.from_fraction(model.to_fraction(x, L))
                if back != x:
                    report.add_violation("laurent.roundtrip_model", [model.label(model.pair_id(c, e))],
                                         model.render(back), model.render(x))
        for b in H.basis(d):
            for k in range(2):
                a = L.fraction(H.element(b), (0,) * k)
                report.tick()
                try:
                    verdict = L.compare(model.to_fraction(model.from_fraction(a), L), a)
                except DegreeOverflowError:
                    skipped += 1
                    continue
                if verdict != Verdict.EQUAL:
                    report.add_violation("laurent.roundtrip_fraction", [a.render()], verdict.value, "equal")

    degree_one = [b for b in model.basis(1) if model.pair(b)[1] in (-1, 0)] if top >= 2 else []
    for a in degree_one:
        for b in degree_one:
            x, y = model.element(a), model.element(b)
            report.tick()
            try:
                lhs = model.to_fraction(model.mul(x, y), L)
                rhs = L.mul(model.to_fraction(x, L), model.to_fraction(y, L))
                verdict = L.compare(lhs, rhs)
            except DegreeOverflowError:
                skipped += 1
                continue
            if verdict != Verdict.EQUAL:
                report.add_violation("laurent.product", [model.label(a), model.label(b)], lhs.render(), rhs.render())
    if skipped:
        report.notes["skipped"] = skipped
    logger.info(report.summary())
    return report


def span_dims(model: LaurentModel, cutoff: Optional[int] = None, bound: int = 2) -> Dict[int, int]:
    """dim span{x·Xᵏ : x ∈ H_d, 0 ≤ k ≤ bound} per host degree d."""
    top = model.cutoff if cutoff is None else min(cutoff, model.cutoff)
    out = {}
    for d in range(top + 1):
        form = EchelonForm(model.field)
        for b in model.host.basis(d):
            for k in range(bound + 1):
                form.add(dict(model.embed(model.host.element(b), -k).terms()))
        out[d] = form.rank
    return out
