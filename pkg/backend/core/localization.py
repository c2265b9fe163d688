"""
Localization

Weak bialgebras of fractions H[G⁻¹] for an almost central monoid G of
group-like elements.

A fraction x/g is stored as a numerator Element and a word in the monoid
generators. Sums and products use the almost-commutation g·I_g⁻¹(x) = x·g;
equality is decided by the annihilator criterion through a selectable
strategy. Comparisons of whole subspaces (tensor equality, dimension tables,
materialized bases) lift fractions to a common denominator and reduce the
numerators modulo ker φ, which needs pairwise commuting generators.
"""

import itertools
import logging
import random
from collections import Counter
from dataclasses import dataclass, field as dataclass_field
from typing import Dict, List, Optional, Sequence, Tuple

from backend.core.algebra import BasedWBA, BasisId, Coefficient, Element, Tensor, TableWBA, iter_tuples
from backend.core.axioms import new_report
from backend.core.coquasi import ConjugationAction, check_almost_central, element_key, enumerate_monoid
from backend.core.errors import (
    AlmostCentralityError,
    DegreeOverflowError,
    IndeterminateError,
    LocalizationError,
    RegularityError,
)
from backend.core.exactfield import Scalar
from backend.core.linalg import EchelonForm, ImageSolver
from backend.core.settings import settings
from shared.schemas.reports import DimensionTable, Report, Verdict

logger = logging.getLogger(__name__)

Word = Tuple[int, ...]


# ---------------------------------------------------------------------------
# Denominators
# ---------------------------------------------------------------------------


@dataclass
class AnnihilatorStrategy:
    """How to find t ∈ G with z·t = 0 when comparing fractions."""

    kind: str
    test_set: List[Element] = dataclass_field(default_factory=list)
    limit: int = 4

    KINDS = ("declared-regular", "finite-test-set", "bounded-search")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise ValueError(f"unknown annihilator strategy {self.kind!r}; expected one of {', '.join(self.KINDS)}")

    @classmethod
    def declared_regular(cls) -> "AnnihilatorStrategy":
        return cls("declared-regular")

    @classmethod
    def finite_test_set(cls, elements: Sequence[Element]) -> "AnnihilatorStrategy":
        return cls("finite-test-set", test_set=list(elements))

    @classmethod
    def bounded_search(cls, limit: int) -> "AnnihilatorStrategy":
        return cls("bounded-search", limit=limit)

    def describe(self) -> str:
        if self.kind == "finite-test-set":
            return f"finite-test-set({len(self.test_set)})"
        if self.kind == "bounded-search":
            return f"bounded-search({self.limit})"
        return self.kind


class DenominatorMonoid:
    """The monoid generated by group-like elements, with its conjugation action."""

    def __init__(
        self,
        host: BasedWBA,
        generators: Sequence[Element],
        action: Optional[ConjugationAction] = None,
        strategy: Optional[AnnihilatorStrategy] = None,
        names: Optional[Sequence[str]] = None,
    ):
        if not generators:
            raise ValueError("a denominator monoid needs at least one generator")
        self.host = host
        self.generators = list(generators)
        self.action = action or ConjugationAction.identity(host, generators)
        if self.action.host is not host or len(self.action.generators) != len(self.generators):
            raise ValueError("conjugation action does not match the monoid generators")
        self.strategy = strategy or AnnihilatorStrategy.bounded_search(settings().search_limit)
        self.names = list(names) if names else [f"g{i}" for i in range(len(generators))]
        self._words: Dict[Word, Element] = {(): host.one()}
        self._commuting: Optional[bool] = None
        self._members = None

    def evaluate(self, word: Word) -> Element:
        cached = self._words.get(word)
        if cached is None:
            cached = self.host.mul(self.evaluate(word[:-1]), self.generators[word[-1]])
            self._words[word] = cached
        return cached

    def degree(self, word: Word) -> int:
        return sum(self.generators[i].max_degree() for i in word)

    def render_word(self, word: Word) -> str:
        if not word:
            return "1"
        return "·".join(self.names[i] for i in word)

    @property
    def commuting(self) -> bool:
        if self._commuting is None:
            H = self.host
            self._commuting = True
            for i, j in itertools.combinations(range(len(self.generators)), 2):
                gi, gj = self.generators[i], self.generators[j]
                try:
                    if H.mul(gi, gj) != H.mul(gj, gi):
                        self._commuting = False
                        break
                except DegreeOverflowError:
                    continue
        return self._commuting

    def members(self) -> Tuple[List[Tuple[Word, Element]], bool]:
        """Monoid elements used as annihilator candidates."""
        if self._members is None:
            if self.strategy.kind == "finite-test-set":
                self._members = ([((), t) for t in self.strategy.test_set], True)
            elif self.strategy.kind == "declared-regular":
                self._members = ([((), self.host.one())], True)
            else:
                self._members = enumerate_monoid(self.host, self.generators, self.strategy.limit,
                                                 max_degree=self.host.cutoff)
        return self._members

    def annihilates(self, z: Element) -> Verdict:
        """EQUAL when z·t = 0 for some t found by the strategy."""
        if z.is_zero():
            return Verdict.EQUAL
        if self.strategy.kind == "declared-regular":
            return Verdict.DISTINCT
        members, closed = self.members()
        for _, t in members:
            try:
                if self.host.mul(z, t).is_zero():
                    return Verdict.EQUAL
            except DegreeOverflowError:
                closed = False
        if self.strategy.kind == "finite-test-set" or closed:
            return Verdict.DISTINCT
        logger.warning(f"bounded search of length {self.strategy.limit} found no annihilator; verdict indeterminate")
        return Verdict.INDETERMINATE


# ---------------------------------------------------------------------------
# Fractions
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Fraction:
    """x/g with numerator x and denominator the monoid word g."""

    owner: "LocalizedWBA"
    numerator: Element
    word: Word

    def render(self) -> str:
        return f"({self.owner.host.render(self.numerator)})/{self.owner.monoid.render_word(self.word)}"

    def __repr__(self):
        return f"Fraction[{self.render()}]"


@dataclass
class FractionTensor:
    """Σ c · a⊗b with a, b fractions."""

    owner: "LocalizedWBA"
    terms: List[Tuple[Scalar, Fraction, Fraction]] = dataclass_field(default_factory=list)

    def __add__(self, other: "FractionTensor") -> "FractionTensor":
        return FractionTensor(self.owner, self.terms + other.terms)

    def scale(self, c: Coefficient) -> "FractionTensor":
        c = self.owner.field.coerce(c)
        return FractionTensor(self.owner, [(c * k, a, b) for k, a, b in self.terms])

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)


class LocalizedWBA:
    """H[G⁻¹] for an almost central monoid G."""

    def __init__(self, monoid: DenominatorMonoid, cutoff: Optional[int] = None, bound: Optional[int] = None):
        self.monoid = monoid
        self.host = monoid.host
        self.field = self.host.field
        self.action = monoid.action
        self.cutoff = self.host.cutoff if cutoff is None else cutoff
        self.bound = bound if bound is not None else settings().bound_factor * len(monoid.generators)
        self.name = f"{self.host.name}[{','.join(monoid.names)}⁻¹]"
        self._kernels: Dict[int, EchelonForm] = {}
        self.materialized: Optional["MaterializedLocalization"] = None
        self.reports: List[Report] = []

    # -- construction -------------------------------------------------------

    def fraction(self, x: Element, word: Sequence[int] = ()) -> Fraction:
        word = tuple(word)
        for i in word:
            if not 0 <= i < len(self.monoid.generators):
                raise LocalizationError(f"generator index {i} out of range")
        if x.field != self.field:
            raise LocalizationError("numerator from a different field")
        return Fraction(self, x, word)

    def phi(self, x: Element) -> Fraction:
        return self.fraction(x, ())

    def one(self) -> Fraction:
        return self.phi(self.host.one())

    def zero(self) -> Fraction:
        return self.phi(Element.zero(self.field))

    def inverse_of_generator(self, i: int) -> Fraction:
        return self.fraction(self.host.one(), (i,))

    def _own(self, *items: Fraction):
        for a in items:
            if a.owner is not self:
                raise LocalizationError("fractions from different localizations")

    # -- ring operations ----------------------------------------------------

    def add(self, a: Fraction, b: Fraction) -> Fraction:
        """x/g + y/h = (x·I_g⁻¹(h) + y·g)/(hg)."""
        self._own(a, b)
        H = self.host
        h = self.monoid.evaluate(b.word)
        g = self.monoid.evaluate(a.word)
        numerator = H.mul(a.numerator, self.action.apply_inverse_word(a.word, h)) + H.mul(b.numerator, g)
        return Fraction(self, numerator, b.word + a.word)

    def scale(self, a: Fraction, c: Coefficient) -> Fraction:
        return Fraction(self, a.numerator.scale(c), a.word)

    def neg(self, a: Fraction) -> Fraction:
        return self.scale(a, -1)

    def sub(self, a: Fraction, b: Fraction) -> Fraction:
        return self.add(a, self.neg(b))

    def mul(self, a: Fraction, b: Fraction) -> Fraction:
        """(x/g)(y/h) = x·I_g⁻¹(y)/(hg)."""
        self._own(a, b)
        numerator = self.host.mul(a.numerator, self.action.apply_inverse_word(a.word, b.numerator))
        return Fraction(self, numerator, b.word + a.word)

    def expand(self, a: Fraction, word: Sequence[int]) -> Fraction:
        """The equal fraction x·I_g⁻¹(u)/(ug)."""
        u = tuple(word)
        numerator = self.host.mul(a.numerator, self.action.apply_inverse_word(a.word, self.monoid.evaluate(u)))
        return Fraction(self, numerator, u + a.word)

    def compare(self, a: Fraction, b: Fraction) -> Verdict:
        """x/g = y/h iff (x·I_g⁻¹(h) − y·g)·t = 0 for some t ∈ G."""
        self._own(a, b)
        H = self.host
        h = self.monoid.evaluate(b.word)
        g = self.monoid.evaluate(a.word)
        z = H.mul(a.numerator, self.action.apply_inverse_word(a.word, h)) - H.mul(b.numerator, g)
        return self.monoid.annihilates(z)

    def equal(self, a: Fraction, b: Fraction) -> bool:
        verdict = self.compare(a, b)
        if verdict == Verdict.INDETERMINATE:
            raise IndeterminateError(f"cannot decide {a.render()} = {b.render()} with {self.monoid.strategy.describe()}")
        return verdict == Verdict.EQUAL

    def canonicalize(self, a: Fraction) -> Fraction:
        """Cancel trailing generators from the numerator when G is central."""
        if not self.action.is_identity:
            return a
        word = a.word
        x = a.numerator
        H = self.host
        while word and not x.is_zero() and len(x.degrees()) == 1:
            g = self.monoid.generators[word[-1]]
            degree = x.degrees()[0] - g.max_degree()
            if degree < 0:
                break
            basis = H.basis(degree)
            solver = ImageSolver([dict(H.mul(H.element(b), g).terms()) for b in basis], self.field)
            coeffs = solver.solve(dict(x.terms()))
            if coeffs is None:
                break
            x = Element(self.field, {b: c for b, c in zip(basis, coeffs)})
            word = word[:-1]
        return Fraction(self, x, word)

    # -- coalgebra ----------------------------------------------------------

    def coalgebra(self, a: Fraction) -> Tuple[FractionTensor, Scalar]:
        """Δ(x/g) = x′/g ⊗ x″/g and ε(x/g) = ε(x)."""
        self._own(a)
        terms = []
        for (b1, b2), c in self.host.delta(a.numerator).terms():
            terms.append((c, Fraction(self, self.host.element(b1), a.word), Fraction(self, self.host.element(b2), a.word)))
        return FractionTensor(self, terms), self.host.counit(a.numerator)

    def delta(self, a: Fraction) -> FractionTensor:
        return self.coalgebra(a)[0]

    def counit(self, a: Fraction) -> Scalar:
        return self.host.counit(a.numerator)

    def mul_tensor(self, s: FractionTensor, t: FractionTensor) -> FractionTensor:
        terms = []
        for c1, a1, b1 in s.terms:
            for c2, a2, b2 in t.terms:
                terms.append((c1 * c2, self.mul(a1, a2), self.mul(b1, b2)))
        return FractionTensor(self, terms)

    # -- kernel of φ and common levels --------------------------------------

    def kernel(self, degree: int) -> EchelonForm:
        """Echelon basis of ker φ ∩ H_d."""
        form = self._kernels.get(degree)
        if form is not None:
            return form
        H = self.host
        form = EchelonForm(self.field)
        if self.monoid.strategy.kind != "declared-regular":
            basis = H.basis(degree)
            members, _ = self.monoid.members()
            for _, t in members:
                if self.cutoff is not None and degree + t.max_degree() > self.cutoff:
                    continue
                columns = [dict(H.mul(H.element(b), t).terms()) for b in basis]
                for vec in ImageSolver(columns, self.field).kernel():
                    form.add({b: c for b, c in zip(basis, vec) if not c.is_zero()})
        logger.debug(f"{self.name}: ker φ in degree {degree} has dimension {form.rank}")
        self._kernels[degree] = form
        return form

    def phi_kernel(self, degree: int) -> List[Element]:
        return [Element(self.field, row) for row in self.kernel(degree).rows()]

    def _require_commuting(self):
        if not self.monoid.commuting:
            raise LocalizationError("common denominators need pairwise commuting generators")

    def lift(self, a: Fraction, level: Counter) -> Element:
        """Numerator of a over the common denominator given by the multiset `level`."""
        own = Counter(a.word)
        if any(own[i] > level[i] for i in own):
            raise LocalizationError("level does not contain the fraction's denominator")
        rest = tuple(sorted((level - own).elements()))
        return self.expand(a, rest).numerator

    def normal_form(self, x: Element) -> Element:
        out = Element.zero(self.field)
        for d in x.degrees():
            out = out + Element(self.field, self.kernel(d).reduce(dict(x.homogeneous(d).terms())))
        return out

    def tensor_equal(self, s: FractionTensor, t: FractionTensor) -> bool:
        """Equality in H[G⁻¹]⊗H[G⁻¹]."""
        self._require_commuting()
        diff = s - t
        level = Counter()
        for _, a, b in diff.terms:
            level = level | Counter(a.word) | Counter(b.word)
        total = Tensor.zero(self.field)
        for c, a, b in diff.terms:
            left = self.normal_form(self.lift(a, level))
            right = self.normal_form(self.lift(b, level))
            if left and right:
                total = total + Tensor.of(left, right).scale(c)
        return total.is_zero()

    # -- dimensions ---------------------------------------------------------

    def word_multisets(self, bound: int) -> List[Word]:
        n = len(self.monoid.generators)
        return [w for k in range(bound + 1) for w in itertools.combinations_with_replacement(range(n), k)]

    def fraction_rank(self, degree: int, bound: int) -> int:
        """dim span{x/w : x ∈ H_d, |w| ≤ bound}."""
        self._require_commuting()
        H = self.host
        groups: Dict[int, List[Word]] = {}
        for w in self.word_multisets(bound):
            groups.setdefault(self.monoid.degree(w), []).append(w)
        total = 0
        for delta, words in sorted(groups.items()):
            level = Counter()
            for w in words:
                level = level | Counter(w)
            target = degree + self.monoid.degree(tuple(level.elements())) - delta
            if self.cutoff is not None and target > self.cutoff:
                raise DegreeOverflowError(target, self.cutoff)
            form = EchelonForm(self.field)
            form.extend(self.kernel(target).rows())
            base = form.rank
            for w in words:
                for b in H.basis(degree):
                    form.add(dict(self.lift(Fraction(self, H.element(b), w), level).terms()))
            total += form.rank - base
        return total


def dimension_table(L: LocalizedWBA, cutoff: Optional[int] = None, bound: Optional[int] = None) -> DimensionTable:
    """Kernel, numerator and fraction dimensions per degree, with the stabilization table."""
    H = L.host
    top = (0 if L.cutoff is None else L.cutoff) if cutoff is None else cutoff
    bound = L.bound if bound is None else bound
    table = DimensionTable(subject=L.name, cutoff=top, bound=bound)
    for d in range(top + 1):
        table.host_dims[d] = H.dim(d)
        table.kernel_dims[d] = L.kernel(d).rank
        table.numerator_dims[d] = H.dim(d) - table.kernel_dims[d]
    for b in range(bound + 1):
        row = {}
        for d in range(top + 1):
            try:
                row[d] = L.fraction_rank(d, b)
            except DegreeOverflowError:
                continue
        table.stabilization[b] = row
    table.fraction_dims = dict(table.stabilization[bound])
    logger.info(f"{L.name}: fraction dims {table.fraction_dims}, stabilized={table.stabilized}")
    return table


# ---------------------------------------------------------------------------
# Materialized localization for finite-dimensional hosts
# ---------------------------------------------------------------------------


class MaterializedLocalization(TableWBA):
    """H[G⁻¹] for finite-dimensional H with an explicit basis of fractions."""

    def __init__(self, L: LocalizedWBA, bound: int):
        L._require_commuting()
        self.localization = L
        self.bound = bound
        H = L.host
        self.level = Counter({i: bound for i in range(len(L.monoid.generators))})
        form = EchelonForm(L.field)
        form.extend(L.kernel(0).rows())
        chosen: List[Fraction] = []
        for w in L.word_multisets(bound):
            for b in H.basis(0):
                candidate = Fraction(L, H.element(b), w)
                if form.add(dict(L.lift(candidate, self.level).terms())):
                    chosen.append(candidate)
        self.fractions = chosen
        self._solvers: Dict[Tuple, ImageSolver] = {}
        labels = {0: [a.render() for a in chosen]}
        ids = [BasisId(0, i) for i in range(len(chosen))]
        product = {}
        for i, a in enumerate(chosen):
            for j, b in enumerate(chosen):
                value = self.coordinates(L.mul(a, b))
                if value:
                    product[(ids[i], ids[j])] = value
        coproduct = {}
        counit = {}
        for i, a in enumerate(chosen):
            delta, eps = L.coalgebra(a)
            total = Tensor.zero(L.field)
            for c, left, right in delta.terms:
                total = total + Tensor.of(self.coordinates(left), self.coordinates(right)).scale(c)
            coproduct[ids[i]] = total
            counit[ids[i]] = eps
        super().__init__(L.name, L.field, labels, product, coproduct, counit, self.coordinates(L.one()))
        logger.info(f"{L.name}: materialized {len(chosen)} basis fractions at bound {bound}")

    def coordinates(self, a: Fraction) -> Element:
        """Expand a fraction in the materialized basis."""
        L = self.localization
        level = self.level | Counter(a.word)
        key = tuple(sorted(level.items()))
        solver = self._solvers.get(key)
        if solver is None:
            columns = [dict(L.lift(b, level).terms()) for b in self.fractions]
            columns += L.kernel(0).rows()
            solver = ImageSolver(columns, L.field)
            self._solvers[key] = solver
        coeffs = solver.solve(dict(L.lift(a, level).terms()))
        if coeffs is None:
            raise LocalizationError(f"{a.render()} is outside the span materialized at bound {self.bound}; raise the bound")
        return Element(L.field, {BasisId(0, i): c for i, c in enumerate(coeffs[: len(self.fractions)])})

    def to_fraction(self, x: Element) -> Fraction:
        L = self.localization
        out = L.zero()
        for b, c in x.terms():
            out = L.add(out, L.scale(self.fractions[b.index], c))
        return out


# ---------------------------------------------------------------------------
# Entry points
# ---------------------------------------------------------------------------


def check_regular(H: BasedWBA, s: Element, cutoff: Optional[int] = None) -> Report:
    """Left and right multiplication by s are injective in every degree that fits."""
    report = new_report("regular", H, cutoff)
    top = 0 if report.cutoff is None else report.cutoff - s.max_degree()
    for d in range(top + 1):
        basis = H.basis(d)
        for side in ("right", "left"):
            images = [H.mul(H.element(b), s) if side == "right" else H.mul(s, H.element(b)) for b in basis]
            report.tick()
            null = ImageSolver([dict(x.terms()) for x in images], H.field).kernel()
            if null:
                witness = Element(H.field, {b: c for b, c in zip(basis, null[0])})
                report.add_violation(f"regular.{side}", [H.render(s), H.render(witness)], "0", "nonzero")
    return report


def localize(
    H: BasedWBA,
    monoid: DenominatorMonoid,
    cutoff: Optional[int] = None,
    bound: Optional[int] = None,
) -> LocalizedWBA:
    """
    Build H[G⁻¹] after checking almost-centrality. Finite-dimensional hosts get
    an explicit basis of fractions.
    """
    if monoid.host is not H:
        raise LocalizationError("denominator monoid belongs to a different algebra")
    central = check_almost_central(H, monoid.action, cutoff)
    if not central.passed:
        failed = ", ".join(central.failed_axioms())
        raise AlmostCentralityError(f"{H.name}: denominator monoid is not almost central ({failed})")
    L = LocalizedWBA(monoid, cutoff=cutoff, bound=bound)
    L.reports.append(central)
    if monoid.strategy.kind == "declared-regular":
        for g in monoid.generators:
            regular = check_regular(H, g, cutoff)
            L.reports.append(regular)
            if not regular.passed:
                raise RegularityError(f"{H.render(g)} was declared regular but has a zero divisor")
        logger.warning(f"{L.name}: regularity declared and spot-checked up to degree {cutoff if cutoff is not None else H.cutoff}")
    if H.cutoff is None:
        L.materialized = MaterializedLocalization(L, L.bound)
    return L


def frac_add(a: Fraction, b: Fraction) -> Fraction:
    return a.owner.add(a, b)


def frac_mul(a: Fraction, b: Fraction) -> Fraction:
    return a.owner.mul(a, b)


def frac_eq(a: Fraction, b: Fraction) -> Verdict:
    return a.owner.compare(a, b)


def frac_coalgebra(a: Fraction) -> Tuple[FractionTensor, Scalar]:
    return a.owner.coalgebra(a)


def frac_tensor_equal(s: FractionTensor, t: FractionTensor) -> bool:
    return s.owner.tensor_equal(s, t)


def phi_kernel(L: LocalizedWBA, degree: int) -> List[Element]:
    return L.phi_kernel(degree)


def canonicalize(a: Fraction) -> Fraction:
    return a.owner.canonicalize(a)


# ---------------------------------------------------------------------------
# Checks
# ---------------------------------------------------------------------------


def check_ore(H: BasedWBA, monoid: DenominatorMonoid, samples: Optional[Sequence[Element]] = None,
              cutoff: Optional[int] = None) -> Report:
    """
    (S1) g·I_g⁻¹(x) = x·g, and (S2) g·x = 0 implies x·I_g⁻¹(g) = 0 with
    I_g⁻¹(g) ∈ G, for every generator g and sampled x.
    """
    report = new_report("ore", H, cutoff)
    top = report.cutoff
    action = monoid.action
    if samples is None:
        samples = [H.element(b) for b in (H.basis() if H.cutoff is None else H.basis(up_to=top))]
    members, _ = enumerate_monoid(H, monoid.generators, settings().word_length, max_degree=top)
    keys = {element_key(v) for _, v in members}
    for i, g in enumerate(monoid.generators):
        name = H.render(g)
        annihilated = []
        for x in samples:
            if top is not None and x.max_degree() + g.max_degree() > top:
                continue
            report.tick()
            back = action.inverse(i, x)
            if H.mul(g, back) != H.mul(x, g):
                report.add_violation("ore.S1", [name, H.render(x)], H.render(H.mul(g, back)), H.render(H.mul(x, g)))
            if H.mul(g, x).is_zero() and not x.is_zero():
                annihilated.append(x)
        if H.cutoff is None:
            basis = H.basis(0)
            null = ImageSolver([dict(H.mul(g, H.element(b)).terms()) for b in basis], H.field).kernel()
            annihilated += [Element(H.field, {b: c for b, c in zip(basis, v)}) for v in null]
        t = action.inverse(i, g)
        for x in annihilated:
            report.tick()
            if not H.mul(x, t).is_zero():
                report.add_violation("ore.S2", [name, H.render(x)], H.render(H.mul(x, t)), "0")
        report.tick()
        if element_key(t) not in keys:
            report.add_violation("ore.S2_membership", [name], H.render(t), "an element of G")
        report.notes.setdefault("annihilated", {})[name] = len(annihilated)
    logger.info(report.summary())
    return report


def _sample_fractions(L: LocalizedWBA, rng: random.Random, count: int, max_len: int = 2) -> List[Fraction]:
    H = L.host
    top = 0 if L.cutoff is None else L.cutoff
    out = []
    basis = [b for b in (H.basis() if H.cutoff is None else H.basis(up_to=top))]
    for _ in range(count):
        b = rng.choice(basis)
        k = rng.randint(0, max_len)
        word = tuple(rng.randrange(len(L.monoid.generators)) for _ in range(k))
        out.append(Fraction(L, H.element(b, rng.randint(1, 3)), word))
    return out


def check_fraction_ring(L: LocalizedWBA, samples: Optional[Sequence[Fraction]] = None) -> Report:
    """
    (F1) φ(g) is invertible, (F2) x/g = φ(x)φ(g)⁻¹, (F3) ker φ is annihilated,
    and sums and products do not depend on the chosen representatives.
    """
    report = Report(suite="fraction_ring", subject=L.name, cutoff=L.cutoff, max_witnesses=settings().max_witnesses)
    cfg = settings()
    rng = random.Random(cfg.seed)
    samples = list(samples) if samples is not None else _sample_fractions(L, rng, cfg.sample_size // 4 or 1)

    def expect(axiom, witness, a, b):
        report.tick()
        try:
            verdict = L.compare(a, b)
        except DegreeOverflowError:
            report.notes["skipped"] = report.notes.get("skipped", 0) + 1
            return
        if verdict != Verdict.EQUAL:
            report.add_violation(axiom, witness, a.render(), f"{b.render()} ({verdict.value})")

    for i, g in enumerate(L.monoid.generators):
        name = L.monoid.names[i]
        inv = L.inverse_of_generator(i)
        expect("F1.right", [name], L.mul(L.phi(g), inv), L.one())
        expect("F1.left", [name], L.mul(inv, L.phi(g)), L.one())

    for a in samples:
        witness = [a.render()]
        quotient = L.one()
        for i in reversed(a.word):
            quotient = L.mul(quotient, L.inverse_of_generator(i))
        try:
            expect("F2", witness, L.mul(L.phi(a.numerator), quotient), a)
        except DegreeOverflowError:
            continue

    top = 0 if L.cutoff is None else L.cutoff
    for d in range(top + 1):
        for x in L.phi_kernel(d):
            expect("F3", [L.host.render(x)], L.phi(x), L.zero())

    for a, b in zip(samples, samples[1:]):
        for i in range(len(L.monoid.generators)):
            try:
                a2 = L.expand(a, (i,))
                expect("well_defined.add", [a.render(), b.render()], L.add(a, b), L.add(a2, b))
                expect("well_defined.mul", [a.render(), b.render()], L.mul(a, b), L.mul(a2, b))
                expect("well_defined.mul_right", [a.render(), b.render()], L.mul(b, a), L.mul(b, a2))
            except DegreeOverflowError:
                continue
    logger.info(report.summary())
    return report


def check_fraction_coalgebra(L: LocalizedWBA, samples: Optional[Sequence[Fraction]] = None) -> Report:
    """Δ and ε are well defined on representatives, counital and multiplicative."""
    report = Report(suite="fraction_coalgebra", subject=L.name, cutoff=L.cutoff, max_witnesses=settings().max_witnesses)
    cfg = settings()
    rng = random.Random(cfg.seed + 1)
    samples = list(samples) if samples is not None else _sample_fractions(L, rng, cfg.sample_size // 4 or 1)

    def expect(axiom, witness, ok, lhs="", rhs=""):
        report.tick()
        if not ok:
            report.add_violation(axiom, witness, lhs, rhs)

    for a in samples:
        witness = [a.render()]
        try:
            delta, eps = L.coalgebra(a)
            for i in range(len(L.monoid.generators)):
                a2 = L.expand(a, (i,))
                d2, e2 = L.coalgebra(a2)
                expect("well_defined.delta", witness, L.tensor_equal(delta, d2))
                expect("well_defined.counit", witness, eps == e2, str(eps), str(e2))
            left = L.zero()
            right = L.zero()
            for c, x, y in delta.terms:
                left = L.add(left, L.scale(y, c * L.counit(x)))
                right = L.add(right, L.scale(x, c * L.counit(y)))
            expect("counit.left", witness, L.compare(left, a) == Verdict.EQUAL, left.render(), a.render())
            expect("counit.right", witness, L.compare(right, a) == Verdict.EQUAL, right.render(), a.render())
        except DegreeOverflowError:
            report.notes["skipped"] = report.notes.get("skipped", 0) + 1

    for a, b in zip(samples, samples[1:]):
        try:
            lhs = L.delta(L.mul(a, b))
            rhs = L.mul_tensor(L.delta(a), L.delta(b))
            expect("delta_mul", [a.render(), b.render()], L.tensor_equal(lhs, rhs))
        except DegreeOverflowError:
            report.notes["skipped"] = report.notes.get("skipped", 0) + 1
    logger.info(report.summary())
    return report
