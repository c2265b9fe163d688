"""
Graded Quotients

Free bialgebras on an alphabet and quotients of graded based WBAs by
two-sided ideals generated in degree 2.

Each degree slice of the ideal is a finite linear span, computed by exact row
reduction: I₂ = H₀·R·H₀ and I_d = H₁·I_{d−1} + I_{d−1}·H₁. The quotient basis
in degree d is the set of free basis elements that are not pivots of I_d.
"""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

from backend.core.algebra import BasedWBA, BasisId, Coefficient, Element, Tensor
from backend.core.axioms import new_report
from backend.core.errors import CoidealError
from backend.core.exactfield import CycloField
from backend.core.linalg import EchelonForm
from backend.core.settings import settings
from shared.schemas.reports import Report

logger = logging.getLogger(__name__)

MATRIX_NAMES = {2: ("a", "b", "c", "d")}


LetterTerms = Sequence[Tuple[Coefficient, int, int]]


class FreeBialgebra(BasedWBA):
    """
    The free algebra on a finite alphabet, with Δ and ε given on letters and
    extended multiplicatively. Basis: words, lexicographic per degree.
    """

    def __init__(
        self,
        names: Sequence[str],
        letter_delta: Sequence[LetterTerms],
        letter_counit: Sequence[Coefficient],
        field: CycloField,
        cutoff: int,
        name: str,
    ):
        if not names:
            raise ValueError("a free algebra needs at least one letter")
        if not (len(names) == len(letter_delta) == len(letter_counit)):
            raise ValueError("one coproduct and one counit value per letter")
        super().__init__(name, field, cutoff=cutoff)
        self.names = tuple(names)
        self.letters = len(names)
        self._letter_delta = [[(field.coerce(c), l, r) for c, l, r in terms] for terms in letter_delta]
        self._letter_counit = [field.coerce(c) for c in letter_counit]
        self.generators = [BasisId(1, i) for i in range(self.letters)]
        self.words = _WordView(self)
        self._sep = "" if all(len(n) == 1 for n in names) else "·"

    def dim(self, degree: int) -> int:
        return self.letters ** degree

    def word(self, b: BasisId) -> Tuple[int, ...]:
        digits = []
        index = b.index
        for _ in range(b.degree):
            index, digit = divmod(index, self.letters)
            digits.append(digit)
        return tuple(reversed(digits))

    def word_id(self, word: Sequence[int]) -> BasisId:
        index = 0
        for letter in word:
            index = index * self.letters + letter
        return BasisId(len(word), index)

    def gen(self, name: str) -> Element:
        return Element.basis(self.field, BasisId(1, self.names.index(name)))

    def label(self, b: BasisId) -> str:
        if b.degree == 0:
            return "1"
        return self._sep.join(self.names[i] for i in self.word(b))

    def _product(self, a, b):
        return Element.basis(self.field, self.word_id(self.word(a) + self.word(b)))

    def _coproduct(self, a):
        terms = [(self.field.one(), (), ())]
        for letter in self.word(a):
            terms = [(c * c1, l + (l1,), r + (r1,)) for c, l, r in terms for c1, l1, r1 in self._letter_delta[letter]]
        out = Tensor.zero(self.field)
        for c, l, r in terms:
            out = out + Tensor(self.field, {(self.word_id(l), self.word_id(r)): c})
        return out

    def _counit(self, a):
        out = self.field.one()
        for letter in self.word(a):
            out = out * self._letter_counit[letter]
        return out

    def _unit(self):
        return Element.basis(self.field, BasisId(0, 0))


class FreeMatrixBialgebra(FreeBialgebra):
    """
    The free algebra on t_pq (1 ≤ p, q ≤ n) with Δ(t_pq) = Σ_k t_pk⊗t_kq and
    ε(t_pq) = δ_pq. For n = 2 the letters are a, b, c, d.
    """

    def __init__(self, n: int, field: CycloField, cutoff: int, name: Optional[str] = None):
        if n < 1:
            raise ValueError("matrix size must be at least 1")
        self.n = n
        names = MATRIX_NAMES.get(n) or tuple(f"t{p + 1}{q + 1}" for p in range(n) for q in range(n))
        delta = [[(1, p * n + k, k * n + q) for k in range(n)] for p in range(n) for q in range(n)]
        counit = [1 if p == q else 0 for p in range(n) for q in range(n)]
        super().__init__(names, delta, counit, field, cutoff, name or f"T(M{n})")

    def generator(self, p: int, q: int) -> Element:
        """t_pq with 1-based indices."""
        return Element.basis(self.field, BasisId(1, (p - 1) * self.n + (q - 1)))


class _WordView(dict):
    """Lazy basis → generator-word mapping for free algebras."""

    def __init__(self, free: FreeBialgebra):
        super().__init__()
        self.free = free

    def __missing__(self, b: BasisId):
        word = tuple(BasisId(1, i) for i in self.free.word(b))
        self[b] = word
        return word

    def items(self):
        for b in self.free.basis():
            self[b]
        return super().items()


def free_matrix_bialgebra(n: int, field: Optional[CycloField] = None, cutoff: int = 3) -> FreeMatrixBialgebra:
    return FreeMatrixBialgebra(n, field or CycloField.of(1), cutoff)


def tensor_algebra(names: Sequence[str], letter_delta: Sequence[LetterTerms], letter_counit: Sequence[Coefficient],
                   field: Optional[CycloField] = None, cutoff: int = 3, name: str = "T(V)") -> FreeBialgebra:
    """T(V) for a coalgebra V given on its basis."""
    return FreeBialgebra(names, letter_delta, letter_counit, field or CycloField.of(1), cutoff, name)


# ---------------------------------------------------------------------------
# Quotients
# ---------------------------------------------------------------------------


class GradedQuotient(BasedWBA):
    """H/I for a graded based WBA H and an ideal I generated by degree-2 relations."""

    def __init__(
        self,
        free: BasedWBA,
        relations: Sequence[Element],
        cutoff: Optional[int] = None,
        name: Optional[str] = None,
        coideal_degree: Optional[int] = None,
    ):
        if free.cutoff is not None:
            cutoff = free.cutoff if cutoff is None else min(cutoff, free.cutoff)
        if cutoff is None:
            raise ValueError("graded quotients need a cutoff")
        super().__init__(name or f"{free.name}/I", free.field, cutoff=cutoff)
        for rho in relations:
            if rho and rho.degrees() != [2]:
                raise ValueError("relations must be homogeneous of degree 2")
        self.free = free
        self.relations = [rho for rho in relations if rho]
        self._ideal: Dict[int, EchelonForm] = {}
        self._standard: Dict[int, List[BasisId]] = {}
        self._position: Dict[BasisId, BasisId] = {}
        if free.generators is not None:
            self.generators = [self._to_quotient_id(g) for g in free.generators]
        if free.words is not None:
            self.words = _QuotientWords(self)
        self.coideal_report = self._coideal_test(coideal_degree or settings().coideal_degree)

    # -- ideal slices -------------------------------------------------------

    def ideal(self, degree: int) -> EchelonForm:
        form = self._ideal.get(degree)
        if form is not None:
            return form
        self.check_degree(degree)
        F = self.free
        form = EchelonForm(self.field)
        if degree == 2 and self.relations:
            units = F.basis(0)
            for rho in self.relations:
                if len(units) == 1:
                    form.add(dict(rho.terms()))
                    continue
                for e in units:
                    left = F.mul(F.element(e), rho)
                    if not left:
                        continue
                    for f in units:
                        form.add(dict(F.mul(left, F.element(f)).terms()))
        elif degree > 2:
            below = self.ideal(degree - 1)
            for row in below.rows():
                v = Element(self.field, row)
                for a in F.basis(1):
                    form.add(dict(F.mul(F.element(a), v).terms()))
                    form.add(dict(F.mul(v, F.element(a)).terms()))
        logger.debug(f"{self.name}: ideal slice in degree {degree} has dimension {form.rank} of {F.dim(degree)}")
        self._ideal[degree] = form
        return form

    def standard(self, degree: int) -> List[BasisId]:
        basis = self._standard.get(degree)
        if basis is None:
            pivots = set(self.ideal(degree).pivots)
            basis = [b for b in self.free.basis(degree) if b not in pivots]
            self._standard[degree] = basis
            for i, b in enumerate(basis):
                self._position[b] = BasisId(degree, i)
        return basis

    def _to_quotient_id(self, b: BasisId) -> BasisId:
        self.standard(b.degree)
        return self._position[b]

    def dim(self, degree: int) -> int:
        return len(self.standard(degree))

    def label(self, b: BasisId) -> str:
        return self.free.label(self.standard(b.degree)[b.index])

    # -- projections --------------------------------------------------------

    def normal_form(self, x: Element) -> Element:
        """The representative of x in the span of standard monomials (in the free model)."""
        out = Element.zero(self.field)
        for d in x.degrees():
            out = out + Element(self.field, self.ideal(d).reduce(dict(x.homogeneous(d).terms())))
        return out

    def project(self, x: Element) -> Element:
        out = {}
        for b, c in self.normal_form(x).terms():
            out[self._to_quotient_id(b)] = c
        return Element(self.field, out)

    def lift(self, y: Element) -> Element:
        return Element(self.field, {self.standard(b.degree)[b.index]: c for b, c in y.terms()})

    def project_tensor(self, t: Tensor) -> Tensor:
        out = Tensor.zero(self.field)
        cache: Dict[BasisId, Element] = {}
        for key, c in t.terms():
            factors = []
            for b in key:
                if b not in cache:
                    cache[b] = self.project(Element.basis(self.field, b))
                factors.append(cache[b])
            if all(factors):
                out = out + Tensor.of(*factors).scale(c)
        return out

    # -- structure ----------------------------------------------------------

    def _product(self, a, b):
        return self.project(self.free.mul_basis(self.standard(a.degree)[a.index], self.standard(b.degree)[b.index]))

    def _coproduct(self, a):
        if not self.coideal_report.passed:
            raise CoidealError(f"{self.name}: relations do not generate a coideal; Δ does not descend")
        return self.project_tensor(self.free.delta_basis(self.standard(a.degree)[a.index]))

    def _counit(self, a):
        return self.free.counit_basis(self.standard(a.degree)[a.index])

    def _unit(self):
        return self.project(self.free.one())

    def _coideal_test(self, top: int) -> Report:
        """Δ(I_d) ⊆ I⊗H + H⊗I and ε(I_d) = 0 for 2 ≤ d ≤ top."""
        report = new_report("coideal", self, top)
        limit = top if self.cutoff is None else min(top, self.cutoff)
        for d in range(2, limit + 1):
            for row in self.ideal(d).rows():
                v = Element(self.field, row)
                report.tick()
                image = self.project_tensor(self.free.delta(v))
                if image:
                    report.add_violation("quotient.coideal", [self.free.render(v)], self.render(image), "0")
                report.tick()
                eps = self.free.counit(v)
                if not eps.is_zero():
                    report.add_violation("quotient.counit", [self.free.render(v)], str(eps), "0")
        if not report.passed:
            logger.warning(report.summary())
        return report


class _QuotientWords(dict):
    """Quotient basis → word in quotient generators, inherited from the free model."""

    def __init__(self, quotient: GradedQuotient):
        super().__init__()
        self.quotient = quotient

    def __missing__(self, b: BasisId):
        Q = self.quotient
        free_word = Q.free.words[Q.standard(b.degree)[b.index]]
        word = tuple(Q._to_quotient_id(g) for g in free_word)
        self[b] = word
        return word

    def items(self):
        Q = self.quotient
        for b in Q.basis():
            self[b]
        return super().items()


def impose_relations(free: BasedWBA, relations: Sequence[Element], cutoff: Optional[int] = None,
                     name: Optional[str] = None) -> GradedQuotient:
    return GradedQuotient(free, relations, cutoff=cutoff, name=name)


def check_central(Q: BasedWBA, x: Element, cutoff: Optional[int] = None) -> Report:
    """x·e = e·x for every basis element e with deg e ≤ cutoff − deg x."""
    report = new_report("central", Q, cutoff)
    degrees = x.degrees()
    if len(degrees) > 1:
        raise ValueError("centrality is checked for homogeneous elements")
    top = (0 if report.cutoff is None else report.cutoff) - x.max_degree()
    name = Q.render(x)
    for d in range(top + 1):
        for b in Q.basis(d):
            e = Q.element(b)
            report.tick()
            xe, ex = Q.mul(x, e), Q.mul(e, x)
            if xe != ex:
                report.add_violation("central", [name, Q.label(b)], Q.render(xe), Q.render(ex))
    return report
