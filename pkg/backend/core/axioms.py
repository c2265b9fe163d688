"""
WBA Axioms

Checkers for the weak bialgebra axioms, group-likeness and antipodes on based
algebras. Identities are evaluated on every basis tuple within the cutoff;
failures become Violation entries, never exceptions.
"""

import logging
from typing import Dict, List, Mapping, Optional, Sequence

from backend.core.algebra import BasedWBA, BasisId, Element, LinearMap, Tensor, iter_tuples
from backend.core.errors import DegreeOverflowError
from backend.core.settings import settings
from shared.schemas.reports import GroupLikeKind, Report

logger = logging.getLogger(__name__)


def _basis(H: BasedWBA, cutoff: Optional[int], elements: Optional[Sequence[BasisId]]) -> List[BasisId]:
    if elements is not None:
        return list(elements)
    if H.cutoff is None:
        return H.basis()
    return H.basis(up_to=H.cutoff if cutoff is None else min(cutoff, H.cutoff))


def _limit(H: BasedWBA, cutoff: Optional[int]) -> Optional[int]:
    if H.cutoff is None:
        return None
    return H.cutoff if cutoff is None else min(cutoff, H.cutoff)


def _compare(report: Report, axiom: str, H: BasedWBA, witness, lhs, rhs):
    report.tick()
    if lhs != rhs:
        render = H.render if not hasattr(lhs, "is_rational") else str
        report.add_violation(axiom, [H.label(b) for b in witness], render(lhs), render(rhs))


def new_report(suite: str, H: BasedWBA, cutoff: Optional[int]) -> Report:
    return Report(suite=suite, subject=H.name, cutoff=_limit(H, cutoff),
                  max_witnesses=settings().max_witnesses)


def check_wba_axioms(
    H: BasedWBA,
    cutoff: Optional[int] = None,
    elements: Optional[Sequence[BasisId]] = None,
) -> Report:
    """
    Check associativity, unit, coassociativity, counit, Δ(xy) = Δ(x)Δ(y), the
    two weak counit identities and the two weak unit identities. Also checks
    that ε_s and ε_t are idempotent and that their images commute.
    """
    report = new_report("wba", H, cutoff)
    basis = _basis(H, cutoff, elements)
    top = _limit(H, cutoff)
    e = {b: H.element(b) for b in basis}
    one = H.one()
    source: Dict[BasisId, Element] = {}
    target: Dict[BasisId, Element] = {}

    for (x,) in iter_tuples(basis, 1, top):
        _compare(report, "unit.left", H, (x,), H.mul(one, e[x]), e[x])
        _compare(report, "unit.right", H, (x,), H.mul(e[x], one), e[x])
        dx = H.delta(e[x])
        _compare(report, "coassoc", H, (x,), H.delta2(e[x]), _delta2_right(H, e[x]))
        left = Element.zero(H.field)
        right = Element.zero(H.field)
        for (a, b), c in dx.terms():
            left = left + H.element(b, c * H.counit_basis(a))
            right = right + H.element(a, c * H.counit_basis(b))
        _compare(report, "counit.left", H, (x,), left, e[x])
        _compare(report, "counit.right", H, (x,), right, e[x])
        s = source[x] = H.counital_source(e[x])
        t = target[x] = H.counital_target(e[x])
        _compare(report, "counital.idempotent_source", H, (x,), H.counital_source(s), s)
        _compare(report, "counital.idempotent_target", H, (x,), H.counital_target(t), t)

    for x, y in iter_tuples(basis, 2, top):
        xy = H.mul(e[x], e[y])
        _compare(report, "delta_mul", H, (x, y), H.delta(xy), H.mul_tensor(H.delta(e[x]), H.delta(e[y])))
        _compare(report, "counital.commute", H, (x, y), H.mul(source[x], target[y]), H.mul(target[y], source[x]))

    for x, y, z in iter_tuples(basis, 3, top):
        xy = H.mul(e[x], e[y])
        _compare(report, "assoc", H, (x, y, z), H.mul(xy, e[z]), H.mul(e[x], H.mul(e[y], e[z])))
        xyz = H.counit(H.mul(xy, e[z]))
        split = H.field.zero()
        split_op = H.field.zero()
        for (a, b), c in H.delta(e[y]).terms():
            ea = H.element(a)
            eb = H.element(b)
            split = split + c * H.counit(H.mul(e[x], ea)) * H.counit(H.mul(eb, e[z]))
            split_op = split_op + c * H.counit(H.mul(e[x], eb)) * H.counit(H.mul(ea, e[z]))
        _compare(report, "counit_mul", H, (x, y, z), xyz, split)
        _compare(report, "counit_mul_op", H, (x, y, z), xyz, split_op)

    unit2 = H.delta2(one)
    d1 = H.unit_coproduct()
    left_factor = _extend(H, d1, right=True)
    right_factor = _extend(H, d1, right=False)
    _compare(report, "unit_delta", H, (), unit2, H.mul_tensor(left_factor, right_factor))
    _compare(report, "unit_delta_op", H, (), unit2, H.mul_tensor(right_factor, left_factor))

    logger.info(report.summary())
    return report


def _delta2_right(H: BasedWBA, x: Element) -> Tensor:
    """(id⊗Δ)Δ(x)."""
    out = {}
    for (a, b), c in H.delta(x).terms():
        for (b1, b2), c1 in H.delta_basis(b).terms():
            key = (a, b1, b2)
            value = c * c1
            out[key] = out[key] + value if key in out else value
    return Tensor(H.field, out)


def _extend(H: BasedWBA, t: Tensor, right: bool) -> Tensor:
    """Δ(1)⊗1 when right is True, else 1⊗Δ(1)."""
    one = H.one()
    out = Tensor.zero(H.field)
    for key, c in t.terms():
        for u, cu in one.terms():
            new_key = key + (u,) if right else (u,) + key
            out = out + Tensor(H.field, {new_key: c * cu})
    return out


# ---------------------------------------------------------------------------
# Counital maps and group-likes
# ---------------------------------------------------------------------------


def counital_source(H: BasedWBA, x: Element) -> Element:
    return H.counital_source(x)


def counital_target(H: BasedWBA, x: Element) -> Element:
    return H.counital_target(x)


def is_bialgebra(H: BasedWBA, cutoff: Optional[int] = None) -> bool:
    """H is a bialgebra iff ε_s = η∘ε on every basis element."""
    return bialgebra_witness(H, cutoff) is None


def bialgebra_witness(H: BasedWBA, cutoff: Optional[int] = None) -> Optional[BasisId]:
    """A basis element with ε_s(x) ≠ ε(x)1, or None."""
    one = H.one()
    for b in _basis(H, cutoff, None):
        x = H.element(b)
        if H.counital_source(x) != one.scale(H.counit(x)):
            return b
    return None


def is_group_like(H: BasedWBA, g: Element) -> GroupLikeKind:
    """
    Right group-like: Δg = g1′⊗g1″ and ε_s(g) = 1.
    Left group-like: Δg = 1′g⊗1″g and ε_t(g) = 1.
    """
    one = H.one()
    d1 = H.unit_coproduct()
    dg = H.delta(g)
    gg = Tensor.of(g, g)
    right = dg == H.mul_tensor(gg, d1) and H.counital_source(g) == one
    left = dg == H.mul_tensor(d1, gg) and H.counital_target(g) == one
    if right and left:
        return GroupLikeKind.BOTH
    if right:
        return GroupLikeKind.RIGHT
    if left:
        return GroupLikeKind.LEFT
    return GroupLikeKind.NEITHER


# ---------------------------------------------------------------------------
# Antipodes
# ---------------------------------------------------------------------------


def check_antipode(
    H: BasedWBA,
    S: LinearMap,
    cutoff: Optional[int] = None,
    elements: Optional[Sequence[BasisId]] = None,
) -> Report:
    """
    Check μ(id⊗S)Δ = ε_t, μ(S⊗id)Δ = ε_s and S(x′)x″S(x‴) = S(x).

    `elements` restricts the check, e.g. to algebra generators when S is only
    known to be an anti-homomorphism on them.
    """
    report = new_report("antipode", H, cutoff)
    basis = _basis(H, cutoff, elements)
    for b in basis:
        x = H.element(b)
        try:
            dx = H.delta(x)
            right = Element.zero(H.field)
            left = Element.zero(H.field)
            for (a, c), coeff in dx.terms():
                right = right + H.mul(H.element(a), S.on_basis(c)).scale(coeff)
                left = left + H.mul(S.on_basis(a), H.element(c)).scale(coeff)
            _compare(report, "antipode.target", H, (b,), right, H.counital_target(x))
            _compare(report, "antipode.source", H, (b,), left, H.counital_source(x))
            triple = Element.zero(H.field)
            for (a1, a2, a3), coeff in H.delta2(x).terms():
                triple = triple + H.product(S.on_basis(a1), H.element(a2), S.on_basis(a3)).scale(coeff)
            _compare(report, "antipode.sandwich", H, (b,), triple, S(x))
        except DegreeOverflowError as exc:
            report.notes.setdefault("skipped", []).append(f"{H.label(b)}: {exc}")
    logger.info(report.summary())
    return report


def check_group_likes(H: BasedWBA, elements: Mapping[str, Element], expected: Mapping[str, str]) -> Report:
    """Compare is_group_like on named elements with the expected kinds."""
    report = new_report("grouplike", H, None)
    for name, kind in sorted(expected.items()):
        report.tick()
        found = is_group_like(H, elements[name])
        if found.value != GroupLikeKind(kind).value:
            report.add_violation(f"grouplike.{name}", [H.render(elements[name])], found.value, GroupLikeKind(kind).value)
        report.notes[name] = found.value
    logger.info(report.summary())
    return report


def check_weakness(H: BasedWBA, cutoff: Optional[int] = None) -> Report:
    """Passes when H is not a bialgebra, i.e. some ε_s(x) differs from ε(x)1."""
    report = new_report("weakness", H, cutoff)
    report.tick()
    witness = bialgebra_witness(H, cutoff)
    if witness is None:
        report.add_violation("weak.not_bialgebra", [], "ε_s = η∘ε on every basis element", "a witness")
    else:
        x = H.element(witness)
        report.notes["witness"] = H.label(witness)
        report.notes["source"] = H.render(H.counital_source(x))
    return report
