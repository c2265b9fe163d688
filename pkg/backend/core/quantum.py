"""
Quantum Matrices

RTT relations for the level-r graph algebra, the quantum determinant of the
resulting quotient, and the relations of the one-vertex case M_q(2).
"""

import logging
from typing import List, Optional, Sequence, Union

from backend.core.algebra import Element
from backend.core.errors import InvalidPathError
from backend.core.exactfield import RootOfUnityLevel, Scalar
from backend.core.graphs import GraphWBA, Path, build_graph_wba, enumerate_paths, linear_graph
from backend.core.quotient import FreeMatrixBialgebra

logger = logging.getLogger(__name__)

Coefficient = Union[Scalar, int]


def _level(level: Union[RootOfUnityLevel, int]) -> RootOfUnityLevel:
    return level if isinstance(level, RootOfUnityLevel) else RootOfUnityLevel(level)


def rtt_coefficient(level: Union[RootOfUnityLevel, int], i: Sequence[int], l: Sequence[int]) -> Scalar:
    """
    R_{i;ℓ} for paths i, ℓ of length two in the level-r linear graph.

    Nonzero only when both paths start at the same vertex j and their middle
    vertices are j ± 1; every family carries the factor q^{-1/2} = ε^{-1}.
    """
    level = _level(level)
    graph = linear_graph(level.r)
    i, l = graph.check_path(i), graph.check_path(l)
    if len(i) != 3 or len(l) != 3:
        raise InvalidPathError(f"R coefficients are indexed by paths of length two, got {i} and {l}")
    F = level.field
    j = i[0]
    if l[0] != j:
        return F.zero()
    if i[2] == j and l[2] == j:
        up_i, up_l = i[1] == j + 1, l[1] == j + 1
        if up_i and up_l:
            return -level.q_half_power(-1) * level.q_half_power(2 * (j + 1)) / level.qint(j + 1)
        if not up_i and not up_l:
            return level.q_half_power(-1) * level.q_half_power(-2 * (j + 1)) / level.qint(j + 1)
        if not up_i and up_l:
            return level.q_half_power(-1) * level.qint(j) * level.qint(j + 2) / level.qint(j + 1) ** 2
        return level.q_half_power(-1)
    if i == l and abs(i[2] - j) == 2:
        return level.q_half_power(-3)
    return F.zero()


def rtt_relations(level: Union[RootOfUnityLevel, int], H: GraphWBA, scale: Coefficient = 1) -> List[Element]:
    """
    Σ_i [j|i]·R_{i;ℓ} − Σ_i R_{j;i}·[i|ℓ] for all length-two paths j, ℓ,
    with R multiplied by `scale`. Zero relations are dropped.
    """
    level = _level(level)
    if H.field != level.field:
        raise ValueError(f"{H.name} must be built over ℚ(ζ_{8 * level.r})")
    lam = level.field.coerce(scale)
    if lam.is_zero():
        raise ValueError("the R scale must be nonzero")
    paths = enumerate_paths(H.graph, 2)
    table = {(a, b): rtt_coefficient(level, a, b) * lam for a in paths for b in paths}
    relations = []
    for j in paths:
        for l in paths:
            rho = Element.zero(H.field)
            for i in paths:
                if table[(i, l)]:
                    rho = rho + H.pair(j, i, table[(i, l)])
                if table[(j, i)]:
                    rho = rho - H.pair(i, l, table[(j, i)])
            if rho:
                relations.append(rho)
    logger.debug(f"level {level.r}: {len(relations)} nonzero RTT relations")
    return relations


def alpha(level: RootOfUnityLevel, j: int) -> Scalar:
    """α_j: 1 at the end vertices, 1/√2 inside."""
    if j in (0, level.r - 2):
        return level.field.one()
    return level.sqrt2 / 2


def quantum_determinant(level: Union[RootOfUnityLevel, int], H: Optional[GraphWBA] = None) -> Element:
    """
    det_q = Σ_{j,ℓ} α_j α_ℓ ( ⟦ℓ+1⟧/⟦j+1⟧ [j↑|ℓ↑] + ⟦ℓ⟧/⟦j⟧ [j↓|ℓ↓]
                              − ⟦ℓ+1⟧/⟦j⟧ [j↓|ℓ↑] − ⟦ℓ⟧/⟦j+1⟧ [j↑|ℓ↓] ),

    where j↑ = (j, j+1, j) and j↓ = (j, j−1, j); terms whose paths leave the
    vertex range are omitted.
    """
    level = _level(level)
    if H is None:
        H = build_graph_wba(linear_graph(level.r), 2, level.field)
    top = level.r - 2
    qi = level.qint

    def up(j: int) -> Optional[Path]:
        return (j, j + 1, j) if j + 1 <= top else None

    def down(j: int) -> Optional[Path]:
        return (j, j - 1, j) if j - 1 >= 0 else None

    det = Element.zero(H.field)
    for j in range(top + 1):
        for l in range(top + 1):
            weight = alpha(level, j) * alpha(level, l)
            terms = [
                (up(j), up(l), qi(l + 1) / qi(j + 1)),
                (down(j), down(l), None if j == 0 or l == 0 else qi(l) / qi(j)),
                (down(j), up(l), None if j == 0 else -qi(l + 1) / qi(j)),
                (up(j), down(l), -qi(l) / qi(j + 1)),
            ]
            for p, q, coeff in terms:
                if p is None or q is None:
                    continue
                det = det + H.pair(p, q, weight * coeff)
    return det


# ---------------------------------------------------------------------------
# One vertex: M_q(2)
# ---------------------------------------------------------------------------


def mq2_relations(free: FreeMatrixBialgebra, q: Scalar) -> List[Element]:
    """ba − qab, ca − qac, db − qbd, dc − qcd, bc − cb, ad − da − (q⁻¹ − q)bc."""
    if free.n != 2:
        raise ValueError("M_q(2) relations need the 2×2 free matrix bialgebra")
    a, b, c, d = (free.gen(x) for x in "abcd")
    m = free.mul
    return [
        m(b, a) - m(a, b).scale(q),
        m(c, a) - m(a, c).scale(q),
        m(d, b) - m(b, d).scale(q),
        m(d, c) - m(c, d).scale(q),
        m(b, c) - m(c, b),
        m(a, d) - m(d, a) - m(b, c).scale(q.inverse() - q),
    ]


def mq2_determinant(free: FreeMatrixBialgebra, q: Scalar) -> Element:
    """det_q = da − qbc in the free model."""
    a, b, c, d = (free.gen(x) for x in "abcd")
    return free.mul(d, a) - free.mul(b, c).scale(q)
