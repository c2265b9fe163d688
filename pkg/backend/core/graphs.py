"""
Graph Algebras

Directed graphs, their paths, and the weak bialgebra H[𝒢] on pairs of paths
of equal length.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from backend.core.algebra import BasedWBA, BasisId, Element, Tensor
from backend.core.errors import InvalidPathError
from backend.core.exactfield import CycloField

logger = logging.getLogger(__name__)

Path = Tuple[int, ...]


@dataclass(frozen=True)
class DirectedGraph:
    """Finite directed graph on vertices 0..vertices−1."""

    vertices: int
    edges: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        if self.vertices < 1:
            raise ValueError("a graph needs at least one vertex")
        for s, t in self.edges:
            if not (0 <= s < self.vertices and 0 <= t < self.vertices):
                raise ValueError(f"edge ({s}, {t}) leaves the vertex range 0..{self.vertices - 1}")

    def successors(self, v: int) -> List[int]:
        """Targets of edges out of v, with multiplicity, sorted."""
        return sorted(t for s, t in self.edges if s == v)

    def is_path(self, path: Sequence[int]) -> bool:
        if not path or any(not 0 <= v < self.vertices for v in path):
            return False
        return all(t in self.successors(s) for s, t in zip(path, path[1:]))

    def check_path(self, path: Sequence[int]) -> Path:
        if not self.is_path(path):
            raise InvalidPathError(f"{tuple(path)} is not a path in the graph")
        return tuple(path)

    @classmethod
    def from_document(cls, doc) -> "DirectedGraph":
        return cls(doc.vertices, tuple((int(s), int(t)) for s, t in doc.edges))


def linear_graph(r: int) -> DirectedGraph:
    """Vertices 0..r−2 with edges j→j+1 and j+1→j."""
    if r < 3:
        raise ValueError(f"level r must be at least 3, got {r}")
    edges = []
    for j in range(r - 2):
        edges += [(j, j + 1), (j + 1, j)]
    return DirectedGraph(r - 1, tuple(sorted(edges)))


def enumerate_paths(graph: DirectedGraph, m: int) -> List[Path]:
    """All walks of length m, sorted lexicographically by vertex sequence."""
    if m < 0:
        raise ValueError("path length must be non-negative")
    return list(_paths(graph, m))


@lru_cache(maxsize=None)
def _paths(graph: DirectedGraph, m: int) -> Tuple[Path, ...]:
    if m == 0:
        return tuple((v,) for v in range(graph.vertices))
    out = []
    for p in _paths(graph, m - 1):
        for t in graph.successors(p[-1]):
            out.append(p + (t,))
    # duplicate edges give repeated vertex sequences; walks are identified by them
    return tuple(sorted(set(out)))


def render_path(p: Path) -> str:
    return ",".join(str(v) for v in p)


class GraphWBA(BasedWBA):
    """
    H[𝒢] truncated at a cutoff: basis [p|q]_m for paths p, q of length m,
    [p|q][r|s] = [pr|qs] when the paths compose, Δ[p|q] = Σ_r [p|r]⊗[r|q],
    ε[p|q] = δ_pq and 1 = Σ_{j,ℓ} [j|ℓ]₀.
    """

    def __init__(self, graph: DirectedGraph, cutoff: int, field: CycloField, name: str = "H[G]"):
        if cutoff < 0:
            raise ValueError("cutoff must be non-negative")
        super().__init__(name, field, cutoff=cutoff)
        self.graph = graph
        self._pairs: Dict[int, List[Tuple[Path, Path]]] = {}
        self._index: Dict[Tuple[Path, Path], BasisId] = {}

    def pairs(self, m: int) -> List[Tuple[Path, Path]]:
        pairs = self._pairs.get(m)
        if pairs is None:
            self.check_degree(m)
            paths = enumerate_paths(self.graph, m)
            pairs = [(p, q) for p in paths for q in paths]
            self._pairs[m] = pairs
            for i, pq in enumerate(pairs):
                self._index[pq] = BasisId(m, i)
        return pairs

    def dim(self, degree: int) -> int:
        return len(self.pairs(degree))

    def path_pair(self, b: BasisId) -> Tuple[Path, Path]:
        return self.pairs(b.degree)[b.index]

    def pair_id(self, p: Sequence[int], q: Sequence[int]) -> BasisId:
        p, q = self.graph.check_path(p), self.graph.check_path(q)
        if len(p) != len(q):
            raise InvalidPathError(f"paths {p} and {q} have different lengths")
        self.pairs(len(p) - 1)
        return self._index[(p, q)]

    def pair(self, p: Sequence[int], q: Sequence[int], coeff=1) -> Element:
        """The element coeff·[p|q]."""
        return Element.basis(self.field, self.pair_id(p, q), coeff)

    def label(self, b: BasisId) -> str:
        p, q = self.path_pair(b)
        return f"[{render_path(p)}|{render_path(q)}]"

    def _product(self, a, b):
        p, q = self.path_pair(a)
        r, s = self.path_pair(b)
        if p[-1] != r[0] or q[-1] != s[0]:
            return Element.zero(self.field)
        self.pairs(a.degree + b.degree)
        return Element.basis(self.field, self._index[(p + r[1:], q + s[1:])])

    def _coproduct(self, a):
        p, q = self.path_pair(a)
        out = {}
        for r in enumerate_paths(self.graph, a.degree):
            out[(self._index[(p, r)], self._index[(r, q)])] = 1
        return Tensor(self.field, out)

    def _counit(self, a):
        p, q = self.path_pair(a)
        return 1 if p == q else 0

    def _unit(self):
        return Element(self.field, {b: 1 for b in self.basis(0)})


def build_graph_wba(graph: DirectedGraph, cutoff: int, field: Optional[CycloField] = None,
                    name: str = "H[G]") -> GraphWBA:
    return GraphWBA(graph, cutoff, field or CycloField.of(1), name=name)
