"""
Exact Linear Algebra

Reduced row echelon forms over cyclotomic scalars, for sparse vectors keyed by
any totally ordered keys. The pivot of a row is its largest key, so with a
monomial order on the keys the non-pivot keys are the standard monomials.
"""

import logging
from typing import Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

from backend.core.exactfield import CycloField, Scalar

logger = logging.getLogger(__name__)

Vector = Dict[Hashable, Scalar]


def _axpy(target: Vector, coeff: Scalar, row: Vector) -> None:
    """target += coeff * row, dropping zeros."""
    for key, value in row.items():
        new = target.get(key)
        new = coeff * value if new is None else new + coeff * value
        if new.is_zero():
            target.pop(key, None)
        else:
            target[key] = new


class EchelonForm:
    """Reduced row echelon basis of a subspace."""

    def __init__(self, field: CycloField):
        self.field = field
        self._rows: Dict[Hashable, Vector] = {}

    def __len__(self):
        return len(self._rows)

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> List[Hashable]:
        return sorted(self._rows)

    def rows(self) -> List[Vector]:
        return [dict(self._rows[p]) for p in self.pivots]

    def reduce(self, vector: Vector) -> Vector:
        """Normal form: the unique representative with no pivot keys."""
        out = {k: v for k, v in vector.items() if not v.is_zero()}
        for key in [k for k in out if k in self._rows]:
            coeff = out.get(key)
            if coeff is not None:
                _axpy(out, -coeff, self._rows[key])
        return out

    def contains(self, vector: Vector) -> bool:
        return not self.reduce(vector)

    def add(self, vector: Vector) -> bool:
        """Insert a vector; returns False when it was already in the span."""
        reduced = self.reduce(vector)
        if not reduced:
            return False
        pivot = max(reduced)
        scale = reduced[pivot].inverse()
        reduced = {k: v * scale for k, v in reduced.items()}
        for row in self._rows.values():
            coeff = row.get(pivot)
            if coeff is not None:
                _axpy(row, -coeff, reduced)
        self._rows[pivot] = reduced
        return True

    def extend(self, vectors: Iterable[Vector]) -> int:
        return sum(1 for v in vectors if self.add(v))


# Tagged columns: real keys sort above tag keys, so reduction clears real
# coordinates first and the tag part records the combination used.
_REAL, _TAG = 1, 0


def _tagged(columns: Sequence[Vector], field: CycloField) -> EchelonForm:
    form = EchelonForm(field)
    one = field.one()
    for i, col in enumerate(columns):
        vec = {(_REAL, k): v for k, v in col.items()}
        vec[(_TAG, i)] = one
        form.add(vec)
    return form


def _split(form: EchelonForm, target: Vector) -> Tuple[Vector, Vector]:
    reduced = form.reduce({(_REAL, k): v for k, v in target.items()})
    real = {k[1]: v for k, v in reduced.items() if k[0] == _REAL}
    tags = {k[1]: v for k, v in reduced.items() if k[0] == _TAG}
    return real, tags


class ImageSolver:
    """
    Solves Σ c_i col_i = target for a fixed list of columns.

    `split` decomposes any target as remainder + (a combination of columns),
    where the remainder is supported on keys that are not leading in the image.
    """

    def __init__(self, columns: Sequence[Vector], field: CycloField):
        self.field = field
        self.size = len(columns)
        self._form = _tagged(columns, field)
        self._image_pivots = {p[1] for p in self._form.pivots if p[0] == _REAL}
        self.rank = len(self._image_pivots)

    @property
    def image_pivots(self) -> set:
        return set(self._image_pivots)

    def split(self, target: Vector) -> Tuple[Vector, List[Scalar]]:
        remainder, tags = _split(self._form, target)
        zero = self.field.zero()
        coeffs = [-tags.get(i, zero) for i in range(self.size)]
        return remainder, coeffs

    def solve(self, target: Vector) -> Optional[List[Scalar]]:
        remainder, coeffs = self.split(target)
        return None if remainder else coeffs

    def kernel(self) -> List[List[Scalar]]:
        """Basis of {c : Σ c_i col_i = 0}."""
        zero = self.field.zero()
        basis = []
        for row in self._form.rows():
            if all(k[0] == _TAG for k in row):
                basis.append([row.get((_TAG, i), zero) for i in range(self.size)])
        return basis


def solve(columns: Sequence[Vector], target: Vector, field: CycloField) -> Optional[List[Scalar]]:
    return ImageSolver(columns, field).solve(target)


def kernel(columns: Sequence[Vector], field: CycloField) -> List[List[Scalar]]:
    return ImageSolver(columns, field).kernel()


def rank(vectors: Iterable[Vector], field: CycloField) -> int:
    form = EchelonForm(field)
    form.extend(vectors)
    return form.rank
