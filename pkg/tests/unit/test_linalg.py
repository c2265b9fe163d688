import pytest

from backend.core.exactfield import CycloField
from backend.core.linalg import EchelonForm, ImageSolver, kernel, rank, solve

Q = CycloField.of(1)
F = CycloField.of(8)


def vec(field, **coords):
    return {k: field.coerce(v) for k, v in coords.items()}


class TestEchelonForm:
    """Reduced row echelon bases."""

    def test_rank_and_membership(self):
        form = EchelonForm(Q)
        assert form.add(vec(Q, a=1, b=1))
        assert form.add(vec(Q, b=1, c=1))
        assert not form.add(vec(Q, a=1, b=2, c=1))
        assert form.rank == 2
        assert form.contains(vec(Q, a=2, b=3, c=1))
        assert not form.contains(vec(Q, c=1))

    def test_pivot_is_largest_key(self):
        form = EchelonForm(Q)
        form.add(vec(Q, a=1, c=1))
        assert form.pivots == ["c"]
        assert form.reduce(vec(Q, c=1)) == vec(Q, a=-1)

    def test_reduced_rows_share_no_pivots(self):
        form = EchelonForm(Q)
        form.extend([vec(Q, a=1, b=1), vec(Q, b=1), vec(Q, a=1, c=1)])
        for p in form.pivots:
            hits = [row for row in form.rows() if p in row]
            assert len(hits) == 1

    def test_zero_vector_is_ignored(self):
        form = EchelonForm(Q)
        assert not form.add({})
        assert form.rank == 0

    def test_cyclotomic_coefficients(self):
        z = F.zeta()
        form = EchelonForm(F)
        form.add({"a": z, "b": F.one()})
        assert form.contains({"a": F.one(), "b": z.inverse()})


class TestImageSolver:
    """Linear solves and kernels."""

    def test_solve(self):
        columns = [vec(Q, a=1), vec(Q, a=1, b=1)]
        coeffs = solve(columns, vec(Q, a=3, b=2), Q)
        assert coeffs == [Q.coerce(1), Q.coerce(2)]

    def test_unsolvable(self):
        assert solve([vec(Q, a=1)], vec(Q, b=1), Q) is None

    def test_split_remainder_avoids_image_pivots(self):
        solver = ImageSolver([vec(Q, a=1, b=1)], Q)
        remainder, coeffs = solver.split(vec(Q, a=1, b=3))
        assert not set(remainder) & solver.image_pivots
        assert coeffs == [Q.coerce(3)]
        assert remainder == vec(Q, a=-2)

    def test_kernel(self):
        columns = [vec(Q, a=1), vec(Q, a=2), vec(Q, b=1)]
        null = kernel(columns, Q)
        assert len(null) == 1
        c = null[0]
        assert c[0] * 1 + c[1] * 2 == 0
        assert c[2] == 0

    @pytest.mark.parametrize("n", [1, 2, 5])
    def test_rank_of_identity(self, n):
        assert rank([{i: Q.one()} for i in range(n)], Q) == n
