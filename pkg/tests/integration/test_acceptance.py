"""
Whole-catalog runs. These build every example at its default cutoff and are
marked slow; run them with `pytest -m slow`.
"""

import json
from pathlib import Path

import pytest

from backend.core.axioms import check_wba_axioms, is_group_like
from backend.core.catalog import build, list_examples, localization_run, mhatq2, run_manifest
from backend.core.localization import localize
from backend.core.quotient import check_central
from shared.schemas.reports import GroupLikeKind

ROOT = Path(__file__).resolve().parents[2]
REGRESSION = ROOT / "shared" / "regression" / "mhatq2_r4_cutoff3.json"

pytestmark = pytest.mark.slow


def failures(run):
    return {r.suite: r.failed_axioms() for r in run.reports if not r.passed}


class TestCatalogManifests:
    """Every example passes the suites its manifest lists."""

    @pytest.mark.parametrize("name", [d.name for d in list_examples()])
    def test_manifest(self, name):
        run = run_manifest(build(name))
        assert run.passed, failures(run)

    @pytest.mark.parametrize("r", [3, 4])
    def test_graph_algebra_at_cutoff_two(self, r):
        entry = build("mhatq2", r=r, cutoff=2)
        assert check_wba_axioms(entry.host).passed

    @pytest.mark.parametrize("alpha", ["1", "2", "-3"])
    def test_sweedler_coquasi(self, alpha):
        run = run_manifest(build("sweedler", alpha=alpha), ["coquasi", "almost_central"])
        assert run.passed, failures(run)


class TestLocalizations:
    """Fraction algebras of the catalog."""

    @pytest.mark.parametrize("name", ["sweedler", "h4", "radford", "w-mq2"])
    def test_localization_suites(self, name):
        run = localization_run(build(name))
        assert run.passed, failures(run)

    def test_h4_collapses_to_the_ground_field(self):
        entry = build("h4")
        L = localize(entry.host, entry.monoid())
        assert L.materialized.dim(0) == 1
        assert check_wba_axioms(L.materialized).passed

    def test_tensor_with_h4_matches_mq2(self):
        plain = localization_run(build("mq2"), checks=False).dimensions
        tensor = localization_run(build("h4-mq2"), checks=False).dimensions
        assert tensor.fraction_dims == plain.fraction_dims

    def test_tensor_with_sweedler_matches_w_glq2(self):
        plain = localization_run(build("mq2"), checks=False).dimensions
        tensor = localization_run(build("w-mq2"), checks=False).dimensions
        assert tensor.fraction_dims == {d: 4 * n for d, n in plain.fraction_dims.items()}


class TestQuantumDeterminant:
    """det_q in the graph quotient at several levels."""

    @pytest.mark.parametrize("r", [3, 4, 5])
    def test_group_like_and_central(self, r):
        M, det = mhatq2(r, 3)
        assert is_group_like(M, det) == GroupLikeKind.BOTH
        assert check_central(M, det).passed

    def test_dimension_regression(self):
        stored = json.loads(REGRESSION.read_text(encoding="utf-8"))
        M, _ = mhatq2(4, 3)
        assert {str(d): n for d, n in M.dims(3).items()} == stored["dims"]
