import pytest

from backend.core.catalog import (
    BUILDERS,
    build,
    describe,
    graph_entry,
    list_examples,
    localization_run,
    run_manifest,
)
from backend.core.errors import CatalogError
from backend.core.graphs import linear_graph
from shared.schemas.config import SUITES


class TestManifest:
    """The example manifest in shared/dictionaries/catalog.yaml."""

    def test_every_entry_has_a_builder(self):
        names = [d.name for d in list_examples()]
        assert len(names) == 10
        assert set(names) == set(BUILDERS)

    def test_suites_are_known(self):
        for d in list_examples():
            assert set(d.suites) <= set(SUITES)

    def test_describe(self):
        d = describe("h4")
        assert d.generators == ["zerobar", "onebar"]
        assert d.group_likes["zerobar"] == "both"

    def test_unknown_example(self):
        with pytest.raises(CatalogError, match="unknown example"):
            describe("octonions")


class TestBuild:
    """Parameter handling in build()."""

    def test_defaults(self):
        entry = build("sweedler")
        assert entry.parameters == {"alpha": "1", "antipode": "corrected"}
        assert entry.generator_names == ["f"]
        assert entry.cutoff is None

    def test_rational_alpha(self):
        entry = build("sweedler", alpha="-1/3")
        assert entry.parameters["alpha"] == "-1/3"
        W = entry.host
        assert entry.rform.r(W.element("y"), W.element("y")) == W.field.rational(-1) / 3

    @pytest.mark.parametrize("params", [{"bogus": 1}, {"antipode": "nope"}, {"alpha": "x"}])
    def test_bad_parameters(self, params):
        with pytest.raises(CatalogError):
            build("sweedler", **params)

    def test_level_must_be_at_least_three(self):
        with pytest.raises(CatalogError):
            build("mq2", r=2)

    def test_boolean_parameter(self):
        entry = build("w-h4-mhat", include_nilpotent="false")
        assert entry.generator_names == ["f", "zerobar", "detq"]
        with pytest.raises(CatalogError):
            build("w-h4-mhat", include_nilpotent="maybe")

    def test_missing_element(self):
        with pytest.raises(CatalogError):
            build("h4").element("fourbar")

    def test_cutoff_override(self):
        entry = build("radford", cutoff=2)
        assert entry.host.dims() == {0: 1, 1: 2, 2: 4}

    def test_finite_examples_ignore_cutoff(self):
        assert build("h4", cutoff=5).cutoff is None


class TestRunManifest:
    """Suites and localization runs."""

    @pytest.mark.parametrize("name", ["sweedler", "h4", "radford"])
    def test_small_examples_pass(self, name):
        run = run_manifest(build(name))
        assert run.passed, [(r.suite, r.failed_axioms()) for r in run.reports if not r.passed]
        assert run.example == name

    def test_selected_suites(self):
        run = run_manifest(build("sweedler"), ["wba", "coquasi"])
        assert [r.suite for r in run.reports] == ["wba", "coquasi"]
        assert run.strategy == "bounded-search(4)"

    def test_as_printed_antipode_fails(self):
        run = run_manifest(build("sweedler", antipode="as_printed"), ["antipode"])
        assert not run.passed
        assert "antipode.target" in run.reports[0].failed_axioms()

    def test_unknown_suite(self):
        with pytest.raises(CatalogError):
            run_manifest(build("h4"), ["nonsense"])

    def test_missing_rform(self):
        with pytest.raises(CatalogError):
            run_manifest(build("radford"), ["coquasi"])

    def test_h4_localization(self):
        run = localization_run(build("h4"), ["zerobar", "onebar"])
        assert run.passed
        assert run.results["materialized_dim"] == 1
        assert run.results["generators"] == ["zerobar", "onebar"]
        assert run.dimensions.fraction_dims == {0: 1}

    def test_sweedler_localization(self):
        run = localization_run(build("sweedler"))
        assert run.passed
        assert run.results["materialized_dim"] == 4

    def test_non_group_like_generator_is_reported(self):
        run = localization_run(build("sweedler"), ["y"])
        assert not run.passed
        assert "almost_central.group_like" in run.reports[0].failed_axioms()

    def test_graph_entry(self):
        entry = graph_entry(linear_graph(3), 2)
        assert entry.descriptor.title == "Graph algebra of 2 vertices"
        run = run_manifest(entry)
        assert run.passed
        assert entry.host.dims() == {0: 4, 1: 4, 2: 4}
