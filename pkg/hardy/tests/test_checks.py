import math

import pytest

from hardy.wco.errors import NotSelfMap
from wco_verifier.checks import REGISTRY, CheckContext, register, select
from wco_verifier.checks.registry import Check
from wco_verifier.checks.suite import shortfall


@pytest.fixture
def ctx():
    return CheckContext(seed=0xC0FFEE)


def test_registry_is_populated():
    assert len(REGISTRY) >= 30
    prefixes = {test_id.split(".")[0] for test_id in REGISTRY}
    assert prefixes == {"series", "space", "maps", "operator", "koenigs"}


def test_select_filters_and_sorts():
    ids = [c.test_id for c in select("ppf")]
    assert ids == sorted(ids)
    assert ids and all("ppf" in i for i in ids)
    assert len(select()) == len(REGISTRY)
    assert select("no-such-check") == []


def test_register_rejects_duplicate_ids():
    with pytest.raises(ValueError):
        register("series.identity_laws", "again")(lambda ctx: ({}, 0.0, 0.0))


def test_check_passes_when_metric_within_tolerance(ctx):
    record = Check("demo.pass", "anchor", lambda c: ({"n": 1}, 0.5, 0.5)).run(ctx)
    assert record.passed
    assert record.to_dict()["pass"] is True


def test_check_turns_library_errors_into_failures(ctx):
    def boom(c):
        raise NotSelfMap("phi leaves the disk")

    record = Check("demo.error", "anchor", boom).run(ctx)
    assert not record.passed
    assert math.isinf(record.metric)
    assert "NotSelfMap" in record.params["error"]


def test_rng_is_fresh_per_call(ctx):
    assert ctx.rng().random() == ctx.rng().random()


def test_shortfall():
    assert shortfall(1.0, 2.0) == 0
    assert shortfall(1.0, 0.25) == 0.75


@pytest.mark.parametrize(
    "test_id",
    [
        "operator.non_ppf_falsification",
        "operator.ppf_hermitian_real",
        "operator.ppf_hermitian_perturbed",
        "operator.ppf_normality_condition_holds",
        "operator.ppf_normality_condition_fails",
        "operator.ppf_normality_zero_multiplier",
        "operator.ppf_unweighted_converse",
        "operator.ppf_unweighted_origin",
        "operator.involution_ladder",
        "maps.involution_example",
        "maps.involution_self_inverse",
        "koenigs.inverse_construction",
        "koenigs.iterate_all_ones",
        "koenigs.divergent_hardy",
        "koenigs.obstruction_closed_form",
        "koenigs.obstruction_origin",
        "koenigs.schroeder_sweep",
    ],
)
def test_fast_checks_pass(ctx, test_id):
    record = REGISTRY[test_id].run(ctx)
    assert record.passed, record.to_dict()
