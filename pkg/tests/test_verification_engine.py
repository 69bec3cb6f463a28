import pytest

from qubit_algebras.models.enums import CheckStatus
from qubit_algebras.services.verification_engine import SUITES, VerificationEngine


@pytest.fixture
def engine():
    engine = VerificationEngine()
    for name in SUITES:
        engine.set_suite_enabled(name, name in {"rank", "equivalence"})
    engine.set_suite_params("rank", {"sites": 2})
    engine.set_suite_params("equivalence", {"families": 5})
    return engine


def test_run_suite_reports_pass(engine):
    report = engine.run_suite("rank", seed=1)
    assert report.status == CheckStatus.PASS
    assert report.command == "rank"
    assert report.seed == 1
    assert [d.name for d in report.details][:2] == ["full_algebra_rank_m1", "cyclicity_rank_m1"]


def test_run_all_skips_disabled_suites(engine):
    report = engine.run_all(seed=2)
    assert report.status == CheckStatus.PASS
    prefixes = {d.name.split(".")[0] for d in report.details}
    assert prefixes == {"rank", "equivalence"}


def test_status_listing_and_unknown_suites(engine):
    status = {s["name"]: s["enabled"] for s in engine.get_suite_status()}
    assert status["rank"] is True
    assert status["oracle"] is False
    with pytest.raises(KeyError):
        engine.set_suite_enabled("nope", True)
