import pytest

from schubloci import harness
from schubloci.harness import SUITES, run_suite
from schubloci.serialize import canonical

SMALL = {"dd-recurrence": 4, "bjs-vs-dd": 4, "vex-det": 4, "inv-recurrence": 4, "vex-lg": 4,
         "fpf-og": 4, "schur-pq-cross": 4, "multiq": 3, "tableau-lg": 3, "dearc": 6,
         "shapes": 5, "grassmannian-cors": 6, "q-positivity": 4}


def test_every_suite_is_listed():
    assert set(SMALL) == set(SUITES)


@pytest.mark.parametrize("name", sorted(SUITES))
def test_suite_passes_small(name):
    report = run_suite(name, SMALL[name])
    assert report.ok, report.human()
    assert report.outcomes


@pytest.mark.parametrize("name", sorted(SUITES))
def test_suite_at_zero_is_vacuous_pass(name):
    assert run_suite(name, 0).ok


def test_report_is_deterministic():
    a = run_suite("shapes", 5)
    b = run_suite("shapes", 5, jobs=2)
    assert canonical(a.to_doc()) == canonical(b.to_doc())
    assert [o.key for o in a.outcomes] == sorted((o.key for o in a.outcomes),
                                                  key=lambda k: canonical(list(k)))


def test_fpf_og_metadata_records_calibration():
    meta = run_suite("fpf-og", 4).metadata
    assert meta["sign_rule"] == "(-1)^(j+k)"
    assert meta["calibration"]["literal_fails_on"] == "(1,4)(2,3)"


@pytest.mark.parametrize("target,suite,n", [
    ("pf_formula_lg", "vex-lg", 4),
    ("det_formula_gr", "vex-det", 3),
    ("schubert_dd", "bjs-vs-dd", 3),
    ("multiparameter_q", "multiq", 2),
])
def test_sabotage_is_detected(monkeypatch, target, suite, n):
    real = getattr(harness, target)
    monkeypatch.setattr(harness, target, lambda *a, **k: real(*a, **k) * 2 + 1)
    report = run_suite(suite, n)
    assert not report.ok
    fail = report.failures[0]
    assert "--instance" in report.reproduce(fail)
    assert fail.lhs is not None or fail.rhs is not None


def test_unknown_instance_rejected():
    with pytest.raises(ValueError, match="not an instance"):
        run_suite("dearc", 4, instance=("(1,2)", "nope"))
