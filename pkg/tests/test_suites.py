import pytest

from cofin import suites


@pytest.mark.parametrize("seed", [1, 2, 3])
@pytest.mark.parametrize("name", ["acont", "ldn", "extcof", "fdn", "monoid"])
def test_suites_pass_for_other_seeds(name, seed):
    (report,) = suites.run(name, seed=seed)
    assert report["status"] == "pass", report


def test_report_shape():
    (report,) = suites.run("sigma")
    assert set(report) == {"suite", "status", "seconds", "checks"}
    assert all(set(c) <= {"name", "status", "count", "detail"} for c in report["checks"])


def test_suite_arguments():
    assert suites.run("clu1", 2)[0]["suite"] == "clu1 2"
    assert suites.run("acont", 240)[0]["checks"][0]["count"] == 240
    assert suites.run("rules", 50)[0]["checks"][0]["count"] == 50
    with pytest.raises(KeyError):
        suites.run("nosuch")
    with pytest.raises(ValueError):
        suites.run("sigma", 3)


def test_failures_are_reported():
    s = suites.Suite("demo")
    s.tally("odd numbers", [1, 3, 4, 5], lambda n: n % 2 == 1)
    report = s.report()
    assert report["status"] == "fail"
    assert report["checks"][0] == {"name": "odd numbers", "status": "fail", "count": 3,
                                   "detail": "failed on 4"}
