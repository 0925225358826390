import pytest

from sympow import suites


def test_golden_tables_cover_all_examples():
    golden = suites.load_golden()
    assert {(t, f): g["max_degree"] for (t, f), g in golden.items()} == {
        ("sp2-f2", "C"): 9, ("sp2-f2", "H"): 18, ("sp2-z", "C"): 11, ("sp2-z", "H"): 24,
        ("sp2n-f2", "C"): 8, ("sp2n-f2", "H"): 16, ("sp2n-z", "C"): 12, ("sp2n-z", "H"): 24,
    }


def test_run_order_is_deterministic(monkeypatch):
    monkeypatch.setenv("SYMPOW_THREADS", "4")
    a = suites.run_suites(["kernels", "closedforms", "appendix"])
    monkeypatch.setenv("SYMPOW_THREADS", "1")
    b = suites.run_suites(["kernels", "closedforms", "appendix"])
    assert [s for s, _ in a] == ["kernels", "closedforms", "appendix"]
    assert a == b


def test_thread_count(monkeypatch):
    monkeypatch.setenv("SYMPOW_THREADS", "0")
    assert suites.thread_count() >= 1
    monkeypatch.setenv("SYMPOW_THREADS", "3")
    assert suites.thread_count() == 3
    monkeypatch.setenv("SYMPOW_THREADS", "-1")
    with pytest.raises(ValueError):
        suites.thread_count()


def test_unknown_suite():
    with pytest.raises(ValueError):
        suites.run_suites(["bogus"])


def test_all_is_the_conjunction():
    results = suites.run_suites(["all"])
    assert [s for s, _ in results] == list(suites.SUITES)
    assert all(v.ok for _, vs in results for v in vs)
    assert suites.suite_verdict("all", [v for _, vs in results for v in vs])


def test_structure_suite():
    assert all(suites.structure_suite())
