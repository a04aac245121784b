"""Per-criterion PASS/FAIL summary for the acceptance suite."""

import pytest

_RESULTS: dict[int, tuple[str, str, list[str]]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): numbered acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    num, title = mark.args
    notes = [str(v) for k, v in item.user_properties if k == "note"]
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        _RESULTS[num] = ("PASS" if rep.passed else "FAIL", title, notes)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for num in sorted(_RESULTS):
        status, title, notes = _RESULTS[num]
        tr.write_line(f"{status}  criterion {num:2d}: {title}")
        for note in notes:
            tr.write_line(f"           {note}")
    passed = sum(s == "PASS" for s, _, _ in _RESULTS.values())
    tr.write_line(f"{passed}/{len(_RESULTS)} acceptance criteria pass")
