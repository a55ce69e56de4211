from __future__ import annotations

from collections import OrderedDict

import pytest

from pseudotri import search

# criterion number -> (title, [(test name, outcome)])
_criteria: "OrderedDict[int, tuple[str, list]]" = OrderedDict()

compiled = pytest.mark.skipif(search._compiled is None, reason="compiled backend not built")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            number, title = m.args
            _criteria.setdefault(number, (title, []))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    m = item.get_closest_marker("criterion")
    if m is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _criteria[m.args[0]][1].append((item.name, rep.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(_criteria):
        title, results = _criteria[number]
        if not results:
            continue
        ok = all(o == "passed" for _, o in results)
        tr.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {title}")
        if not ok:
            for name, o in results:
                if o != "passed":
                    tr.write_line(f"              {o}: {name}")
