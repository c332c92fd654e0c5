from __future__ import annotations

import re
from collections import defaultdict

CRITERIA = {
    1: "regularity of the noncommuting graph",
    2: "unital algebras and the identity element",
    3: "eigenvalues of id_{Sym(m)} and explicit eigenvectors",
    4: "coset axis eigenvalues, fusion rules and containments",
    5: "coset axis primitivity",
    6: "central charges",
    7: "doubled algebra",
    8: "Virasoro minimal-model kit",
    9: "axiality and Miyamoto involutions",
}

_CRITERION = re.compile(r"test_acceptance\.py::test_c(\d+)_")
_outcomes: dict[int, list] = defaultdict(list)


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if m and (report.when == "call" or report.outcome != "passed"):
        _outcomes[int(m.group(1))].append((report.nodeid, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n, title in CRITERIA.items():
        results = _outcomes.get(n)
        if not results:
            tr.write_line(f"criterion {n}: NOT RUN  {title}")
            continue
        failed = [node.split("::", 1)[1] for node, outcome in results if outcome == "failed"]
        status = "FAIL" if failed else "PASS"
        tr.write_line(f"criterion {n}: {status}  {title} ({len(results) - len(failed)}/{len(results)})")
        for name in failed:
            tr.write_line(f"    failing: {name}")
