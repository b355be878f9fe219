import pytest

_DETAILS: dict[str, str] = {}


@pytest.fixture
def detail(request):
    """Attach a one-line summary to the running test; shown in the acceptance report."""

    def record(text: str) -> None:
        _DETAILS[request.node.nodeid] = text

    return record


def pytest_terminal_summary(terminalreporter):
    rows = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            if "test_acceptance.py" in rep.nodeid and rep.when == "call":
                rows.append((rep.nodeid, "PASS" if outcome == "passed" else "FAIL"))
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, verdict in sorted(rows, key=lambda r: r[0]):
        name = nodeid.split("::")[-1]
        extra = _DETAILS.get(nodeid, "")
        terminalreporter.write_line(f"{verdict}  {name}  {extra}".rstrip())
