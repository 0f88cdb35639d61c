import pytest

ACCEPTANCE = {}


@pytest.fixture
def record(request):
    """Record one PASS/FAIL line for an acceptance criterion."""
    def _record(label, passed, detail=""):
        line = f"{'PASS' if passed else 'FAIL'}  {label}  {detail}".rstrip()
        ACCEPTANCE[request.node.name] = line
        print(line)
        return passed
    return _record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for name in sorted(ACCEPTANCE, key=lambda s: int(s.split("_")[1][2:])):
            terminalreporter.write_line(ACCEPTANCE[name])
