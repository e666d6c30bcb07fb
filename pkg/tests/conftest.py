import pytest

ACCEPTANCE: dict[int, tuple[bool, float, float, str]] = {}


@pytest.fixture
def criterion():
    """Record (passed, seconds, limit, detail) for one acceptance criterion."""

    def record(k: int, passed: bool, seconds: float, limit: float, detail: str = "") -> None:
        ACCEPTANCE[k] = (passed, seconds, limit, detail)

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        passed, seconds, limit, detail = ACCEPTANCE[k]
        status = "PASS" if passed else "FAIL"
        line = f"criterion {k}: {status}  {seconds:.1f}s (limit {limit:.0f}s)"
        if detail:
            line += f"  {detail}"
        terminalreporter.write_line(line)
