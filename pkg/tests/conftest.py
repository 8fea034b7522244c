"""Shared acceptance bookkeeping: verdict lines echoed after the run."""

_RESULTS: dict[int, bool] = {}


def begin(criterion: int) -> None:
    _RESULTS[criterion] = False


def finish(criterion: int, failures: list) -> None:
    _RESULTS[criterion] = not failures
    print(f"ACCEPTANCE {criterion}: {'PASS' if not failures else 'FAIL'}")
    assert not failures, f"criterion {criterion}: " + "; ".join(str(f) for f in failures[:10])


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for criterion in sorted(_RESULTS):
        verdict = "PASS" if _RESULTS[criterion] else "FAIL"
        terminalreporter.write_line(f"ACCEPTANCE {criterion}: {verdict}")
