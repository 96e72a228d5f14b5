import pytest

_VERDICTS = pytest.StashKey[list]()


@pytest.fixture
def criterion(request):
    """Record and print a one-line verdict for an acceptance criterion, then assert it."""
    log = request.config.stash.setdefault(_VERDICTS, [])

    def record(number, title, cases, failures):
        status = "PASS" if not failures else "FAIL"
        line = f"criterion {number:>2} {status}  {title}  ({cases} cases, {len(failures)} failures)"
        if failures:
            line += f"  first: {failures[0]!r}"
        log.append(line)
        print(line)
        assert not failures, line

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_VERDICTS, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
