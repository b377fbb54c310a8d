def pytest_terminal_summary(terminalreporter):
    from tests import test_acceptance  # noqa: imported lazily, after the run

    if test_acceptance.REPORT:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.REPORT:
            terminalreporter.write_line(line)
