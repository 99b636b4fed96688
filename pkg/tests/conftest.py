from hypothesis import settings

import acceptance_log

settings.register_profile("suite", max_examples=60, derandomize=True, deadline=None)
settings.load_profile("suite")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    # One visible line per acceptance criterion, independent of capture mode.
    if acceptance_log.LINES:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_log.LINES:
            terminalreporter.write_line(line)
