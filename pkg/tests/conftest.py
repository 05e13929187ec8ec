"""Shared pytest plumbing: the acceptance suite registers one summary line
per criterion and the hook below prints them after the run."""

ACCEPTANCE_RESULTS = []  # (number, passed, description)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for num, ok, desc in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(
            f"criterion {num:2d}: {'PASS' if ok else 'FAIL'} - {desc}"
        )
