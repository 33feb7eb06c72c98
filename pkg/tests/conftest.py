"""Shared test configuration: acceptance-criteria summary reporting."""


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Print one line per acceptance test with its outcome."""
    rows = []
    for status in ("passed", "failed", "error", "xfailed", "xpassed"):
        for report in terminalreporter.stats.get(status, []):
            nodeid = getattr(report, "nodeid", "")
            if "test_acceptance.py::" in nodeid and getattr(
                report, "when", "call"
            ) in ("call", None):
                rows.append((nodeid.split("::")[-1], status))
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for name, status in sorted(rows):
        terminalreporter.write_line(f"{status.upper():8s} {name}")
