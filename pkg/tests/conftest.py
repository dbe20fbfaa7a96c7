import os
import sys

from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile(
    "repo", derandomize=True, deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import LEDGER
    except ImportError:
        return
    if not LEDGER:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(LEDGER):
        terminalreporter.write_line(LEDGER[n])
