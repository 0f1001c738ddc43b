import os

from hypothesis import HealthCheck, settings

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", max_examples=200, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

# acceptance outcomes, filled in by test_acceptance.py
CRITERIA: dict[int, list[tuple[str, bool, str]]] = {}


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for num in sorted(CRITERIA):
        checks = CRITERIA[num]
        ok = all(passed for _, passed, _ in checks)
        detail = "; ".join(f"{name}: {'ok' if passed else 'FAILED'}{' (' + note + ')' if note else ''}"
                           for name, passed, note in checks)
        tr.write_line(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
