import time
from contextlib import contextmanager

import pytest

ACCEPTANCE = []


@pytest.fixture
def criterion(request):
    """Time a block against a budget and record one summary line for it."""
    @contextmanager
    def run(number, title, budget):
        start = time.perf_counter()
        ok = False
        try:
            yield
            ok = True
        finally:
            elapsed = time.perf_counter() - start
            within = elapsed <= budget
            status = "PASS" if ok and within else "FAIL"
            line = f"criterion {number:>2} {status}: {title} ({elapsed:.1f}s, budget {budget}s)"
            ACCEPTANCE.append((number, line))
            print(line)
        assert within, f"criterion {number} took {elapsed:.1f}s, over its {budget}s budget"
    return run


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(ACCEPTANCE):
            terminalreporter.write_line(line)
