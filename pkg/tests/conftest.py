import contextlib
import time

import pytest


def pytest_configure(config):
    config._acceptance_lines = []


@pytest.fixture
def criterion(request):
    """Context manager that times one acceptance criterion and logs a PASS/FAIL line.

    The body sets ``state["ok"]`` and optionally ``state["detail"]``; the
    line is logged even when the body raises.
    """
    lines = request.config._acceptance_lines

    @contextlib.contextmanager
    def run(number, title, budget_s=None):
        state = {"ok": False, "detail": ""}
        t0 = time.perf_counter()
        try:
            yield state
        except Exception as exc:
            state["ok"] = False
            state["detail"] = f"{type(exc).__name__}: {exc}"
            raise
        finally:
            elapsed = time.perf_counter() - t0
            in_budget = budget_s is None or elapsed < budget_s
            ok = state["ok"] and in_budget
            budget = f" < {budget_s:g} s" if budget_s is not None else ""
            line = f"criterion {number} {'PASS' if ok else 'FAIL'}: {title} [{elapsed:.2f} s{budget}]"
            if state["detail"]:
                line += f" {state['detail']}"
            lines.append(line)
            print(line)
            state["ok"] = ok

    return run


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_acceptance_lines", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
