"""In-process target execution with crash and hang reification.

A target call either returns its output, raises (a crash), or overruns the
execution budget (a hang).  The budget is enforced with SIGALRM, so the
executor must run in the main thread.
"""

from __future__ import annotations

import signal
from typing import Callable, Optional

from .feedback import ProbeMap
from .outputs import Crash, Hang, TargetOutput
from .targets import TargetInput

DEFAULT_BUDGET_MS = 5000


class BudgetExceeded(Exception):
    pass


def _alarm_handler(signum, frame):
    raise BudgetExceeded


def run_target(
    fn: Callable,
    tin: TargetInput,
    budget_ms: int = DEFAULT_BUDGET_MS,
    probes: Optional[ProbeMap] = None,
) -> TargetOutput:
    """Run one target under a wall-clock budget.

    Returns the target's output, or Crash(message) if it raised, or Hang()
    if it exceeded the budget.  KeyboardInterrupt and SystemExit propagate.
    """
    if budget_ms < 1:
        raise ValueError(f"budget_ms must be >= 1, got {budget_ms}")
    probe = probes.record if probes is not None else None
    previous = signal.signal(signal.SIGALRM, _alarm_handler)
    signal.setitimer(signal.ITIMER_REAL, budget_ms / 1000.0)
    try:
        return fn(tin.graph, tin.endpoints, probe=probe)
    except BudgetExceeded:
        return Hang()
    except RecursionError as exc:
        return Crash(f"RecursionError: {exc}")
    except (KeyboardInterrupt, SystemExit):
        raise
    except Exception as exc:
        return Crash(f"{type(exc).__name__}: {exc}")
    finally:
        signal.setitimer(signal.ITIMER_REAL, 0.0)
        signal.signal(signal.SIGALRM, previous)
