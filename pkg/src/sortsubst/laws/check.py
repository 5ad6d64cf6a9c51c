"""Generic equation checker.

``check_equation`` walks an instance stream in order, evaluates both sides,
and stops at the first disagreement. Builders that raise are failures too:
the offending instance is reported with the exception in place of a side.

A deadline (a ``time.monotonic`` value) may cut a run short; the report then
says ``complete=False`` and nothing is claimed beyond the instances checked.
"""

from __future__ import annotations

import operator
import time
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

_DEADLINE_STRIDE = 64


@dataclass(frozen=True)
class Counterexample:
    instance: str
    lhs: str
    rhs: str


@dataclass(frozen=True)
class LawReport:
    law_name: str
    instances_checked: int
    first_counterexample: Optional[Counterexample]
    elapsed: float  # seconds
    complete: bool = True

    @property
    def holds(self) -> bool:
        """True when every instance was checked and none disagreed."""
        return self.complete and self.first_counterexample is None


def check_equation(
    name: str,
    instance_source: Iterable,
    lhs_builder: Callable,
    rhs_builder: Callable,
    equality: Callable = operator.eq,
    *,
    render_instance: Callable = repr,
    render_side: Callable = repr,
    deadline: float | None = None,
) -> LawReport:
    start = time.perf_counter()
    checked = 0
    for inst in instance_source:
        if deadline is not None and checked % _DEADLINE_STRIDE == 0 and time.monotonic() > deadline:
            return LawReport(name, checked, None, time.perf_counter() - start, complete=False)
        checked += 1
        try:
            lhs = lhs_builder(inst)
            rhs = rhs_builder(inst)
            same = equality(lhs, rhs)
        except Exception as exc:  # noqa: BLE001 - any builder failure is a law failure
            cex = Counterexample(render_instance(inst), f"raised {type(exc).__name__}: {exc}", "-")
            return LawReport(name, checked, cex, time.perf_counter() - start)
        if not same:
            cex = Counterexample(render_instance(inst), render_side(lhs), render_side(rhs))
            return LawReport(name, checked, cex, time.perf_counter() - start)
    return LawReport(name, checked, None, time.perf_counter() - start)
