"""Debug-mode recursion monitor for engine operations.

Inside ``with DepthMonitor() as mon:`` every call to an operation decorated
with :func:`monitored` records the height of its call tree (counting only
monitored calls) and checks it against ``2 * total input node count``.
Outside a monitor the decorator costs one attribute lookup.
"""

from __future__ import annotations

import functools
import threading
from dataclasses import dataclass, field

from .syntax import Arrow, Base, SubList, Sort, con_size, expr_nodes, sub_nodes, ty_size

_local = threading.local()


def _nodes(arg) -> int:
    if isinstance(arg, SubList):
        return sub_nodes(arg)
    if isinstance(arg, Sort):
        return 1
    if isinstance(arg, (Base, Arrow)):
        return ty_size(arg)
    if isinstance(arg, tuple):
        return con_size(arg)
    return expr_nodes(arg)


@dataclass
class Violation:
    op: str
    height: int
    bound: int


@dataclass
class DepthMonitor:
    calls: int = 0
    sized: int = 0  # calls whose bound was computed exactly
    max_height: int = 0
    max_ratio: float = 0.0  # over sized calls only
    violations: list = field(default_factory=list)
    _stack: list = field(default_factory=list)

    def __enter__(self):
        self._prev = getattr(_local, "monitor", None)
        _local.monitor = self
        return self

    def __exit__(self, *exc):
        _local.monitor = self._prev
        return False

    def run(self, name, fn, args):
        self.calls += 1
        self._stack.append(0)
        try:
            result = fn(*args)
        finally:
            below = self._stack.pop()
        height = below + 1
        # every argument has at least one node, so short trees need no sizing
        if height > 2 * len(args):
            self.sized += 1
            bound = 2 * sum(_nodes(a) for a in args)
            if height > bound:
                self.violations.append(Violation(name, height, bound))
            self.max_ratio = max(self.max_ratio, height / bound)
        self.max_height = max(self.max_height, height)
        if self._stack:
            self._stack[-1] = max(self._stack[-1], height)
        return result


def active_monitor() -> DepthMonitor | None:
    return getattr(_local, "monitor", None)


def monitored(fn):
    name = fn.__name__

    @functools.wraps(fn)
    def wrapper(*args):
        mon = getattr(_local, "monitor", None)
        if mon is None:
            return fn(*args)
        return mon.run(name, fn, args)

    return wrapper
