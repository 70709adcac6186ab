"""Optional record of branching steps.

A solver announces every child instance it creates through :func:`branch`.
When no tracer is active this costs one context-variable lookup.
"""

from __future__ import annotations

from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass, field
from typing import IO, Iterator, List, Optional

from ..graph import Graph


@dataclass
class Child:
    step: int
    parent: int
    label: str
    graph: Optional[Graph]
    u: Optional[int]
    v: Optional[int]
    k: Optional[int]


@dataclass
class Tracer:
    stream: Optional[IO[str]] = None
    keep_instances: bool = False
    lines: List[str] = field(default_factory=list)
    children: List[Child] = field(default_factory=list)
    _next: int = 0

    def emit(self, parent: int, label: str, graph=None, u=None, v=None, k=None) -> int:
        self._next += 1
        step = self._next
        line = f"BRANCH {step} {parent} {label}"
        self.lines.append(line)
        if self.stream is not None:
            print(line, file=self.stream)
        if self.keep_instances:
            self.children.append(Child(step, parent, label, graph, u, v, k))
        return step


_active: ContextVar[Optional[Tracer]] = ContextVar("pathcontract_tracer", default=None)


@contextmanager
def tracing(tracer: Tracer) -> Iterator[Tracer]:
    token = _active.set(tracer)
    try:
        yield tracer
    finally:
        _active.reset(token)


def branch(parent: int, label: str, graph=None, u=None, v=None, k=None) -> int:
    """Report a child instance; returns its step id (0 when tracing is off)."""
    tracer = _active.get()
    if tracer is None:
        return 0
    return tracer.emit(parent, label.replace(" ", "_"), graph, u, v, k)
