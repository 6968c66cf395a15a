import time
from dataclasses import dataclass


class NodeLimitExceeded(Exception):
    def __init__(self, nodes):
        super().__init__(f"search stopped after {nodes} nodes")
        self.nodes = nodes


class DeadlineExceeded(Exception):
    pass


@dataclass
class SearchStats:
    """Counters threaded through the exact searches, with optional node and time limits."""

    nodes: int = 0
    limit: int | None = None
    deadline: float | None = None  # time.monotonic() value

    def tick(self) -> None:
        self.nodes += 1
        if self.limit is not None and self.nodes > self.limit:
            raise NodeLimitExceeded(self.nodes)
        if self.deadline is not None and self.nodes % 256 == 0 and time.monotonic() > self.deadline:
            raise DeadlineExceeded(f"time limit hit after {self.nodes} nodes")

    @classmethod
    def with_timeout(cls, seconds: float | None, limit: int | None = None) -> "SearchStats":
        deadline = None if seconds is None else time.monotonic() + seconds
        return cls(limit=limit, deadline=deadline)
