"""Exception types raised across curvpool."""

from typing import Optional


class CurvPoolError(Exception):
    """Base class for every error curvpool raises on purpose."""


class IndexOutOfRange(CurvPoolError, IndexError):
    def __init__(self, index: int, n: int, what: str = "node index") -> None:
        super().__init__(f"{what} {index} out of range [0, {n})")
        self.index = index
        self.n = n


class SelfLoopRejected(CurvPoolError, ValueError):
    def __init__(self, node: int) -> None:
        super().__init__(f"self-loop ({node},{node}) rejected: graphs must be simple")
        self.node = node


class EdgeNotPresent(CurvPoolError, KeyError):
    def __init__(self, u: int, v: int) -> None:
        super().__init__(f"edge ({u},{v}) is not in the graph")
        self.u = u
        self.v = v

    def __str__(self) -> str:
        return str(self.args[0])


class InvalidThresholds(CurvPoolError, ValueError):
    pass


class ShapeMismatch(CurvPoolError, ValueError):
    pass


class InvalidSpec(CurvPoolError, ValueError):
    pass


class EmptyInput(CurvPoolError, ValueError):
    pass


class ParseError(CurvPoolError, ValueError):
    """Malformed input text; `line` is 1-based when known."""

    def __init__(self, message: str, source: str = "<input>", line: Optional[int] = None) -> None:
        location = f"{source}:{line}" if line is not None else source
        super().__init__(f"{location}: {message}")
        self.source = source
        self.line = line


class InvariantViolation(CurvPoolError, ValueError):
    """A value broke a type invariant; `invariant` names it."""

    def __init__(self, invariant: str, detail: str, location: str = "") -> None:
        prefix = f"{location}: " if location else ""
        super().__init__(f"{prefix}{invariant} violated: {detail}")
        self.invariant = invariant
        self.detail = detail
        self.location = location
