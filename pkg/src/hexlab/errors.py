"""Exception types shared across the package."""


class HexLabError(Exception):
    """Base class for all package errors."""


class IllegalMove(HexLabError):
    """Move targets an occupied cell."""


class OutOfTurn(HexLabError):
    """Move made by the player not on turn."""


class OutOfBounds(HexLabError):
    """Move targets a cell outside the board."""


class Unsupported(HexLabError):
    """Operation not defined for this board kind."""


class ParseError(HexLabError):
    """Malformed position text; carries line/column when known."""

    def __init__(self, message, line=None, column=None):
        super().__init__(message)
        self.line = line
        self.column = column


class InvalidPosition(HexLabError):
    """Position file violates an invariant (duplicate cells, off-board stones, ...)."""


class IncompletePosition(HexLabError):
    """Operation requires every cell to carry a stone."""


class PatternGap(HexLabError):
    """Pattern is undefined on a cell the scan needs."""


class UnknownFixture(HexLabError):
    """No fixture generator registered under this name."""


class InvalidParams(HexLabError):
    """Fixture parameters outside their documented range."""


class BudgetExceeded(HexLabError):
    """Search ran out of node or time budget; distinct from a mathematical result."""


class NotApplicable(HexLabError):
    """Operation preconditions not met (e.g. no game value exists)."""


class InvalidConfiguration(HexLabError):
    """Strategy configuration rejected (e.g. overlapping subboards)."""


class InternalInvariantBroken(HexLabError):
    """A provably-unreachable state was reached; always a bug."""


class StrategyFault(HexLabError):
    """A strategy emitted an illegal move during simulation."""

    def __init__(self, strategy_name, move_index, message):
        super().__init__(f"{strategy_name} at move {move_index}: {message}")
        self.strategy_name = strategy_name
        self.move_index = move_index


class WindowFull(HexLabError):
    """Simulation window exhausted before the horizon."""
