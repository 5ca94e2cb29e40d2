"""Exception hierarchy shared by every meclab module."""


class MeclabError(Exception):
    """Base class for all errors raised by meclab."""


class GraphParseError(MeclabError, ValueError):
    """Raised when a graph or cost document is malformed."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ContractError(MeclabError, ValueError):
    """A precondition of an operation does not hold for its input."""


class NotChordalError(ContractError):
    """Raised for non-chordal input; ``witness`` is a chordless cycle."""

    def __init__(self, witness):
        self.witness = list(witness)
        super().__init__("graph is not chordal; chordless cycle " + "-".join(map(str, self.witness)))


class CycleError(ContractError):
    """The directed part of a graph contains a cycle."""


class OracleCapError(MeclabError):
    """The brute-force oracle was asked to handle a graph above its node cap."""


class InvariantViolation(MeclabError, AssertionError):
    """An internal structural invariant failed. Always a bug."""
