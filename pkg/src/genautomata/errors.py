"""Exception hierarchy shared by every module of the package."""


class AutomatonError(Exception):
    """Base class for all errors raised by this package."""


class InputError(AutomatonError, ValueError):
    """A string or label uses a character outside the declared alphabet."""


class FormatError(AutomatonError, ValueError):
    """A textual automaton, order or index payload could not be parsed."""


class DomainError(AutomatonError, ValueError):
    """The automaton is outside the class an operation is defined on."""


class ContractError(AutomatonError, ValueError):
    """An argument violates a documented precondition (e.g. a bad order)."""


class QueryError(AutomatonError, IndexError):
    """A rank/select/index query is out of range."""
