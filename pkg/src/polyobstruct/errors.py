"""Exception hierarchy shared by the engine and the command line front end."""


class PolyObstructError(Exception):
    """Base class for all errors raised by this package."""

    exit_code = 1


class InputError(PolyObstructError, ValueError):
    """Invalid parameters, malformed polytope specs, out-of-range faces."""

    exit_code = 2


class SpecParseError(InputError):
    """Syntax error in the polytope mini-language."""

    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}: {text!r}")


class ResourceLimitError(PolyObstructError):
    """An exhaustive computation would exceed its configured guard."""

    exit_code = 3


class ConsistencyError(PolyObstructError):
    """Two computation paths that must agree produced different answers."""

    exit_code = 4
