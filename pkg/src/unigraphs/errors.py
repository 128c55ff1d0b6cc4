class UnigraphsError(Exception):
    """Base class for library errors."""


class InvalidVertex(UnigraphsError, IndexError):
    pass


class NotAModule(UnigraphsError, ValueError):
    pass


class Graph6Error(UnigraphsError, ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


class SequenceError(UnigraphsError, ValueError):
    """Malformed or out-of-domain degree sequence."""

    def __init__(self, message: str, column: int | None = None):
        if column is not None:
            message = f"{message} (column {column})"
        super().__init__(message)
        self.column = column


class NotGraphic(SequenceError):
    pass


class CapExceeded(UnigraphsError, ValueError):
    """Brute-force routine asked to go past its hard vertex cap."""


class RouteDisagreement(UnigraphsError, RuntimeError):
    """Two independent recognition routes returned different answers."""

    def __init__(self, field: str, details: dict):
        super().__init__(f"routes disagree on {field}: {details}")
        self.field = field
        self.details = details
