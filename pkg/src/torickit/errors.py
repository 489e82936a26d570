"""Exception types raised by the engine."""


class ToricError(Exception):
    """Base class for all engine errors."""


class NotPointed(ToricError):
    pass


class RayOutsideSupport(ToricError):
    pass


class NotQGorenstein(ToricError):
    def __init__(self, cone_index: int, message: str = ""):
        self.cone_index = cone_index
        super().__init__(message or f"max cone {cone_index} has no level-one functional")


class RaysDoNotSpan(ToricError):
    pass


class NotComplete(ToricError):
    pass


class NotSimplicial(ToricError):
    pass


class NotFlipping(ToricError):
    pass


class IllFormedWeights(ToricError):
    pass


class ScenarioError(ToricError):
    """Problems with a scenario file rather than with the mathematics."""


class ParseError(ScenarioError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where)


class UnknownOperation(ScenarioError):
    pass
