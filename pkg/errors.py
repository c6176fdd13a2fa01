"""Exceptions raised by the digital homology engine."""


class DigitalTopologyError(Exception):
    pass


class InvalidInputError(DigitalTopologyError, ValueError):
    pass


class ShapeMismatchError(DigitalTopologyError, ValueError):
    pass


class ContinuityError(DigitalTopologyError, ValueError):
    pass


class DimensionLimitError(DigitalTopologyError, ValueError):
    pass


class SearchBoundExceeded(DigitalTopologyError, RuntimeError):
    """The homotopy search visited more states than its cap allows.

    This is not a "not homotopic" answer; the question is left open.
    """

    def __init__(self, cap, visited):
        super().__init__(
            f"homotopy search exceeded the state cap ({visited} > {cap})")
        self.cap = cap
        self.visited = visited


class DocumentError(InvalidInputError):
    def __init__(self, message, field=None, line=None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field '{field}'")
        prefix = f"{', '.join(where)}: " if where else ''
        super().__init__(prefix + message)
        self.field = field
        self.line = line
