"""Exception types shared across the package."""


class DegenerateInputError(ValueError):
    """Input is outside the domain where the invariant is defined (edgeless graph, zero/unit ideal, ...)."""


class VertexRangeError(ValueError):
    """A vertex index falls outside 0..n-1."""


class InvalidPrimeError(ValueError):
    """The given prime is not an associated prime of the ideal."""


class GraphParseError(ValueError):
    def __init__(self, message, *, line=None, offset=None):
        where = ""
        if line is not None:
            where = f" (line {line})"
        elif offset is not None:
            where = f" (byte {offset})"
        super().__init__(message + where)
        self.line = line
        self.offset = offset


class CrossCheckError(RuntimeError):
    """An internal consistency check or a theorem-level inequality failed.

    ``kind`` is ``"engine"`` when two computations of the same quantity
    disagree (a bug), and ``"theorem"`` when an independently computed
    invariant contradicts a proven inequality (either a bug or a finding;
    re-verify before believing it).
    """

    def __init__(self, message, kind="engine"):
        super().__init__(message)
        self.kind = kind


class ResourceCapError(ValueError):
    """A computation would exceed a hard size cap and ``force`` was not given."""
