"""Exception types shared across the package."""


class CutseqError(Exception):
    pass


class DomainError(CutseqError, ValueError):
    """An input lies outside the domain an operation is defined on."""


class IrrationalValueError(CutseqError, ValueError):
    """A rational value was requested from an infinite (periodic) expansion."""


class PreconditionError(CutseqError, ValueError):
    pass


class RejectedError(CutseqError):
    """A word failed the cutting-sequence validity iteration.

    The ``verdict`` attribute holds the :class:`cutseq.words.Rejected` result,
    including the step number that fired.
    """

    def __init__(self, verdict):
        super().__init__(f"not a cutting sequence (step {verdict.step}): {verdict.reason}")
        self.verdict = verdict


class VertexHitError(CutseqError):
    """A trajectory passes through a lattice point or a table corner."""

    def __init__(self, x, y):
        super().__init__(f"trajectory hits a vertex at ({x}, {y})")
        self.x = x
        self.y = y
