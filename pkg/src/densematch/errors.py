"""Exception types shared across the package."""


class SamplingFailure(RuntimeError):
    """Rejection sampling gave up before hitting the acceptance event.

    Carries the attempt count so callers can tell an unlucky run from a
    threshold that is simply too aggressive for the graph at hand.
    """

    def __init__(self, attempts: int, message: str | None = None):
        self.attempts = attempts
        super().__init__(message or f"no acceptable partition in {attempts} attempts")


class ParameterError(ValueError):
    """A derived-parameter hypothesis failed; the message names the inequality."""


class SizeLimitError(ValueError):
    """Input exceeds the size limit of an exact oracle."""


class InfeasibleError(ValueError):
    """The requested combinatorial object does not exist in this graph."""
