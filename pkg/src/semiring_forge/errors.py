"""Exception types shared across the package."""


class InvalidStructure(ValueError):
    """An operation table violates the axioms it claims to satisfy."""


class ParseError(ValueError):
    """A serialized table file is malformed."""


class CapExceeded(RuntimeError):
    """A closure grew past the configured size cap."""


class HypothesesNotMet(ValueError):
    """A theorem-backed operation was called outside its hypotheses."""


class RefutationError(RuntimeError):
    """A witness guaranteed by a verified hypothesis set is missing.

    This never fires on correct input and a correct implementation; when it
    does, `payload` carries a serializable counterexample for inspection.
    """

    def __init__(self, message, payload=None):
        super().__init__(message)
        self.payload = payload or {}
