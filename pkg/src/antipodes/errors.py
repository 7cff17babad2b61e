"""Exception types shared across the package.

The CLI maps these onto its exit-code taxonomy, so new failure modes
should reuse one of the classes below rather than raising bare
ValueError from deep inside a pipeline.
"""


class ContractError(ValueError):
    """An input violates a documented precondition or verifier check."""


class SizeCapError(ContractError):
    """An input exceeds the configured order cap for an exact algorithm."""


class TheoremViolationError(RuntimeError):
    """A conclusion that is mathematically guaranteed failed to materialise.

    This is never a legitimate run outcome: it means either the
    implementation or the input certificate chain is broken, so it is
    raised loudly instead of being folded into a result object.
    Carries whatever context the raising pipeline had at hand.
    """

    def __init__(self, message, context=None):
        super().__init__(message)
        self.context = context or {}


class SamplingExhaustedError(RuntimeError):
    """Rejection sampling hit its retry cap without an accepted sample."""
