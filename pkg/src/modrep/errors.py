"""Exception types shared across the package."""


class InputError(ValueError):
    """An argument failed validation (bad weight, non-prime modulus, ...)."""


class VerificationError(RuntimeError):
    """An exact cross-check that was expected to hold came out false."""
