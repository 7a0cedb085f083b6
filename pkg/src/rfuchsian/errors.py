class InvariantViolation(AssertionError):
    """An internal consistency check failed; this signals a bug, not bad input."""
