"""Error taxonomy shared by all modules.

Exit-code mapping for the CLI: InvariantViolation -> 1, everything else
derived from InputError -> 2.
"""


class InputError(Exception):
    """Malformed or inconsistent user input (bad JSON, non-subgroup, ...)."""


class CapacityError(InputError):
    """A configured enumeration bound was exceeded."""


class HypothesisViolation(InputError):
    """The hypotheses of a lemma-level operation fail for the given data."""


class InvariantViolation(Exception):
    """A mathematical identity that must hold was violated.

    This always indicates a bug (or corrupted data), never a user mistake.
    """
