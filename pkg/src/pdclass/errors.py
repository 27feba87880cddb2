"""Exception hierarchy shared by all modules.

Two classes of failure are kept apart deliberately: usage errors (bad input,
unsupported sizes) and theorem violations (an internal cross-check caught two
routes disagreeing).  The command-line driver maps the former to exit code 1
and the latter to exit code 2.
"""
from __future__ import annotations


class PdclassError(Exception):
    """Base class; ``code`` is a stable machine-readable tag."""

    code = "ERROR"


class UsageError(PdclassError):
    code = "USAGE"


class InvalidTypeRank(UsageError):
    code = "INVALID_TYPE_RANK"


class LabelOutOfRange(UsageError):
    code = "LABEL_OUT_OF_RANGE"


class CompactForm(UsageError):
    code = "COMPACT_FORM"


class PreconditionClassical(UsageError):
    code = "PRECONDITION_CLASSICAL"


class NotHermitian(UsageError):
    code = "NOT_HERMITIAN"


class TooLarge(UsageError):
    code = "TOO_LARGE"


class TheoremViolation(PdclassError):
    """Two independent computations that must agree did not.  Never caught
    and repaired internally; always surfaced to the caller."""

    code = "THEOREM_VIOLATION"


class InternalInconsistency(TheoremViolation):
    code = "INTERNAL_INCONSISTENCY"


class ValidationFailed(TheoremViolation):
    code = "VALIDATION_FAILED"


class HermitianAnomaly(TheoremViolation):
    code = "HERMITIAN_ANOMALY"
