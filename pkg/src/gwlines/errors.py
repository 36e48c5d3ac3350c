"""Exception hierarchy.

Every failure mode named by the library has its own class so callers (and the
CLI exit-code mapping) can dispatch on type.
"""


class GWLinesError(Exception):
    code = "error"


class InvalidField(GWLinesError):
    code = "invalid-field"


class ZeroArgument(GWLinesError):
    code = "zero-argument"


class NoEmbedding(GWLinesError):
    code = "no-embedding"


class NoExtension(GWLinesError):
    code = "no-extension"


class DegenerateForm(GWLinesError):
    code = "degenerate-form"


class InvalidForm(GWLinesError):
    code = "invalid-form"


class FieldMismatch(GWLinesError):
    code = "field-mismatch"


class UnsupportedField(GWLinesError):
    code = "unsupported-field"


class UnsupportedCharacteristic(GWLinesError):
    code = "unsupported-characteristic"


class InvalidSurface(GWLinesError):
    code = "invalid-surface"


class DegenerateSubspace(GWLinesError):
    code = "degenerate-subspace"


class NotOnSurface(GWLinesError):
    code = "not-on-surface"


class SingularAlongLine(GWLinesError):
    code = "singular-along-line"


class SingularSurface(GWLinesError):
    code = "singular-surface"


class IncompleteEnumeration(GWLinesError):
    """Carries the records found so far in ``found``."""

    code = "incomplete-enumeration"

    def __init__(self, msg, found=None, complete_degree=None):
        super().__init__(msg)
        self.found = found
        self.complete_degree = complete_degree


class BudgetExceeded(GWLinesError):
    """``complete_degree``: every line of degree <= this was searched for."""

    code = "budget-exceeded"

    def __init__(self, msg, found=None, complete_degree=None):
        super().__init__(msg)
        self.found = found
        self.complete_degree = complete_degree


class NotIsolated(GWLinesError):
    code = "not-isolated"


class ZeroNotUnique(GWLinesError):
    code = "zero-not-unique"


class InconsistentSystem(GWLinesError):
    code = "inconsistent-system"


class NotSimpleZero(GWLinesError):
    code = "not-simple-zero"


class InternalInconsistency(GWLinesError):
    code = "internal-inconsistency"
