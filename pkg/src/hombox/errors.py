"""Exception types shared across the library."""


class HomboxError(Exception):
    """Base class for all errors raised by hombox."""


# -- kernel ------------------------------------------------------------

class AxisMismatch(HomboxError):
    """Contracted axes have different sizes."""


class BadPermutation(HomboxError):
    """Axis permutation is not a permutation of range(ndim)."""


class Singular(HomboxError):
    """A matrix that must be invertible is singular."""


class BadScalar(HomboxError):
    """A scalar literal cannot be parsed in the requested field."""


# -- structures and law checking ---------------------------------------

class DimMismatch(HomboxError):
    """Constituent tensors disagree on the dimension of a space."""


class SideMismatch(HomboxError):
    """An action/coaction side contradicts the requested law set."""


class UnboundVariable(HomboxError):
    """A term references a variable with no binding."""


class MalformedIndexWord(HomboxError):
    """A subscript word is not a valid coproduct/coaction index."""


# -- constructions ------------------------------------------------------

class NotAutomorphism(HomboxError):
    """The supplied map is not a Hopf algebra automorphism."""

    def __init__(self, law, message=""):
        self.law = law
        super().__init__(message or f"automorphism check failed: {law}")


class LawViolation(HomboxError):
    """A precondition suite failed; carries the offending report."""

    def __init__(self, report, message=""):
        self.report = report
        failed = [v.law_id for v in report.verdicts if not v.passed]
        super().__init__(message or f"precondition failed: {', '.join(failed)}")


class MissingStructure(HomboxError):
    """A condition set was invoked without a required ingredient."""


# -- braiding ------------------------------------------------------------

class NotInvertible(HomboxError):
    """A bilinear form has no convolution inverse."""


class ConventionMismatch(HomboxError):
    """A stated convolution inverse fails every candidate unit convention."""


# -- io / cli ------------------------------------------------------------

class ParseError(HomboxError):
    """An algebra file is malformed."""


class DimensionError(HomboxError):
    """An algebra file is dimensionally inconsistent."""


class UnknownBuiltin(HomboxError):
    """No builtin with the requested name exists."""


class BadParam(HomboxError):
    """A builtin parameter is out of range."""


class BuiltinValidationError(HomboxError):
    """A builtin failed its own law suite at load time."""

    def __init__(self, report):
        self.report = report
        super().__init__(f"builtin failed validation:\n{report.format()}")
