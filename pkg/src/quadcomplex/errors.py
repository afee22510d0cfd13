"""Exception taxonomy shared across modules.

MathDomainError subclasses signal mathematically degenerate inputs and
map to CLI exit code 2; InputError covers I/O and validation failures
and maps to exit code 1.
"""


class QuadComplexError(Exception):
    code = "error"


class InputError(QuadComplexError):
    code = "invalid-input"


class MathDomainError(QuadComplexError):
    code = "math-domain"


class DegeneratePencilError(MathDomainError):
    code = "degenerate-pencil"


class IrrationalEigenvaluesError(MathDomainError):
    code = "irrational-eigenvalues"


class IrrationalRootsError(MathDomainError):
    code = "irrational-roots"


class FrameError(MathDomainError):
    """Quadric not reducible to the requested coordinate frame over Q(i)."""
    code = "frame-error"


class SurfaceDegenerationError(MathDomainError):
    code = "surface-degenerates"
