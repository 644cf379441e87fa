"""Domain errors raised by the public API.

Every error the package raises deliberately derives from SeqlabError, so
callers (and the HTTP service) can map failures to a stable type name.
"""


class SeqlabError(Exception):
    """Base class for all deliberate failures."""


class ZeroVector(SeqlabError):
    """Signal has no energy and cannot be normalized."""


class NotPowerOfTwo(SeqlabError):
    """Input length must be 2**n for some n >= 1."""


class InvalidSize(SeqlabError):
    """A register size parameter is out of its legal range."""


class QubitOutOfRange(SeqlabError):
    """A gate addresses a qubit index outside the register."""


class DuplicateQubit(SeqlabError):
    """A gate addresses the same qubit twice."""


class TooLarge(SeqlabError):
    """Request exceeds the supported dense-matrix size."""


class OpaqueNotMaterializable(SeqlabError):
    """Opaque circuit nodes have no dense matrix representation."""


class IndexOutOfRange(SeqlabError):
    """A basis or sequency index is outside [0, 2**n)."""


class BandOutOfRange(SeqlabError):
    """A sequency band does not fit inside [0, 2**n)."""


class ConstantOutOfRange(SeqlabError):
    """Comparator constant must lie in [0, 2**n]."""


class SizeMismatch(SeqlabError):
    """Two objects that must agree on register size do not."""


class LayoutMismatch(SeqlabError):
    """A circuit does not act on the register layout it is combined with."""


class ParseError(SeqlabError):
    """Input text could not be parsed as a finite real signal."""
