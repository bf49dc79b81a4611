"""Exception types shared across the package."""


class TypeCBrauerError(Exception):
    """Base class for every error raised by this package."""


class RankMismatchError(TypeCBrauerError):
    """Operands live on different numbers of strands."""


class SizeMismatchError(TypeCBrauerError):
    """Signed permutations of different sizes were combined."""


class IndexRangeError(TypeCBrauerError):
    """A generator or layer index is outside its valid range."""


class AsymmetricDiagramError(TypeCBrauerError):
    """A mirror-symmetric diagram was required but not supplied."""


class ResourceLimitError(TypeCBrauerError):
    """An enumeration exceeds the configured size bound."""


class MalformedTripleError(TypeCBrauerError):
    """An inflation triple is internally inconsistent."""


class ShapeMismatchError(TypeCBrauerError):
    """Dangles of different rank or arc count were paired."""


class LabelMismatchError(TypeCBrauerError):
    """A cell label does not match its layer."""


class DeltaNotInvertibleError(TypeCBrauerError):
    """A negative power of the loop parameter was evaluated at zero."""


class BadDenominatorError(TypeCBrauerError):
    """A rational coefficient's denominator vanishes in the target field."""


class InvalidFieldError(TypeCBrauerError):
    """A field specification violates its invariants."""


class CharacteristicTwoError(TypeCBrauerError):
    """The wreath module construction needs 2 to be invertible."""
