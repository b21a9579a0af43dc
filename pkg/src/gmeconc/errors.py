"""Exception types raised across the package."""


class GMEError(ValueError):
    """Base class for all input and contract violations."""


class DimensionError(GMEError):
    pass


class InvalidLabelError(GMEError):
    pass


class InvalidSubsetError(GMEError):
    pass


class NormalizationError(GMEError):
    pass


class SymmetryError(GMEError):
    pass


class UnitarityError(GMEError):
    pass


class ArityError(GMEError):
    pass


class UnsupportedWitnessError(GMEError):
    """Witness labels coincide on some party."""


class DomainError(GMEError):
    pass


class UnsupportedError(GMEError):
    pass
