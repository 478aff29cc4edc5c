"""Exception types raised across the package."""


class ShuffleAlgError(ValueError):
    """Base class for all domain errors."""


class InvalidPermutation(ShuffleAlgError):
    pass


class OutOfRange(ShuffleAlgError):
    pass


class SizeMismatch(ShuffleAlgError):
    pass


class NotDisjoint(ShuffleAlgError):
    pass


class InvalidBlocks(ShuffleAlgError):
    pass


class NotContained(ShuffleAlgError):
    pass


class IncompatibleAtRange(ShuffleAlgError):
    """Class-aggregated structure constants depend on the chosen representatives."""


class Unsupported(ShuffleAlgError):
    pass


class UnknownStatistic(ShuffleAlgError):
    pass
