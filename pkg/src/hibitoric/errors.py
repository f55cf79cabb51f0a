"""Exception hierarchy shared by every module."""


class HibiError(Exception):
    """Base class for all errors raised by this package."""


class CycleDetected(HibiError):
    pass


class RedundantCover(HibiError):
    pass


class Unbounded(HibiError):
    pass


class NotComparable(HibiError):
    pass


class SizeLimitExceeded(HibiError):
    pass


class NotALattice(HibiError):
    pass


class NotDistributive(HibiError):
    pass


class NotACover(HibiError):
    pass


class NotEmbedded(HibiError):
    pass


class NotGenerators(HibiError):
    pass


class GradingMismatch(HibiError):
    pass


class BadParameters(HibiError):
    pass


class IndexOutOfRange(HibiError):
    pass


class BlocksOverlapOrTouch(HibiError):
    pass


class UnsupportedFace(HibiError):
    """The requested multiplicity lies outside the proven families.

    ``h_components`` carries the face's H-poset components so the caller can
    still inspect the face.
    """

    def __init__(self, message, h_components=None):
        super().__init__(message)
        self.h_components = h_components
