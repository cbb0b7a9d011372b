"""Exception types shared across the package."""


class MosaicError(Exception):
    """Base class for domain errors raised by knotmosaic."""


class ParseError(MosaicError, ValueError):
    pass


class OutOfRange(MosaicError, IndexError):
    pass


class SizeMismatch(MosaicError, ValueError):
    pass


class NoConnectionPoint(MosaicError, ValueError):
    pass


class NotAKnotMosaic(MosaicError, ValueError):
    pass


class NotHermitian(MosaicError, ValueError):
    pass


class NotAnOrbit(MosaicError, ValueError):
    pass


class CapExceeded(MosaicError, RuntimeError):
    """A computation would exceed a configured size cap."""

    def __init__(self, what, requested, cap):
        super().__init__(f"{what}: requested {requested} exceeds cap {cap}")
        self.what = what
        self.requested = requested
        self.cap = cap
