"""Exception hierarchy shared by every tilekit module."""


class TilekitError(Exception):
    """Base class for all errors raised by tilekit."""


class RegionError(TilekitError, ValueError):
    """A cell set does not describe a valid region."""


class ParseError(RegionError):
    """Malformed region, tiling or partition text."""


class NotSimplyConnectedError(TilekitError):
    """The operation needs a region without holes."""


class InvalidTilingError(TilekitError, ValueError):
    pass


class InvalidHeightError(TilekitError, ValueError):
    pass


class FlipError(TilekitError, ValueError):
    """A flip was requested where none is available."""


class InvalidCutError(TilekitError, ValueError):
    pass


class InvalidPartitionError(TilekitError, ValueError):
    pass


class PrecisionError(TilekitError, ArithmeticError):
    """Floating point evaluation could not certify an integer result."""


class EnumerationLimitError(TilekitError):
    def __init__(self, limit: int):
        super().__init__(f"more than {limit} tilings; raise --limit to enumerate them")
        self.limit = limit
