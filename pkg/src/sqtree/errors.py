"""Exception types raised across the package."""


class SqtreeError(Exception):
    """Base class for all errors raised by sqtree."""


class CapExceededError(SqtreeError, ValueError):
    """An input is larger than an operation's configured size cap."""

    def __init__(self, what, size, cap):
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(f"{what}: size {size} exceeds cap {cap}")


class ZeroIdealError(SqtreeError, ValueError):
    """The graph has no edges, so its edge ideal is the zero ideal."""


class NotATreeError(SqtreeError, ValueError):
    pass


class NotChordalError(SqtreeError, ValueError):
    pass


class GraphFormatError(SqtreeError, ValueError):
    """Malformed edge-list input. ``lineno`` is 1-based (0 if unknown)."""

    def __init__(self, message, lineno=0):
        self.lineno = lineno
        prefix = f"line {lineno}: " if lineno else ""
        super().__init__(prefix + message)
