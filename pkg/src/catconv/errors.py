"""Exception types shared by the whole package."""


class CatconvError(Exception):
    """Base class for every error raised by catconv."""


class PathSyntaxError(CatconvError, ValueError):
    """A UD-string contained a character other than 'U' or 'D'."""

    def __init__(self, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(
            f"invalid step {text[position]!r} at position {position} in {text!r}"
        )


class DomainError(CatconvError, ValueError):
    """An input lies outside the domain of a map or check.

    ``path`` carries the offending object in canonical text form.
    """

    def __init__(self, message: str, path: str | None = None):
        self.path = path
        if path is not None:
            message = f"{message}: {path!r}"
        super().__init__(message)


class CapExceeded(CatconvError):
    """A requested enumeration or computation is larger than the configured cap."""

    def __init__(self, what: str, requested: int, cap: int):
        self.what = what
        self.requested = requested
        self.cap = cap
        super().__init__(f"{what} {requested} exceeds cap {cap}")
