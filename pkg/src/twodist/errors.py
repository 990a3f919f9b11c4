"""Exception types shared across the package."""


class TwodistError(Exception):
    """Base class for all errors raised by this package."""


class SelfLoopError(TwodistError, ValueError):
    """An edge joins a vertex to itself."""


class VertexOutOfRangeError(TwodistError, ValueError):
    """An edge endpoint is not a valid vertex label."""


class DuplicateEdgeError(TwodistError, ValueError):
    """The same unordered vertex pair was supplied twice."""


class TooSmallError(TwodistError, ValueError):
    """The graph has fewer vertices than the operation supports."""


class TooLargeError(TwodistError, ValueError):
    """The graph exceeds the operation's vertex cap."""


class InvalidParamsError(TwodistError, ValueError):
    """Family parameters violate their documented range."""


class NoClaimError(TwodistError, LookupError):
    """The family carries no published diameter claims."""


class GiveUpError(TwodistError, RuntimeError):
    """Rejection sampling exhausted its retry budget."""


class Graph6Error(TwodistError, ValueError):
    """Base class for graph6 parsing failures."""


class EmptyInputError(Graph6Error):
    """The graph6 text was empty."""


class UnsupportedLengthError(Graph6Error):
    """The graph6 text encodes a vertex count outside 1..62."""


class MalformedCharError(Graph6Error):
    """A graph6 character is invalid; ``offset`` locates it in the text."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset
