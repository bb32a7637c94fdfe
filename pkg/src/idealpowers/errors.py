"""Exception types shared across the package."""


class IdealPowersError(Exception):
    """Base class for all library errors."""


class AmbientMismatchError(IdealPowersError):
    """Two values live in polynomial rings with different variable counts."""


class InputError(IdealPowersError):
    """A precondition on user-supplied data is violated."""


class NotSquarefreeError(InputError):
    """Operation requires a squarefree (radical) monomial ideal."""


class CapExceededError(IdealPowersError):
    """An enumeration grew past its configured cap.

    Raised instead of silently truncating; carries the cap and the size
    that would have been needed (when known).
    """

    def __init__(self, what: str, cap: int, needed: int | None = None):
        self.what = what
        self.cap = cap
        self.needed = needed
        detail = f"needs {needed}" if needed is not None else "size unknown"
        super().__init__(f"{what} exceeds cap {cap} ({detail})")


class HomologyCrossCheckError(IdealPowersError):
    """Exact and modular homology ranks disagree; the run must abort."""


class CacheAuditError(IdealPowersError):
    """A cache hit failed its spot audit against recomputation."""


class ParseError(IdealPowersError):
    """Syntax or lexical error in an ideal expression."""

    def __init__(self, message: str, line: int, column: int, expected: tuple[str, ...] = ()):
        self.message = message
        self.line = line
        self.column = column
        self.expected = expected
        suffix = f" (expected one of: {', '.join(expected)})" if expected else ""
        super().__init__(f"{line}:{column}: {message}{suffix}")
