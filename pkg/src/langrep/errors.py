"""Exception hierarchy shared across the package.

Caller errors (bad arguments, malformed input text) raise FormatError or
plain ValueError; resource exhaustion raises CapacityError so callers can
distinguish "no" from "gave up".
"""


class LangrepError(Exception):
    """Base class for all package-specific errors."""


class FormatError(LangrepError):
    """Malformed textual or binary input (words, graphs, language specs, codec).

    Carries an optional byte or character offset in ``offset``.
    """

    def __init__(self, message, offset=None):
        super().__init__(message if offset is None else f"{message} (at offset {offset})")
        self.offset = offset


class NotSymmetricError(LangrepError):
    """A language failed the 0-1-symmetry requirement.

    ``witness`` is a binary word in exactly one of L, L-tilde.
    """

    def __init__(self, witness=None, message=None):
        if message is None:
            if witness is None:
                message = "not-symmetric"
            else:
                message = f"not-symmetric: witness {witness!r}"
        super().__init__(message)
        self.witness = witness


class CapacityError(LangrepError):
    """A configured budget (search nodes, enumeration size) was exhausted."""


class BuildError(LangrepError):
    """A construction precondition failed or its mandatory self-check did not pass."""
