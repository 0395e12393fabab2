"""Exception types shared across the package."""


class PerfcodeError(Exception):
    """Base class for all errors raised by this package."""


class InvalidSpec(PerfcodeError):
    """A group specification has malformed or out-of-range parameters."""


class OrderBoundExceeded(PerfcodeError):
    """A construction or enumeration would exceed the configured order bound."""


class BadTableFile(PerfcodeError):
    """A multiplication table fails a group axiom; message carries positions."""


class NotAbelian(PerfcodeError):
    """Operation requires an abelian group."""


class NotNormal(PerfcodeError):
    """Operation requires a normal subgroup."""


class ContainsIdentity(PerfcodeError):
    """A connection set may not contain the identity."""


class NotInverseClosed(PerfcodeError):
    """A set that must equal its own set of inverses does not."""


class MissingIdentity(PerfcodeError):
    """A transversal used as a connection-set source must contain the identity."""


class NotInvolution(PerfcodeError):
    """The given element does not have order 2."""


class IsSquare(PerfcodeError):
    """The given involution is a square, so no inverse-closed transversal exists."""


class HasOrder4Element(PerfcodeError):
    """The constructive transversal algorithm requires no elements of order 4."""


class InvalidN(PerfcodeError):
    """Generalized quaternion parameter out of range (requires n >= 2)."""


class SearchBudgetExceeded(PerfcodeError):
    """The backtracking search exceeded its node budget."""


class SpecSyntaxError(PerfcodeError):
    """Syntax error in the group-spec DSL, with byte offset and expected tokens."""

    def __init__(self, offset: int, expected: tuple):
        self.offset = offset
        self.expected = tuple(expected)
        super().__init__(
            f"syntax error at offset {offset}: expected {' | '.join(self.expected)}"
        )


class SpecSemanticError(PerfcodeError):
    """Well-formed but meaningless group spec (e.g. Q(10))."""

    def __init__(self, offset: int, message: str):
        self.offset = offset
        super().__init__(f"at offset {offset}: {message}")
