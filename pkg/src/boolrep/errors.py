"""Exception hierarchy.

Errors fall in three families that the CLI maps onto exit codes: malformed
input (exit 1), a violated algebraic invariant carrying a witness (exit 2),
and an enumeration bound being hit (exit 3).
"""


class BoolRepError(Exception):
    """Base class for every error raised by this package."""


class InputError(BoolRepError, ValueError):
    """Malformed input: wrong shape, bad indices, unknown names."""


class OutOfRange(InputError):
    pass


class EmptyGeneratorList(InputError):
    pass


class WidthMismatch(InputError):
    pass


class NotAnElement(InputError):
    pass


class UnknownFixture(InputError, KeyError):
    pass


class BadD(InputError):
    """The subset D violates min M <= D <= M minus zero."""


class NotRegular(BoolRepError):
    pass


class NotFree(BoolRepError):
    pass


class Degenerate(BoolRepError):
    """The module is annihilated by the whole semigroup (M.S = 0)."""


class CapExceeded(BoolRepError):
    def __init__(self, what, size, cap):
        super().__init__(f"{what}: size {size} exceeds cap {cap}")
        self.what = what
        self.size = size
        self.cap = cap


class InvariantViolation(BoolRepError):
    """An algebraic law failed; ``witness`` holds the offending data."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NonAssociative(InvariantViolation):
    def __init__(self, s, t, u):
        super().__init__(f"(s*t)*u != s*(t*u) for s={s}, t={t}, u={u}", (s, t, u))


class IncompatiblePartition(InvariantViolation):
    pass


class WellDefinednessViolation(InvariantViolation):
    pass


class IsomorphismFailure(InvariantViolation):
    pass
