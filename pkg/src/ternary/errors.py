"""Exception hierarchy shared by all modules."""


class TernaryError(Exception):
    """Base class for every error raised by this package."""


class InputError(TernaryError):
    """Bad user input: malformed tables, files or parameters."""


class SizeMismatch(InputError):
    pass


class ClosureViolation(InputError):
    def __init__(self, position, value, order):
        self.position = tuple(position)
        self.value = value
        super().__init__(f"entry {self.position} = {value} is outside [0, {order})")


class UnknownExample(InputError):
    pass


class OrderTooLarge(InputError):
    pass


class NotATernaryGroup(TernaryError):
    pass


# raised by verify_dornte when the supplied skew map does not belong to the cube
NotAGroup = NotATernaryGroup


class InternalVerificationFailure(TernaryError):
    """A construction that is guaranteed by a theorem failed its self-check."""


class UnverifiedInput(TernaryError):
    pass


class NonCommutingPair(TernaryError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"pi(x) and rho(y) do not commute at (x, y) = {witness}")


class NotLabelable(TernaryError):
    pass


class ToleranceFailure(TernaryError):
    pass
