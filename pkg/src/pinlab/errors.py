"""Exception types raised across the package."""


class PinlabError(Exception):
    pass


class NotAQuasiOrderError(PinlabError, ValueError):
    """An operation defined only for quasi orders received something else."""


class NotAQuasiLatticeError(PinlabError, ValueError):
    pass


class CarrierMismatchError(PinlabError, ValueError):
    pass


class RangeError(PinlabError, IndexError):
    """A pair index or function value lies outside the carrier."""


class GuardExceededError(PinlabError, ValueError):
    """An enumeration would exceed its configured size guard."""


class ClosureCapError(GuardExceededError):
    pass


class UnknownIdError(PinlabError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "unknown id"


class HypothesisViolation(PinlabError, ValueError):
    """A theorem-level precondition does not hold for the given input."""

    def __init__(self, check, detail=None):
        super().__init__(f"{check}: {detail}" if detail is not None else check)
        self.check = check
        self.detail = detail


class PreconditionError(PinlabError, ValueError):
    pass


class NotInjectiveError(PinlabError, ValueError):
    pass


class ParseError(PinlabError, ValueError):
    def __init__(self, message, line=None, column=None):
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
        self.line = line
        self.column = column
