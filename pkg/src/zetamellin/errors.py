"""Exception hierarchy shared by every module."""


class ZMError(Exception):
    """Base class.  The CLI exits with 2 for domain and usage errors, 1 for convergence failures."""


class DomainError(ZMError, ValueError):
    pass


class PoleError(DomainError):
    def __init__(self, location, what="function"):
        self.location = location
        super().__init__(f"{what} has a pole at {location!r}")


class SingularityError(DomainError):
    pass


class BranchError(DomainError):
    pass


class RegimeError(DomainError):
    pass


class CancellationError(DomainError):
    pass


class ConvergenceError(ZMError, ArithmeticError):
    pass


class BudgetError(ConvergenceError):
    pass


class UsageError(ZMError):
    pass
