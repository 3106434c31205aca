"""Exception hierarchy shared by all kclosure modules."""


class KClosureError(Exception):
    """Base class for every error raised by this package."""


class DegreeMismatch(KClosureError, ValueError):
    pass


class BlockSystemError(KClosureError, ValueError):
    """Blocks handed to induced_action are not permuted among themselves."""


class BudgetExceeded(KClosureError):
    """A computation would exceed a configured enumeration budget."""


class NotNilpotent(KClosureError):
    pass


class DecompositionFailed(KClosureError):
    pass


class KLessThanTwo(KClosureError, ValueError):
    pass


class InternalContradiction(KClosureError):
    """A result contradicts a proven identity; always an implementation bug."""


class CycleSyntaxError(KClosureError, ValueError):
    pass
