"""Exception hierarchy.

Anything raised on malformed user input derives from InputError so the CLI
can map it to exit code 2; computational failures (singular linear part,
order underflow, ...) derive from ComputationError and map to exit code 1.
"""


class C21Error(Exception):
    pass


class InputError(C21Error):
    """Malformed input: bad chart, unknown parameter, unparsable scalar."""


class ComputationError(C21Error):
    pass


class DivisionByZeroError(ComputationError):
    pass


class ChartMismatchError(InputError):
    pass


class OrderError(ComputationError):
    """Requested information beyond the guaranteed-exact truncation order."""


class NoTableDataError(InputError):
    """Requested order exceeds the stored model table."""


class SingularGermError(ComputationError):
    """Map germ with non-invertible weighted-linear part."""


class NotNormalFormError(ComputationError):
    """Operation requires a graph in normal form."""


class RootExtractionError(ComputationError):
    """No exact root in the coefficient field."""
