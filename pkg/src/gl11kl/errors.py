"""Exception hierarchy shared by all engines."""


class Gl11Error(Exception):
    """Base class for mathematical domain errors raised by this package."""


class NotDeterminedError(Gl11Error):
    """The requested quantity is outside the range of the proved results.

    Raised for label operations whose output is simply not defined by the
    classification carried by this package (e.g. fusion against a reducible
    Verma module, spectral flow out of the supported source labels).  The CLI
    maps this to exit code 1 so scripts can tell scope limits from usage
    mistakes.
    """


class OracleError(Gl11Error):
    """Matrix-level decomposition failed.

    The statistics of the input module are infeasible or ambiguous for the
    candidate families handled by the brute-force oracle; this signals an
    input outside the finite-dimensional category the oracle models.
    """
