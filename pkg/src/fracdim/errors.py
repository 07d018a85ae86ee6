"""Exception hierarchy.

Every error carries a stable ``code`` string used by the command line tool
when it reports failures as JSON.
"""


class FracDimError(Exception):
    code = "error"
    exit_code = 1


class InvalidInput(FracDimError, ValueError):
    code = "invalid_input"
    exit_code = 3


class ParseError(InvalidInput):
    code = "parse_error"
    exit_code = 3


class InvalidParameters(FracDimError, ValueError):
    code = "invalid_parameters"
    exit_code = 2


class LagOutOfRange(InvalidParameters):
    code = "lag_out_of_range"


class NumericalError(FracDimError, ArithmeticError):
    code = "numeric"
    exit_code = 4


class DegenerateRegression(NumericalError):
    code = "degenerate_regression"


class DegenerateSeries(NumericalError):
    code = "degenerate_series"


class DegenerateGrid(NumericalError):
    code = "degenerate_grid"


class NoPairs(NumericalError):
    code = "no_pairs"


class InsufficientScales(NumericalError):
    code = "insufficient_scales"


class SeriesTooShort(NumericalError):
    code = "series_too_short"


class AllTransectsDegenerate(DegenerateGrid):
    code = "all_transects_degenerate"


class EmbeddingFailure(NumericalError):
    code = "embedding_failure"


class EstimateOutOfRange(NumericalError):
    code = "estimate_out_of_range"


class WindowTooLarge(InvalidParameters):
    code = "window_too_large"


class IoError(FracDimError, OSError):
    code = "io_error"
    exit_code = 3
