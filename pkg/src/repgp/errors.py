"""Exception types raised across the toolkit."""


class RepGpError(Exception):
    """Base class for all toolkit errors."""


class DimensionMismatch(RepGpError):
    """Operands have incompatible shapes."""


class SingularUpdate(RepGpError):
    """A rank-one posterior update hit a numerically degenerate pivot."""


class InvalidCavity(RepGpError):
    """Removing a site left a non-normalizable partial belief."""


class InvalidPower(RepGpError):
    """Power parameter outside (0, 1]."""


class NonPositiveVariance(RepGpError):
    """A projection produced a non-positive variance."""


class NonSPDKernel(RepGpError):
    """Gram matrix is not symmetric positive definite."""


class DegenerateData(RepGpError):
    """Dataset is empty or otherwise unusable."""


class LineSearchFailure(RepGpError):
    """Objective was non-finite over the whole search bracket."""


class NonFiniteObjective(RepGpError):
    """Objective value is not finite at the probed point."""


class DegenerateWeights(RepGpError):
    """Importance weights collapsed; the estimate is unusable."""


class ParseError(RepGpError):
    """A CSV row could not be parsed; carries the 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class MissingColumn(RepGpError):
    """Named column not present in the CSV header."""


class EmptyDataset(RepGpError):
    """CSV contained a header but no usable rows."""


class PlanExceedsData(RepGpError):
    """Split plan asks for more rows than the dataset has."""


class SingularKernel(RepGpError):
    """Train Gram matrix is not invertible for prediction."""


class SchemaMismatch(RepGpError):
    """Records passed to summarize have inconsistent fields."""
