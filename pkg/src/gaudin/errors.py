"""Shared exception types."""


class BudgetExceeded(Exception):
    """A desk-scale size cap (rank, dimension, depth) was exceeded."""


class PoleAtZero(ArithmeticError):
    """Plain evaluation at 0 requested for a rational function with a pole there."""


class PoleAtParameter(ArithmeticError):
    """A parameter value hits a pole of the defining formulas (e.g. 1 - eps*z_i = 0)."""


class IndeterminateValue(ArithmeticError):
    """A projective-line arithmetic operation of the form 0*inf or inf - inf."""


class CoincidentPoints(ValueError):
    """Marked points must be pairwise distinct."""


class ZeroPoint(ValueError):
    """Trigonometric marked points must be nonzero."""


class NonRegularChi(ValueError):
    """chi must be regular (no positive root vanishes on it)."""


class PartitionMismatch(ValueError):
    """Set partition does not match the number of tensor factors."""


class FactorMismatch(ValueError):
    """Element and representation disagree on the number of tensor factors."""


class NotDominant(ValueError):
    """Highest weight must be dominant integral."""


class DepthTooSmall(ValueError):
    """Verma truncation depth does not cover the requested weight space."""


class ChartViolation(ValueError):
    """Chart values violate the regularity constraints of the forest chart."""


class ChartNotFound(ValueError):
    """No forest chart containing the given point was found."""


class ProjectionDegenerate(ValueError):
    """A coordinate projection of a commutative subspace failed to be 2-dimensional."""


class UnstableConfiguration(ValueError):
    """Boundary assembly does not describe a stable curve configuration."""


class RankDrop(ArithmeticError):
    """A Grassmannian limit lost rank; signals corrupted input."""


class IllConditioned(ArithmeticError):
    """Joint diagonalization hit an ill-conditioned random combination."""


class SpectrumCollision(ArithmeticError):
    """A continuation path passed through a non-simple spectrum locus."""


class FormNotPositive(ValueError):
    """Supplied Hermitian form is not positive definite."""
