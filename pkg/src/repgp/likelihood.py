"""Labeling-noise step likelihood and its tilted-distribution quantities.

The per-point likelihood is p(y|f) = (1-eps)*Theta(f*y) + eps*Theta(-f*y)
with Theta(a) = 1 for a >= 0.  Against a Gaussian cavity N(f | h, lam) the
tilted normalizer is Zhat = eps + (1-2*eps)*Phi(z) with z = y*h/sqrt(lam);
labels are folded into z so one code path serves both classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import exp, log, sqrt

from .errors import InvalidCavity, InvalidPower, NonPositiveVariance
from .gaussian import std_normal_cdf, std_normal_log_cdf, std_normal_pdf


@dataclass(frozen=True)
class NoiseModel:
    """Labeling-error probability; labels live in {-1, +1}."""

    epsilon: float = 0.0

    def __post_init__(self):
        if not 0.0 <= self.epsilon < 0.5:
            raise ValueError(f"epsilon must be in [0, 0.5), got {self.epsilon}")

    def likelihood(self, y: float, f: float) -> float:
        """p(y|f) for a single point."""
        return 1.0 - self.epsilon if f * y >= 0 else self.epsilon


def tilted_log_partition(z: float, eps: float) -> float:
    """log(eps + (1 - 2*eps) * Phi(z)).

    For eps = 0 this is log Phi(z), computed with a stable tail expansion
    so it stays finite for any float z.
    """
    if eps == 0.0:
        return std_normal_log_cdf(z)
    return log(eps + (1.0 - 2.0 * eps) * std_normal_cdf(z))


def _check_cavity(cavity_var: float) -> None:
    if not cavity_var > 0:
        raise InvalidCavity(f"cavity variance must be positive, got {cavity_var}")


_LOG_SQRT_2PI = 0.5 * log(2.0 * 3.141592653589793)


def _log_phi(z: float) -> float:
    return -0.5 * z * z - _LOG_SQRT_2PI


def ep_alpha(cavity_mean: float, cavity_var: float, y: float, eps: float) -> float:
    """d log Zhat / d cavity_mean for the tilted distribution.

    Equals y * (1-2*eps) * phi(z) / (sqrt(lam) * Zhat) with
    z = y * cavity_mean / sqrt(lam).
    """
    _check_cavity(cavity_var)
    sq = sqrt(cavity_var)
    z = y * cavity_mean / sq
    if eps == 0.0:
        if z < -30.0:
            # phi(z)/Phi(z) in log space; stable arbitrarily far down
            return y * exp(_log_phi(z) - std_normal_log_cdf(z)) / sq
        return y * std_normal_pdf(z) / (sq * std_normal_cdf(z))
    d = 1.0 - 2.0 * eps
    return y * d * std_normal_pdf(z) / (sq * (eps + d * std_normal_cdf(z)))


def pep_alpha(cavity_mean: float, cavity_var: float, y: float, eps: float, u: float) -> float:
    """Powered-tilt version of ep_alpha for the likelihood raised to u.

    The powered step mixture has constants (1-eps)**u and eps**u, so
    Zhat_u = eps**u + ((1-eps)**u - eps**u) * Phi(z).
    """
    _check_cavity(cavity_var)
    if not 0.0 < u <= 1.0:
        raise InvalidPower(f"power must be in (0, 1], got {u}")
    if u == 1.0:
        return ep_alpha(cavity_mean, cavity_var, y, eps)
    sq = sqrt(cavity_var)
    z = y * cavity_mean / sq
    c1 = (1.0 - eps) ** u
    c2 = eps**u
    num = (c1 - c2) * std_normal_pdf(z)
    Zhat = c2 + (c1 - c2) * std_normal_cdf(z)
    if Zhat <= 0.0:
        # eps = 0 and z deep in the tail: fall back to the log-space ratio
        return y * exp(_log_phi(z) - std_normal_log_cdf(z)) / sq
    return y * num / (sq * Zhat)


def tilted_moments(
    cavity_mean: float, cavity_var: float, y: float, eps: float, u: float = 1.0
) -> tuple[float, float]:
    """Mean and variance of the (optionally powered) tilted distribution.

    mean = h + lam * alpha and var = lam * (1 - alpha * mean); the latter
    is the identity var = lam + lam^2 * d^2 log Zhat / dh^2 specialized to
    the two-piece step likelihood.  Raises NonPositiveVariance when the
    formula degenerates numerically (extreme tails).
    """
    _check_cavity(cavity_var)
    alpha = (
        ep_alpha(cavity_mean, cavity_var, y, eps)
        if u == 1.0
        else pep_alpha(cavity_mean, cavity_var, y, eps, u)
    )
    mean = cavity_mean + cavity_var * alpha
    var = cavity_var * (1.0 - alpha * mean)
    if not var > 0.0:
        raise NonPositiveVariance(
            f"tilted variance {var} <= 0 at cavity ({cavity_mean}, {cavity_var})"
        )
    return mean, var
