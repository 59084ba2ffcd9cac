"""Scalar and matrix Gaussian algebra in natural parameters.

A one-dimensional Gaussian factor is stored as (precision, natural_mean)
with natural_mean = precision * mean.  Factors multiply by adding both
coordinates and divide by subtracting them, so unnormalized messages with
zero or negative precision are representable; only normalized densities
require precision > 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import erfc, exp, log, pi, sqrt

import numpy as np

from .errors import DimensionMismatch, SingularUpdate

_INV_SQRT_2PI = 1.0 / sqrt(2.0 * pi)
_SQRT2 = sqrt(2.0)

#: relative floor for the rank-one update pivot, scaled by trace(A)/N
SINGULAR_PIVOT_REL_FLOOR = 1e-12

#: cavity precisions below this are treated as invalid
POSITIVITY_FLOOR = 1e-12


def std_normal_pdf(x: float) -> float:
    """Standard normal density (2*pi)**-0.5 * exp(-x**2/2)."""
    return exp(-0.5 * x * x) * _INV_SQRT_2PI


def std_normal_cdf(x: float) -> float:
    """Standard normal CDF via the complementary error function."""
    return 0.5 * erfc(-x / _SQRT2)


def std_normal_log_cdf(x: float) -> float:
    """log(Phi(x)), stable far into the lower tail.

    erfc underflows near x = -37.5; below that use the asymptotic series
    Phi(x) ~ phi(x)/(-x) * (1 - 1/x^2 + 3/x^4 - 15/x^6).
    """
    if x > -37.0:
        return log(0.5 * erfc(-x / _SQRT2))
    x2 = x * x
    series = 1.0 - 1.0 / x2 + 3.0 / (x2 * x2) - 15.0 / (x2 * x2 * x2)
    return -0.5 * x2 - 0.5 * log(2.0 * pi) - log(-x) + log(series)


@dataclass(frozen=True)
class Gaussian1D:
    """Unnormalized 1-D Gaussian factor in natural parameters.

    precision = 0 with natural_mean = 0 is the unit (uninformative) factor.
    mean/variance accessors are defined only for precision > 0.
    """

    precision: float = 0.0
    natural_mean: float = 0.0

    @classmethod
    def from_moments(cls, mean: float, variance: float) -> "Gaussian1D":
        if not variance > 0:
            raise ValueError(f"variance must be positive, got {variance}")
        prec = 1.0 / variance
        return cls(precision=prec, natural_mean=prec * mean)

    @property
    def mean(self) -> float:
        if not self.precision > 0:
            raise ValueError("mean undefined for non-positive precision")
        return self.natural_mean / self.precision

    @property
    def variance(self) -> float:
        if not self.precision > 0:
            raise ValueError("variance undefined for non-positive precision")
        return 1.0 / self.precision

    def is_unit(self) -> bool:
        return self.precision == 0.0 and self.natural_mean == 0.0


def gaussian_multiply(a: Gaussian1D, b: Gaussian1D) -> Gaussian1D:
    """Product of factors: precisions and natural means add."""
    return Gaussian1D(a.precision + b.precision, a.natural_mean + b.natural_mean)


def gaussian_divide(a: Gaussian1D, b: Gaussian1D) -> Gaussian1D:
    """Ratio of factors: precisions and natural means subtract.

    The result may carry negative precision; callers that need a
    normalized density must validate positivity themselves.
    """
    return Gaussian1D(a.precision - b.precision, a.natural_mean - b.natural_mean)


@dataclass
class PosteriorState:
    """Full state of one GP-classification inference run.

    A is the posterior covariance over latent values, h the posterior
    mean.  Sites are stored as (site_m, site_precision) so the flat init
    v_i = inf is exactly precision 0.  relax_b holds the per-site
    relaxation precisions (0 when inactive).
    """

    A: np.ndarray
    h: np.ndarray
    site_m: np.ndarray
    site_precision: np.ndarray
    relax_b: np.ndarray

    @classmethod
    def init_from_prior(cls, K: np.ndarray) -> "PosteriorState":
        """Start of inference: A = K, h = 0, all sites flat."""
        N = K.shape[0]
        return cls(
            A=np.array(K, dtype=float, copy=True),
            h=np.zeros(N),
            site_m=np.zeros(N),
            site_precision=np.zeros(N),
            relax_b=np.zeros(N),
        )

    @property
    def n_sites(self) -> int:
        return self.h.shape[0]

    def site_natural_means(self) -> np.ndarray:
        """Per-site natural means m_i / v_i."""
        return self.site_m * self.site_precision

    def copy(self) -> "PosteriorState":
        return PosteriorState(
            A=self.A.copy(),
            h=self.h.copy(),
            site_m=self.site_m.copy(),
            site_precision=self.site_precision.copy(),
            relax_b=self.relax_b.copy(),
        )


def singular_pivot_floor(A: np.ndarray) -> float:
    """Scale-aware floor for the rank-one pivot |delta + A_ii|."""
    return SINGULAR_PIVOT_REL_FLOOR * float(np.trace(A)) / A.shape[0]


def rank_one_update(
    state: PosteriorState,
    i: int,
    v_new: float,
    v_old: float,
    m_new: float | None = None,
) -> PosteriorState:
    """Replace site i's variance v_old by v_new and refresh (A, h).

    A <- A - a_i a_i^T / (delta + A_ii) with delta = 1/(1/v_new - 1/v_old)
    and a_i the i-th column of A, then h = A @ (site_m * site_precision).
    Infinite variances are passed as float('inf') and handled exactly via
    precisions.  Returns a new state; the input is not modified.
    """
    p_new = 0.0 if np.isinf(v_new) else 1.0 / v_new
    p_old = 0.0 if np.isinf(v_old) else 1.0 / v_old
    out = state.copy()
    if m_new is not None:
        out.site_m[i] = m_new
    dp = p_new - p_old
    if dp != 0.0:
        A = out.A
        denom = 1.0 / dp + A[i, i]
        if abs(denom) < abs(singular_pivot_floor(A)):
            raise SingularUpdate(
                f"site {i}: pivot {denom:.3e} below floor {singular_pivot_floor(A):.3e}"
            )
        a = A[:, i].copy()
        A -= np.outer(a, a) / denom
        A += A.T
        A *= 0.5
    out.site_precision[i] = p_new
    out.h = out.A @ out.site_natural_means()
    return out


def posterior_from_sites(
    K: np.ndarray, site_m: np.ndarray, site_precision: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """Dense reference: A = (K^-1 + diag(p))^-1 and h = A @ (m * p).

    Used by tests as the brute-force counterpart of the rank-one path.
    """
    if K.shape[0] != site_m.shape[0] or site_m.shape != site_precision.shape:
        raise DimensionMismatch("K, site_m, site_precision sizes disagree")
    Kinv = np.linalg.inv(K)
    A = np.linalg.inv(Kinv + np.diag(site_precision))
    A = 0.5 * (A + A.T)
    return A, A @ (site_m * site_precision)
