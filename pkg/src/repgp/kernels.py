"""Covariance functions and Gram-matrix construction for the GP prior."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch

DEFAULT_JITTER = {"linear": 1e-10, "rbf": 1e-8}


@dataclass(frozen=True)
class KernelSpec:
    """Kernel family plus hyperparameters.

    kind 'linear' is the plain dot product; 'rbf' is
    exp(-||x - x'||^2 / (2 * width^2)) with width the lengthscale.
    jitter is added to the Gram diagonal to keep it invertible.
    """

    kind: str = "rbf"
    width: float = 1.0
    jitter: float | None = None

    def __post_init__(self):
        if self.kind not in ("linear", "rbf"):
            raise ValueError(f"unknown kernel kind {self.kind!r}")
        if self.kind == "rbf" and not self.width > 0:
            raise ValueError("rbf width must be positive")
        if self.jitter is None:
            object.__setattr__(self, "jitter", DEFAULT_JITTER[self.kind])
        elif self.jitter < 0:
            raise ValueError("jitter must be >= 0")


def kernel_eval(spec: KernelSpec, x1: np.ndarray, x2: np.ndarray) -> float:
    """Single kernel value k(x1, x2); jitter is not applied here."""
    x1 = np.asarray(x1, dtype=float)
    x2 = np.asarray(x2, dtype=float)
    if x1.shape != x2.shape:
        raise DimensionMismatch(f"inputs {x1.shape} vs {x2.shape}")
    if spec.kind == "linear":
        return float(x1 @ x2)
    d2 = float(np.sum((x1 - x2) ** 2))
    return float(np.exp(-d2 / (2.0 * spec.width**2)))


def gram(spec: KernelSpec, X: np.ndarray) -> np.ndarray:
    """Gram matrix K_ij = k(x_i, x_j) + jitter on the diagonal."""
    X = np.atleast_2d(np.asarray(X, dtype=float))
    if spec.kind == "linear":
        K = X @ X.T
    else:
        sq = np.sum(X**2, axis=1)
        d2 = sq[:, None] + sq[None, :] - 2.0 * (X @ X.T)
        np.maximum(d2, 0.0, out=d2)
        K = np.exp(-d2 / (2.0 * spec.width**2))
    K = 0.5 * (K + K.T)
    return K + spec.jitter * np.eye(X.shape[0])


def cross_gram(spec: KernelSpec, X: np.ndarray, Xstar: np.ndarray) -> np.ndarray:
    """Cross-covariances, entry (i, j) = k(x_i, xstar_j). No jitter."""
    X = np.atleast_2d(np.asarray(X, dtype=float))
    Xstar = np.asarray(Xstar, dtype=float).reshape(-1, X.shape[1]) if np.size(Xstar) else np.zeros((0, X.shape[1]))
    if Xstar.ndim != 2 or (Xstar.shape[0] > 0 and Xstar.shape[1] != X.shape[1]):
        raise DimensionMismatch(f"feature counts {X.shape[1]} vs {Xstar.shape}")
    if spec.kind == "linear":
        return X @ Xstar.T
    sq1 = np.sum(X**2, axis=1)
    sq2 = np.sum(Xstar**2, axis=1)
    d2 = sq1[:, None] + sq2[None, :] - 2.0 * (X @ Xstar.T)
    np.maximum(d2, 0.0, out=d2)
    return np.exp(-d2 / (2.0 * spec.width**2))


def median_pairwise_distance(X: np.ndarray) -> float:
    """Median of the nonzero pairwise Euclidean distances (width heuristic)."""
    X = np.atleast_2d(np.asarray(X, dtype=float))
    diffs = X[:, None, :] - X[None, :, :]
    d = np.sqrt(np.sum(diffs**2, axis=-1))
    iu = np.triu_indices(X.shape[0], k=1)
    vals = d[iu]
    vals = vals[vals > 0]
    if vals.size == 0:
        return 1.0
    return float(np.median(vals))
