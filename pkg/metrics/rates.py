"""Capacity, single-user bound and Gram orthogonality residual."""

from __future__ import annotations

import numpy as np

from channel.los import ChannelMatrix
from core.exceptions import ChannelError


def _check_finite(h: ChannelMatrix) -> None:
    if not np.all(np.isfinite(h.entries)):
        raise ChannelError("channel contains non-finite entries")


def capacity(h: ChannelMatrix, rho: float) -> float:
    """log2 det(I + ρ HᴴH) evaluated through the singular values of H."""

    _check_finite(h)
    if rho < 0:
        raise ChannelError("rho must be non-negative")
    singular = np.linalg.svd(h.entries, compute_uv=False)
    return float(np.sum(np.log2(1.0 + rho * singular**2)))


def single_user_bound(h: ChannelMatrix, rho: float) -> float:
    if rho < 0:
        raise ChannelError("rho must be non-negative")
    return float(np.sum(np.log2(1.0 + rho * h.column_norms_sq())))


def gram_orthogonality_residual(h: ChannelMatrix) -> float:
    """max off-diagonal |G[l,k]| over the mean diagonal of G = HᴴH."""

    if h.n_uavs < 2:
        raise ChannelError("orthogonality residual needs at least two UAVs")
    gram = h.gram()
    diagonal_mean = float(np.mean(np.real(np.diag(gram))))
    if diagonal_mean <= 0:
        raise ChannelError("channel has zero power")
    off_diagonal = np.abs(gram - np.diag(np.diag(gram)))
    return float(off_diagonal.max() / diagonal_mean)
