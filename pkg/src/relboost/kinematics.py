"""Boosted-azimuth kinematics.

A detector moving along x at Lorentz factor ``gamma`` sees the transverse
plane contracted, which maps an azimuth ``phi`` to

    phi' = arctan(gamma * tan(phi))

taken on the continuous monotone branch over a full turn: the raw arctangent
on [0, pi/2), shifted by pi on (pi/2, 3*pi/2) and by 2*pi on (3*pi/2, 2*pi),
with phi' = pi/2 and 3*pi/2 at the transition points by continuity.  The
whole module is parameterized by gamma alone; the velocity never appears.

All functions accept scalars or numpy arrays and are pure.
"""

from __future__ import annotations

import numpy as np

TWO_PI = 2.0 * np.pi

__all__ = [
    "TWO_PI",
    "boost_angle",
    "inverse_boost_angle",
    "boost_jacobian",
    "reduce_angle",
]


def reduce_angle(phi):
    """Reduce an angle (or array of angles) to the canonical domain [0, 2*pi)."""
    return np.mod(phi, TWO_PI)


def _unwrapped_arctan(y, x):
    # atan2(y, x) is the stable form of arctan(y/x) near odd multiples of
    # pi/2 (no tan overflow) and is exact at the fixed points; lifting its
    # (-pi, pi] range by mod 2*pi yields the continuous monotone branch.
    return np.mod(np.arctan2(y, x), TWO_PI)


def boost_angle(phi, gamma):
    """Azimuth seen by the boosted observer, on the unwrapped branch.

    Parameters
    ----------
    phi : float or ndarray
        Azimuth in radians; any real value, reduced mod 2*pi.
    gamma : float
        Lorentz factor, >= 1.

    Returns
    -------
    float or ndarray
        Strictly increasing image of [0, 2*pi) onto itself with
        boost_angle(0) = 0 and fixed points at pi/2 and 3*pi/2.
    """
    if gamma < 1.0:
        raise ValueError(f"gamma must be >= 1, got {gamma}")
    phi = reduce_angle(phi)
    return _unwrapped_arctan(gamma * np.sin(phi), np.cos(phi))


def inverse_boost_angle(phi, gamma):
    """Inverse of :func:`boost_angle`: the unwrapped branch of arctan(tan(phi)/gamma)."""
    if gamma < 1.0:
        raise ValueError(f"gamma must be >= 1, got {gamma}")
    phi = reduce_angle(phi)
    return _unwrapped_arctan(np.sin(phi), gamma * np.cos(phi))


def boost_jacobian(phi, gamma):
    """Derivative of the inverse map, gamma / ((gamma**2 - 1) * cos(phi)**2 + 1).

    Positive everywhere, equal to gamma at pi/2 and 3*pi/2 and to 1/gamma at
    0 and pi; its mean over a full turn is exactly 1.
    """
    if gamma < 1.0:
        raise ValueError(f"gamma must be >= 1, got {gamma}")
    c = np.cos(phi)
    return gamma / ((gamma * gamma - 1.0) * c * c + 1.0)
