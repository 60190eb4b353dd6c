"""Joint OAM probability-amplitude matrices for the three motion models.

For photons projected onto spiral phase modes exp(i*l*phi), the joint
amplitude of detecting the pair in modes (k, m) is a normalized mean over
the azimuth:

* ``ZeroRM``      -- both detections share one frame; the boost enters only
  through the measure: A(k, m) = mean of jacobian(phi) * exp(-i*(k+m)*phi).
  Depends on k + m alone.
* ``NonZeroRM1``  -- the stationary detector projects exp(-i*k*phi), the
  moving one sees the contracted azimuth: exp(-i*m*arctan(gamma*tan(phi))).
* ``NonZeroRM2``  -- detection described in the moving frame: the stationary
  photon's mode is dragged through the inverse map,
  exp(-i*k*arctan(tan(phi)/gamma)) * exp(-i*m*phi).

Branch convention: the boosted phase factors evaluate the arctangent on the
principal branch, which makes them pi-periodic in phi.  Consequently the
NonZeroRM1 matrix is supported on even k only, NonZeroRM2 on even m only,
and the two models are genuinely distinct.  This is the convention under
which the bundled reference table was generated.  At gamma = 1 the map is
the identity and all three models collapse to the same anti-diagonal
delta(k + m), computed through one shared code path.

The Zero RM family has the closed form

    A(s) = (-(gamma-1)/(gamma+1))**(|s|/2)   for even s = k + m, else 0,

obtained by writing the integrand as 2*gamma/((gamma**2+1) +
(gamma**2-1)*cos(2*phi)) and reading off the Fourier coefficients of a
Poisson kernel; the analogous substitution psi = arctan(tan(phi)/gamma)
turns the NonZeroRM2 m = 0 column into the Fourier coefficients of
gamma/((gamma**2-1)*sin(psi)**2 + 1), giving the same form with ratio
+(gamma-1)/(gamma+1).  Both serve as oracles for the quadrature.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .kinematics import boost_jacobian
from .quadrature import (
    QuadratureSpec,
    ToleranceNotReached,
    integrate_periodic,
    integrate_periodic_batch,
)

__all__ = [
    "BoostModel",
    "AmplitudeMatrix",
    "amplitude",
    "build_matrix",
    "zero_rm_closed_form",
    "nz2_axis_closed_form",
    "mode_indices",
]


class BoostModel(enum.Enum):
    """The three observer-motion models."""

    ZERO_RM = "zero-rm"
    NON_ZERO_RM1 = "non-zero-rm1"
    NON_ZERO_RM2 = "non-zero-rm2"


def mode_indices(lmax):
    """OAM indices -lmax..lmax; matrix axis order matches this."""
    return np.arange(-lmax, lmax + 1)


@dataclass
class AmplitudeMatrix:
    """Dense D x D joint amplitude grid, D = 2*lmax + 1, indexed (k, m)."""

    model: BoostModel
    gamma: float
    lmax: int
    entries: np.ndarray = field(repr=False)

    @property
    def dim(self):
        return 2 * self.lmax + 1

    def at(self, k, m):
        """Entry A(k, m) by OAM index (k, m in -lmax..lmax)."""
        return self.entries[k + self.lmax, m + self.lmax]


def _boosted_phase(phi, gamma):
    # Principal branch; identity in the rest frame (see module docstring).
    if gamma == 1.0:
        return phi
    return np.arctan(gamma * np.tan(phi))


def _inverse_boosted_phase(phi, gamma):
    if gamma == 1.0:
        return phi
    return np.arctan(np.tan(phi) / gamma)


def _integrand(model, gamma, k, m):
    if model is BoostModel.ZERO_RM:
        s = k + m
        return lambda phi: boost_jacobian(phi, gamma) * np.exp(-1j * s * phi)
    if model is BoostModel.NON_ZERO_RM1:
        return lambda phi: np.exp(
            -1j * (k * phi + m * _boosted_phase(phi, gamma))
        )
    if model is BoostModel.NON_ZERO_RM2:
        return lambda phi: np.exp(
            -1j * (k * _inverse_boosted_phase(phi, gamma) + m * phi)
        )
    raise ValueError(f"unknown model {model!r}")


def amplitude(model, gamma, k, m, spec=QuadratureSpec()):
    """Single joint amplitude A(k, m) by direct adaptive quadrature."""
    _check_gamma(gamma)
    return integrate_periodic(_integrand(model, gamma, k, m), gamma, spec)


def zero_rm_closed_form(gamma, s):
    """Exact Zero RM amplitude as a function of s = k + m.

    0 for odd s, else (-(gamma-1)/(gamma+1))**(|s|/2).
    """
    _check_gamma(gamma)
    if s % 2:
        return complex(0.0)
    return complex((-(gamma - 1.0) / (gamma + 1.0)) ** (abs(s) // 2))


def nz2_axis_closed_form(gamma, k):
    """Exact NonZeroRM2 amplitude on the m = 0 axis.

    0 for odd k, else (+(gamma-1)/(gamma+1))**(|k|/2).
    """
    _check_gamma(gamma)
    if k % 2:
        return complex(0.0)
    return complex(((gamma - 1.0) / (gamma + 1.0)) ** (abs(k) // 2))


def _check_gamma(gamma):
    if not np.isfinite(gamma) or gamma < 1.0:
        raise ValueError(f"gamma must be finite and >= 1, got {gamma}")


def _wrap_cell_context(exc, model, gamma, cells):
    exc.args = (
        f"{exc.args[0]} [model={model.value}, gamma={gamma:g}, cells={cells}]",
    ) + exc.args[1:]
    return exc


def _profile_matrix(gamma, lmax, spec, weighted):
    # Shared s-profile path: amplitudes depend on s = k + m only.  Used by
    # ZeroRM at all gamma and by every model at gamma = 1 (identity map,
    # unit jacobian), so the rest-frame matrices agree bitwise.
    svals = np.arange(0, 2 * lmax + 1, 2)

    def fbatch(phi):
        out = np.exp(-1j * np.outer(svals, phi))
        if weighted:
            out = out * boost_jacobian(phi, gamma)
        return out

    try:
        prof_pos, _ = integrate_periodic_batch(fbatch, gamma, spec)
    except ToleranceNotReached as exc:
        raise _wrap_cell_context(exc, BoostModel.ZERO_RM, gamma, "s-profile")
    prof = np.zeros(4 * lmax + 1, dtype=complex)  # index s + 2*lmax
    prof[2 * lmax :: 2] = prof_pos  # s = 0, 2, ..., 2*lmax
    if lmax > 0:
        # A(-s) = conj(A(s)): fill s = -2, -4, ..., -2*lmax
        prof[: 2 * lmax : 2] = np.conj(prof_pos[1:][::-1])
    ks = mode_indices(lmax)
    return prof[(ks[:, None] + ks[None, :]) + 2 * lmax]


def _nz_column_batch(model, gamma, fixed, moving, spec):
    # One batch integral: `fixed` is the index on the plain phase factor of
    # the OTHER leg, `moving` the index array on this model's boosted leg...
    # concretely, NonZeroRM1 integrates columns (fixed = m over the boosted
    # factor, moving = k-range on exp(-i*k*phi)); NonZeroRM2 integrates rows
    # (fixed = k over the inverse map, moving = m-range on exp(-i*m*phi)).
    if model is BoostModel.NON_ZERO_RM1:

        def fbatch(phi):
            fast = np.exp(-1j * fixed * _boosted_phase(phi, gamma))
            return np.exp(-1j * np.outer(moving, phi)) * fast

        label = f"column m={fixed}"
    else:

        def fbatch(phi):
            slow = np.exp(-1j * fixed * _inverse_boosted_phase(phi, gamma))
            return np.exp(-1j * np.outer(moving, phi)) * slow

        label = f"row k={fixed}"
    try:
        vals, _ = integrate_periodic_batch(fbatch, gamma, spec)
    except ToleranceNotReached as exc:
        raise _wrap_cell_context(exc, model, gamma, label)
    return vals


def _nz_matrix(model, gamma, lmax, spec):
    # The pi-periodic boosted factor kills odd harmonics of the plain leg:
    # NonZeroRM1 lives on even k rows, NonZeroRM2 on even m columns.  The
    # other half of the index plane comes from A(-k,-m) = conj(A(k,m)).
    D = 2 * lmax + 1
    A = np.zeros((D, D), dtype=complex)
    ks = mode_indices(lmax)
    even = ks[ks % 2 == 0]
    pos_even = even[even > 0]

    for fixed in range(1, lmax + 1):
        vals = _nz_column_batch(model, gamma, fixed, even, spec)
        if model is BoostModel.NON_ZERO_RM1:
            A[even + lmax, fixed + lmax] = vals
            A[lmax - even, lmax - fixed] = np.conj(vals)
        else:
            A[fixed + lmax, even + lmax] = vals
            A[lmax - fixed, lmax - even] = np.conj(vals)
    # fixed = 0 line: conjugation maps it onto itself, integrate half
    nonneg = even[even >= 0]
    vals = _nz_column_batch(model, gamma, 0, nonneg, spec)
    if model is BoostModel.NON_ZERO_RM1:
        A[nonneg + lmax, lmax] = vals
        A[lmax - pos_even, lmax] = np.conj(vals[nonneg > 0])
    else:
        A[lmax, nonneg + lmax] = vals
        A[lmax, lmax - pos_even] = np.conj(vals[nonneg > 0])
    return A


def build_matrix(model, gamma, lmax, spec=QuadratureSpec()):
    """Assemble the full amplitude matrix for one (model, gamma) point.

    Exploits the structure instead of integrating D*D cells independently:
    conjugation symmetry A(-k, -m) = conj(A(k, m)) halves the work, the
    parity zeros of each model are skipped, and the Zero RM family is built
    from its s = k + m profile (2*lmax + 1 integrals instead of D**2).
    Output is deterministic for a given spec.

    Raises ToleranceNotReached (with the offending cells named) if the
    quadrature cannot meet spec.abs_tol.
    """
    _check_gamma(gamma)
    if lmax < 0:
        raise ValueError(f"lmax must be >= 0, got {lmax}")
    if gamma == 1.0 or model is BoostModel.ZERO_RM:
        weighted = model is BoostModel.ZERO_RM
        entries = _profile_matrix(gamma, lmax, spec, weighted)
    else:
        entries = _nz_matrix(model, gamma, lmax, spec)
    return AmplitudeMatrix(model=model, gamma=float(gamma), lmax=lmax, entries=entries)
