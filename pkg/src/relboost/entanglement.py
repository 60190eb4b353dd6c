"""Entanglement metrics of the bipartite OAM state.

The amplitude grid A(k, m), normalized to unit Frobenius norm, is the state
matrix psi of a pure bipartite state |psi> = sum A(k,m) |k>|m>.  Its
singular values give the Schmidt spectrum, and every reported metric is a
function of the Schmidt probabilities p_i = s_i**2:

    entropy (bits)        S = -sum p_i log2 p_i
    purity                P = sum p_i**2
    mutual information    I = 2 S            (global state is pure)
    negativity            N = ((sum_i s_i)**2 - 1) / 2
    effective dimension   D_eff = 1 / P

The negativity shortcut is cross-checkable against the explicit partial
transpose of the D**2 x D**2 density matrix via
:func:`negativity_partial_transpose`; the two paths are kept independent on
purpose.  Joint probabilities are P(k, m) = |A(k, m)|**2 (normalized), with
single-photon marginals given by row and column sums.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "ZeroState",
    "DecompositionFailure",
    "SchmidtSpectrum",
    "EntanglementMetrics",
    "normalize",
    "joint_probability",
    "schmidt",
    "entropy_bits",
    "purity",
    "mutual_information_bits",
    "negativity",
    "negativity_partial_transpose",
    "effective_dimensionality",
    "metrics",
    "marginals",
    "reduced_eigenvalues",
]

# Reduced-density eigenvalues in [-CLIP_FLOOR, 0) are treated as roundoff
# zeros; anything below ABORT_FLOOR signals a real defect, not noise.
_CLIP_FLOOR = 1e-12
_ABORT_FLOOR = -1e-8


class ZeroState(Exception):
    """The amplitude matrix has (numerically) zero norm; no state exists."""


class DecompositionFailure(Exception):
    """An eigen/singular decomposition failed or produced unphysical output."""


@dataclass
class SchmidtSpectrum:
    """Singular values, descending, with probabilities and cumulative sums."""

    singular_values: np.ndarray
    probabilities: np.ndarray
    cumulative: np.ndarray


@dataclass
class EntanglementMetrics:
    entropy_bits: float
    purity: float
    mutual_info_bits: float
    negativity: float
    d_eff: float


def normalize(a):
    """State matrix psi = A / ||A||_F.  Idempotent; raises ZeroState on ~0 input."""
    a = np.asarray(a, dtype=complex)
    norm = np.linalg.norm(a)
    if norm < 1e-300:
        raise ZeroState("amplitude matrix norm is zero")
    return a / norm


def joint_probability(a):
    """Normalized joint detection probabilities P(k, m) = |psi(k, m)|**2."""
    psi = normalize(a)
    return np.abs(psi) ** 2


def schmidt(psi):
    """Schmidt spectrum of a normalized state matrix via SVD."""
    try:
        s = np.linalg.svd(np.asarray(psi, dtype=complex), compute_uv=False)
    except np.linalg.LinAlgError as exc:  # not expected at these sizes
        raise DecompositionFailure(f"SVD did not converge: {exc}") from exc
    p = s * s
    total = p.sum()
    if not np.isfinite(total) or total <= 0:
        raise DecompositionFailure("singular values are not normalizable")
    p = p / total
    return SchmidtSpectrum(
        singular_values=s,
        probabilities=p,
        cumulative=np.cumsum(p),
    )


def _clean_probabilities(p):
    # Eigenvalue hygiene shared by every spectrum consumer.
    p = np.asarray(p, dtype=float)
    if p.min(initial=0.0) < _ABORT_FLOOR:
        raise DecompositionFailure(
            f"eigenvalue {p.min():.3e} below {_ABORT_FLOOR:g}: not roundoff"
        )
    return np.clip(p, 0.0, None)


def entropy_bits(spectrum):
    """Schmidt (entanglement) entropy in bits, with 0*log(0) = 0."""
    p = _clean_probabilities(spectrum.probabilities)
    nz = p[p > 0]
    return float(-(nz * np.log2(nz)).sum())


def purity(spectrum):
    """Purity of either reduced state, sum p_i**2."""
    p = _clean_probabilities(spectrum.probabilities)
    return float((p * p).sum())


def mutual_information_bits(spectrum):
    """Mutual information of the pure bipartite state: exactly twice the entropy."""
    return 2.0 * entropy_bits(spectrum)


def effective_dimensionality(spectrum):
    """Participation ratio 1 / sum p_i**2 of the Schmidt probabilities."""
    return 1.0 / purity(spectrum)


def negativity(psi):
    """Negativity from the Schmidt spectrum: ((sum_i s_i)**2 - 1) / 2.

    psi must be normalized; for a pure state this equals the sum of the
    absolute negative eigenvalues of the partial transpose.
    """
    spectrum = schmidt(psi)
    total = spectrum.singular_values.sum()
    return float((total * total - 1.0) / 2.0)


def negativity_partial_transpose(psi):
    """Negativity by explicit partial transpose; the slow verification path.

    Builds rho^(T_B) of the D**2 x D**2 density matrix from the state matrix
    and sums |negative eigenvalues|.  Independent of the SVD shortcut.
    """
    psi = np.asarray(psi, dtype=complex)
    d1, d2 = psi.shape
    # rho[(i,j),(i',j')] = psi[i,j] conj(psi[i',j']); transpose leg B: j <-> j'
    # gives rho_tb[(i,j),(i',j')] = psi[i,j'] conj(psi[i',j])
    rho_tb = np.einsum("ib,aj->ijab", psi, np.conj(psi)).reshape(d1 * d2, d1 * d2)
    try:
        eigs = np.linalg.eigvalsh(rho_tb)
    except np.linalg.LinAlgError as exc:
        raise DecompositionFailure(f"eigvalsh did not converge: {exc}") from exc
    return float(-eigs[eigs < 0].sum())


def reduced_eigenvalues(psi):
    """Eigenvalues of the reduced density matrix psi psi^dagger, descending.

    Equal to the squared singular values of psi; exposed for cross-checks.
    Applies the same hygiene as the metric functions (tiny negatives
    clipped, large negatives raise DecompositionFailure).
    """
    psi = np.asarray(psi, dtype=complex)
    try:
        eigs = np.linalg.eigvalsh(psi @ psi.conj().T)
    except np.linalg.LinAlgError as exc:
        raise DecompositionFailure(f"eigvalsh did not converge: {exc}") from exc
    return _clean_probabilities(eigs[::-1])


def metrics(psi):
    """All five metrics of a normalized state matrix, from one SVD."""
    spectrum = schmidt(psi)
    s = entropy_bits(spectrum)
    p = purity(spectrum)
    total = spectrum.singular_values.sum()
    return EntanglementMetrics(
        entropy_bits=s,
        purity=p,
        mutual_info_bits=2.0 * s,
        negativity=float((total * total - 1.0) / 2.0),
        d_eff=1.0 / p,
    )


def marginals(joint):
    """Single-photon OAM spectra (P_k, P_m): row and column sums of P(k, m)."""
    joint = np.asarray(joint, dtype=float)
    return joint.sum(axis=1), joint.sum(axis=0)
