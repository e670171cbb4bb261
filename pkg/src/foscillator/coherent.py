"""Deformed coherent states: eigenvectors of the deformed lowering operator.

Weights follow c_n ~ alpha^n / (F(n) sqrt(n!)) with the running profile
product F(n) = f(0) f(1) ... f(n).  Everything is assembled in log space:
for growing profiles the product overflows long before the state itself
stops being perfectly representable.

The two-mode construction shares one profile product over the total level
n1 + n2; for any non-identity profile that coupling is what entangles the
modes, and the Schmidt spectrum quantifies it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np
from scipy.special import gammaln

from .errors import DomainError, TruncationError
from .fock import DensityMatrix, density_from_amplitudes
from .hermite import hermite_functions
from .nonlinearity import NonlinearitySpec, log_f_factorial

_TAIL_TOL = 1e-12
_SCHMIDT_SEPARABLE_TOL = 1e-9


@dataclass(frozen=True)
class CoherentStateVector:
    alpha: complex
    spec: NonlinearitySpec
    amplitudes: np.ndarray

    @property
    def dim(self) -> int:
        return self.amplitudes.shape[0]

    def density(self) -> DensityMatrix:
        return density_from_amplitudes(self.amplitudes)


@dataclass(frozen=True)
class TwoModeState:
    alpha1: complex
    alpha2: complex
    spec: NonlinearitySpec
    coefficients: np.ndarray

    @property
    def dims(self) -> Tuple[int, int]:
        return self.coefficients.shape


@dataclass(frozen=True)
class SchmidtSpectrum:
    singular_values: np.ndarray
    entropy: float

    @property
    def sigma2(self) -> float:
        sv = self.singular_values
        return float(sv[1]) if sv.size > 1 else 0.0

    @property
    def separable(self) -> bool:
        return self.sigma2 < _SCHMIDT_SEPARABLE_TOL


def _polar(z: complex):
    z = complex(z)
    return abs(z), math.atan2(z.imag, z.real)


def nonlinear_coherent_state(
    alpha: complex, spec: NonlinearitySpec, dim: int
) -> CoherentStateVector:
    """Normalized truncated eigenvector of A_f with eigenvalue alpha.

    The last retained weight must carry less than 1e-12 probability, so the
    truncation defect of the eigenvalue relation stays at the roundoff level.
    """
    if dim < 2:
        raise DomainError("coherent state needs dim >= 2")
    logf = log_f_factorial(spec, dim - 1)
    r, phase0 = _polar(alpha)
    n = np.arange(dim, dtype=float)
    if r == 0.0:
        amps = np.zeros(dim, dtype=complex)
        amps[0] = 1.0
    else:
        logmag = n * math.log(r) - logf - 0.5 * gammaln(n + 1.0)
        logmag -= logmag.max()
        mag = np.exp(logmag)
        mag /= np.linalg.norm(mag)
        phase = phase0 * n
        amps = mag * (np.cos(phase) + 1j * np.sin(phase))
    if abs(amps[-1]) ** 2 >= _TAIL_TOL:
        raise TruncationError(
            f"top weight {abs(amps[-1])**2:.3e} exceeds the tail criterion; increase dim"
        )
    return CoherentStateVector(alpha=complex(alpha), spec=spec, amplitudes=amps)


def position_wavefunction(state: CoherentStateVector, x) -> np.ndarray:
    """psi(x) = sum_n c_n phi_n(x) in the oscillator eigenbasis."""
    phi = hermite_functions(state.dim - 1, np.asarray(x, dtype=float))
    vals = np.tensordot(state.amplitudes, phi, axes=(0, 0))
    return complex(vals) if np.ndim(x) == 0 else vals


def two_mode_coherent_state(
    alpha1: complex,
    alpha2: complex,
    spec: NonlinearitySpec,
    dims,
) -> TwoModeState:
    """Joint weights c[n1, n2] ~ alpha1^n1 alpha2^n2 / (sqrt(n1! n2!) F(n1+n2)).

    The profile product couples the modes through the total level only; the
    identity profile factorizes into a product of two ordinary coherent
    states.
    """
    if np.ndim(dims) == 0:
        d1 = d2 = int(dims)
    else:
        d1, d2 = (int(v) for v in dims)
    if d1 < 2 or d2 < 2:
        raise DomainError("two-mode state needs dims >= 2")
    logf = log_f_factorial(spec, d1 + d2 - 2)
    r1, ph1 = _polar(alpha1)
    r2, ph2 = _polar(alpha2)
    n1 = np.arange(d1, dtype=float)[:, None]
    n2 = np.arange(d2, dtype=float)[None, :]
    # log r * 0 must stay 0 when an amplitude vanishes
    l1 = n1 * math.log(r1) if r1 > 0.0 else np.where(n1 == 0, 0.0, -np.inf)
    l2 = n2 * math.log(r2) if r2 > 0.0 else np.where(n2 == 0, 0.0, -np.inf)
    total = (n1 + n2).astype(int)
    logmag = l1 + l2 - 0.5 * gammaln(n1 + 1.0) - 0.5 * gammaln(n2 + 1.0) - logf[total]
    logmag -= logmag.max()
    mag = np.exp(logmag)
    mag /= np.linalg.norm(mag)
    phase = ph1 * n1 + ph2 * n2
    coeff = mag * (np.cos(phase) + 1j * np.sin(phase))
    edge = float(np.sum(np.abs(coeff[-1, :]) ** 2) + np.sum(np.abs(coeff[:, -1]) ** 2))
    if edge >= _TAIL_TOL:
        raise TruncationError(
            f"edge weight {edge:.3e} exceeds the tail criterion; increase dims"
        )
    return TwoModeState(
        alpha1=complex(alpha1), alpha2=complex(alpha2), spec=spec, coefficients=coeff
    )


def eigen_residual(state: CoherentStateVector, drop_top: int = 5) -> float:
    """Norm of A_f v - alpha v away from the truncation edge.

    The top few components always carry an O(|alpha| |c_top|) defect because
    the ladder has nowhere to lower from above the cut, so they are excluded
    from the residual by default.
    """
    from .fock import deformed_lowering

    a_f = deformed_lowering(state.spec, state.dim)
    resid = a_f @ state.amplitudes - state.alpha * state.amplitudes
    keep = max(1, state.dim - int(drop_top))
    return float(np.linalg.norm(resid[:keep]))


def two_mode_eigen_residuals(state: TwoModeState, drop_top: int = 5):
    """Residuals of A_i c = alpha_i c for both modes, edges excluded.

    Each deformed mode operator lowers one index and evaluates the profile
    at the total level: (A_1 c)[n1, n2] = sqrt(n1+1) f(n1+n2+1) c[n1+1, n2].
    """
    from .nonlinearity import eval_f

    c = state.coefficients
    d1, d2 = c.shape
    n1 = np.arange(d1, dtype=float)[:, None]
    n2 = np.arange(d2, dtype=float)[None, :]

    f_tot_1 = eval_f(state.spec, (n1[:-1] + n2) + 1.0)
    a1c = np.zeros_like(c)
    a1c[:-1, :] = np.sqrt(n1[:-1] + 1.0) * f_tot_1 * c[1:, :]
    r1 = a1c - state.alpha1 * c

    f_tot_2 = eval_f(state.spec, (n1 + n2[:, :-1]) + 1.0)
    a2c = np.zeros_like(c)
    a2c[:, :-1] = np.sqrt(n2[:, :-1] + 1.0) * f_tot_2 * c[:, 1:]
    r2 = a2c - state.alpha2 * c

    k1 = max(1, d1 - int(drop_top))
    k2 = max(1, d2 - int(drop_top))
    return (
        float(np.linalg.norm(r1[:k1, :k2])),
        float(np.linalg.norm(r2[:k1, :k2])),
    )


def schmidt_spectrum(state) -> SchmidtSpectrum:
    """Singular values of the coefficient matrix and the entanglement entropy.

    Entropy is -sum sigma^2 log sigma^2 over nonzero singular values; a
    second singular value below 1e-9 marks the state as separable.
    """
    coeff = state.coefficients if isinstance(state, TwoModeState) else np.asarray(state)
    if coeff.ndim != 2:
        raise DomainError("schmidt spectrum needs a two-index coefficient matrix")
    sv = np.linalg.svd(coeff, compute_uv=False)
    p = sv * sv
    p = p[p > 1e-300]
    entropy = float(-np.sum(p * np.log(p)))
    return SchmidtSpectrum(singular_values=sv, entropy=entropy)
