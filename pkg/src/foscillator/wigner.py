"""Wigner quasidistributions on truncated number bases.

The standard function is computed from the closed-form displacement matrix
elements (associated Laguerre polynomials), evaluated diagonal by diagonal
so only density-matrix entries that are actually populated cost anything.

Two deformed variants are provided, differing in which parity enters the
trace against the exponential of the deformed ladder generator:

* ``usual_parity``     W = 2 Tr[P rho U_f(alpha)]; provably real, because
  the ordinary parity anticommutes with the deformed ladder operator.
* ``deformed_parity``  W = 2 Tr[P_f rho U_f(alpha)] with
  P_f = diag(exp(i pi n f(n)^2)); complex in general.

U_f is the exponential of 2 (alpha A_f+ - alpha* A_f), evaluated on a padded
basis and trimmed back, since the exponential mixes levels beyond any fixed
truncation.
"""

from __future__ import annotations

import math
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm
from scipy.special import eval_genlaguerre, gammaln

from .errors import DomainError, NumericToleranceError
from .fock import DensityMatrix, deformed_lowering
from .nonlinearity import NonlinearitySpec, require_positive

WIGNER_VARIANTS = ("usual_parity", "deformed_parity")

# Entries below this magnitude contribute nothing at double precision.
_RHO_SKIP = 1e-16
# Unitarity defect allowed for the padded exponential.
_UNITARITY_TOL = 1e-10


@dataclass(frozen=True)
class WignerGrid:
    """W sampled on a cartesian grid; values[i, j] = W(q_axis[i], p_axis[j])."""

    q_axis: np.ndarray
    p_axis: np.ndarray
    values: np.ndarray

    def normalization(self) -> float:
        """Integral of Re W over the grid with the dq dp / (2 pi) measure."""
        inner = np.trapezoid(self.values.real, self.p_axis, axis=1)
        return float(np.trapezoid(inner, self.q_axis) / (2.0 * math.pi))

    def max_imag(self) -> float:
        return float(np.max(np.abs(self.values.imag)))

    def min_real(self) -> float:
        return float(np.min(self.values.real))


def displacement_matrix(beta: complex, dim: int) -> np.ndarray:
    """Number-basis matrix of the displacement operator D(beta).

    Exact infinite-space matrix elements restricted to the first dim levels:
    for m >= n, <m|D|n> = sqrt(n!/m!) beta^(m-n) e^(-|beta|^2/2) L_n^(m-n)(|beta|^2),
    and the upper triangle follows by replacing beta with -conj(beta).
    """
    if dim < 2:
        raise DomainError("operator truncation needs dim >= 2")
    beta = complex(beta)
    x = abs(beta) ** 2
    envelope = math.exp(-0.5 * x)
    out = np.zeros((dim, dim), dtype=complex)
    for k in range(dim):
        n = np.arange(dim - k, dtype=float)
        lag = eval_genlaguerre(n, k, x)
        ratio = np.exp(0.5 * (gammaln(n + 1.0) - gammaln(n + k + 1.0)))
        lower = ratio * (beta ** k) * envelope * lag
        rows = np.arange(dim - k)
        out[rows + k, rows] = lower
        if k > 0:
            upper = ratio * ((-beta.conjugate()) ** k) * envelope * lag
            out[rows, rows + k] = upper
    return out


def wigner_values(rho: DensityMatrix, q, p) -> np.ndarray:
    """W(q, p) = 2 Tr[P rho D(sqrt(2)(q + i p))], broadcast over q, p.

    No hermiticity of rho is assumed in the sum, so the imaginary part is a
    faithful diagnostic of the input rather than zero by construction.
    """
    qa, pa = np.broadcast_arrays(np.asarray(q, float), np.asarray(p, float))
    beta = math.sqrt(2.0) * (qa + 1j * pa)
    x = (np.abs(beta) ** 2).astype(float)
    m = rho.matrix
    dim = rho.dim
    acc = np.zeros(beta.shape, dtype=complex)

    # k = 0: diagonal of rho against diagonal Laguerre values
    for n in range(dim):
        if abs(m[n, n]) < _RHO_SKIP:
            continue
        sign = -1.0 if n % 2 else 1.0
        acc += sign * m[n, n] * eval_genlaguerre(n, 0, x)

    power = np.ones_like(beta)
    for k in range(1, dim):
        power = power * beta
        cpower = np.conjugate(power)
        for n in range(dim - k):
            a = m[n + k, n]
            b = m[n, n + k]
            if max(abs(a), abs(b)) < _RHO_SKIP:
                continue
            sign = -1.0 if n % 2 else 1.0
            ratio = math.exp(0.5 * (gammaln(n + 1.0) - gammaln(n + k + 1.0)))
            acc += (sign * ratio) * eval_genlaguerre(n, k, x) * (a * cpower + b * power)

    w = 2.0 * np.exp(-0.5 * x) * acc
    return complex(w) if np.ndim(q) == 0 and np.ndim(p) == 0 else w


def _warn_if_grid_small(rho: DensityMatrix, q_axis: np.ndarray, p_axis: np.ndarray) -> None:
    # Support estimate from the level where cumulative population reaches
    # 1 - 1e-6; a grid stopping short of it cannot hold the tail mass.
    pops = np.real(np.diagonal(rho.matrix))
    covered = np.nonzero(np.cumsum(pops) >= 1.0 - 1e-6)[0]
    n_top = int(covered[0]) if covered.size else rho.dim - 1
    reach = math.sqrt(2.0 * n_top + 1.0) + 2.0
    extent = min(np.max(np.abs(q_axis)), np.max(np.abs(p_axis)))
    if extent < reach:
        warnings.warn(
            f"grid extent {extent:.2f} is below the state support estimate {reach:.2f}; "
            "tail mass may be lost",
            RuntimeWarning,
            stacklevel=3,
        )


def wigner_from_density(rho: DensityMatrix, q_axis, p_axis) -> WignerGrid:
    q_axis = np.asarray(q_axis, dtype=float)
    p_axis = np.asarray(p_axis, dtype=float)
    _warn_if_grid_small(rho, q_axis, p_axis)
    qq, pp = np.meshgrid(q_axis, p_axis, indexing="ij")
    return WignerGrid(q_axis=q_axis, p_axis=p_axis, values=wigner_values(rho, qq, pp))


def deformed_parity_operator(spec: NonlinearitySpec, dim: int) -> np.ndarray:
    """diag(exp(i pi n f(n)^2)); reduces to (-1)^n for the identity profile."""
    fvals = require_positive(spec, dim - 1)
    n = np.arange(dim, dtype=float)
    return np.exp(1j * math.pi * n * fvals * fvals)


def _deformed_exponential(a_f: np.ndarray, alpha: complex) -> np.ndarray:
    g = 2.0 * (alpha * a_f.conj().T - np.conjugate(alpha) * a_f)
    u = expm(g)
    defect = np.max(np.abs(u.conj().T @ u - np.eye(u.shape[0])))
    if defect > _UNITARITY_TOL:
        raise NumericToleranceError(
            f"deformed exponential lost unitarity (defect {defect:.3e})"
        )
    return u


def deformed_wigner_values(
    rho: DensityMatrix,
    spec: NonlinearitySpec,
    q,
    p,
    variant: str = "usual_parity",
    pad: int = 10,
    workers: int = None,
) -> np.ndarray:
    """Deformed transform at phase-space points, broadcast over q, p.

    Each point costs one matrix exponential on the padded basis (dim + pad),
    trimmed back to dim before the trace.  ``workers`` threads the point
    loop; results are written by index, so the output does not depend on
    scheduling.
    """
    if variant not in WIGNER_VARIANTS:
        raise DomainError(f"unknown wigner variant {variant!r}")
    if pad < 0:
        raise DomainError("pad must be >= 0")
    dim = rho.dim
    a_f = deformed_lowering(spec, dim + pad)
    if variant == "usual_parity":
        pvec = np.where(np.arange(dim) % 2 == 0, 1.0, -1.0).astype(complex)
    else:
        pvec = deformed_parity_operator(spec, dim)

    qa, pa = np.broadcast_arrays(np.asarray(q, float), np.asarray(p, float))
    alphas = ((qa + 1j * pa) / math.sqrt(2.0)).ravel()
    out = np.empty(alphas.shape, dtype=complex)
    m = rho.matrix

    def one_point(i: int):
        u = _deformed_exponential(a_f, alphas[i])[:dim, :dim]
        out[i] = 2.0 * np.einsum("m,mj,jm->", pvec, m, u)

    if workers is not None and workers > 1 and alphas.size > 1:
        with ThreadPoolExecutor(max_workers=int(workers)) as pool:
            list(pool.map(one_point, range(alphas.size)))
    else:
        for i in range(alphas.size):
            one_point(i)

    w = out.reshape(qa.shape)
    return complex(w) if np.ndim(q) == 0 and np.ndim(p) == 0 else w


def deformed_wigner(
    rho: DensityMatrix,
    spec: NonlinearitySpec,
    q_axis,
    p_axis,
    variant: str = "usual_parity",
    pad: int = 10,
    workers: int = None,
) -> WignerGrid:
    q_axis = np.asarray(q_axis, dtype=float)
    p_axis = np.asarray(p_axis, dtype=float)
    qq, pp = np.meshgrid(q_axis, p_axis, indexing="ij")
    vals = deformed_wigner_values(rho, spec, qq, pp, variant, pad, workers)
    return WignerGrid(q_axis=q_axis, p_axis=p_axis, values=vals)
