"""Dissipative harmonic oscillator in a squeezed thermal bath.

The master equation is solved in the frame of the squeeze operator S(zeta),
where it reduces to a thermal-like su(1,1) problem with damping coefficients
alpha_coef, beta_coef (alpha_coef - beta_coef = gamma0).  A squeezed
coherent initial state S(zeta) D(eta0)|0> then evolves into a mixture of
generalized squeezed coherent states (GSCS) S(zeta) D(eta_tilde)|l> with
Poisson-like weights; the consistency of (N, M, zeta) ties the initial
system squeezing to the bath squeezing, r1 = r.

The master equation and the mixture live in the interaction picture; the
free evolution reappears only as the e^{-i omega (m-n) t} factor in the
phase distribution.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bath_kernels import (
    DissipativeBathMoments,
    OSCILLATOR_CONVENTION,
    bath_moments,
)
from .distribution import PhaseDistribution, distribution_from_fourier, resolve_grid
from .errors import ConsistencyError, TruncationError
from .special_functions import generalized_laguerre, log_factorial, squeeze_matrix


@dataclass(frozen=True)
class OscillatorLindbladSpec:
    omega: float
    gamma0: float
    moments: DissipativeBathMoments

    def __post_init__(self):
        if self.omega <= 0:
            raise ValueError(f"omega = {self.omega} must be positive")
        if self.gamma0 <= 0:
            raise ValueError(f"gamma0 = {self.gamma0} must be positive")

    @property
    def zeta_mag(self) -> float:
        return self.moments.r

    @property
    def zeta_phase(self) -> float:
        return self.moments.Phi

    @property
    def zeta(self) -> complex:
        r, phi = self.zeta_mag, self.zeta_phase
        return r * complex(math.cos(phi), math.sin(phi))

    @property
    def alpha_coef(self) -> float:
        return damping_coeffs(self)[0]

    @property
    def beta_coef(self) -> float:
        return damping_coeffs(self)[1]


def oscillator_spec(
    omega: float, gamma0: float, r: float, Phi: float, T: float
) -> OscillatorLindbladSpec:
    """Convenience constructor (oscillator sign convention, zeta = r e^{i Phi})."""
    return OscillatorLindbladSpec(
        omega, gamma0, bath_moments(r, Phi, T, omega, OSCILLATOR_CONVENTION)
    )


def _check_consistency(moments: DissipativeBathMoments, zeta: complex) -> None:
    """(|zeta|/zeta) M coth|zeta| + (zeta/|zeta|) M* tanh|zeta| = 2N + 1."""
    mag = abs(zeta)
    if mag == 0:
        return
    phase = zeta / mag
    lhs = moments.M / phase / math.tanh(mag) + phase * moments.M.conjugate() * math.tanh(mag)
    rhs = 2.0 * moments.N + 1.0
    if abs(lhs - rhs) > 1e-10 * max(1.0, rhs):
        raise ConsistencyError(
            f"squeeze-frame consistency violated: residual {abs(lhs - rhs):.3e}"
        )


def damping_coeffs(spec: OscillatorLindbladSpec) -> tuple[float, float]:
    """Squeezed-frame damping coefficients (alpha_coef, beta_coef).

    Their difference is gamma0 exactly (cosh^2 - sinh^2 = 1); the bath
    moments must satisfy the squeeze-frame consistency condition.
    """
    g0 = spec.gamma0
    moments = spec.moments
    r = spec.zeta_mag
    if r == 0.0:
        return g0 * (moments.N_th + 1.0), g0 * moments.N_th
    _check_consistency(moments, spec.zeta)
    cross = (g0 / (2.0 * r)) * math.sinh(2.0 * r) * (
        2.0 * (moments.M * spec.zeta.conjugate()).real
    )
    common = g0 * moments.N * math.cosh(2.0 * r) - cross
    return common + g0 * math.cosh(r) ** 2, common + g0 * math.sinh(r) ** 2


@dataclass(frozen=True)
class GscsMixture:
    """Parameters of the GSCS mixture at a fixed time: mixing strength
    beta_tilde, shrunk displacement eta_tilde, frame squeeze zeta."""

    beta_tilde: float
    eta_tilde: complex
    zeta: complex

    def __post_init__(self):
        if self.beta_tilde < -1e-15:
            raise ValueError(f"beta_tilde = {self.beta_tilde} must be nonnegative")

    @property
    def k_ratio(self) -> float:
        """Geometric ratio beta_tilde/(1 + beta_tilde) of the k-weights."""
        return self.beta_tilde / (1.0 + self.beta_tilde)


def mixture_params(spec: OscillatorLindbladSpec, t: float, eta0: complex) -> GscsMixture:
    if t < 0:
        raise ValueError(f"t = {t} must be nonnegative")
    _, beta_coef = damping_coeffs(spec)
    g0 = spec.gamma0
    # beta_coef vanishes identically at T = 0; clamp the rounding residue
    beta_tilde = max(0.0, (beta_coef / g0) * -math.expm1(-g0 * t))
    eta_tilde = eta0 * math.exp(-g0 * t / 2.0) / (1.0 + beta_tilde)
    return GscsMixture(beta_tilde=beta_tilde, eta_tilde=eta_tilde, zeta=spec.zeta)


def gcs_displacement_matrix(eta: complex, cutoff: int) -> np.ndarray:
    """Matrix Dm[f, l] = <f| D(eta) |l> from the Laguerre closed form of the
    generalized coherent state; f < l follows by the negative-superscript
    Laguerre identity."""
    x = abs(eta) ** 2
    log_half = 0.5 * np.array([log_factorial(k) for k in range(cutoff)])
    dm = np.empty((cutoff, cutoff), dtype=complex)
    pref = math.exp(-x / 2.0)
    for f in range(cutoff):
        for l in range(cutoff):
            if f >= l:
                dm[f, l] = (
                    pref
                    * math.exp(log_half[l] - log_half[f])
                    * eta ** (f - l)
                    * generalized_laguerre(l, f - l, x)
                )
            else:
                dm[f, l] = (
                    pref
                    * math.exp(log_half[f] - log_half[l])
                    * (-eta.conjugate()) ** (l - f)
                    * generalized_laguerre(f, l - f, x)
                )
    return dm


def _gcs_component_vectors(mix: GscsMixture, cutoff: int, k_max: int | None):
    """Yield (weight_k, vector_k) with vector_k the Fock expansion of
    sum_l C(k,l) sqrt(l!) (eta_tilde*)^{k-l} D(eta_tilde)|l>."""
    dm = gcs_displacement_matrix(mix.eta_tilde, cutoff)
    ratio = mix.k_ratio
    etc = mix.eta_tilde.conjugate()
    limit = k_max if k_max is not None else 300
    log_w = 0.0  # ln(ratio^k / k!)
    for k in range(limit + 1):
        if k > 0:
            if ratio <= 0.0:
                return
            log_w += math.log(ratio) - math.log(k)
        c = np.zeros(cutoff, dtype=complex)
        for l in range(min(k, cutoff - 1) + 1):
            log_c = (
                log_factorial(k)
                - log_factorial(l)
                - log_factorial(k - l)
                + 0.5 * log_factorial(l)
            )
            c[l] = math.exp(log_c) * etc ** (k - l)
        v = dm @ c
        weight = math.exp(log_w)
        yield weight, v
        # k! in |c|^2 balances the 1/k! weight; stop once contributions die
        if k > 4 and weight * float(np.vdot(v, v).real) < 1e-16:
            return
    raise TruncationError(f"GSCS k-sum failed to converge within k_max = {limit}")


def fock_density_from_gscs(
    mix: GscsMixture, cutoff: int, k_max: int | None = None, trace_tol: float = 1e-5
) -> np.ndarray:
    """Interaction-picture Fock density matrix of the GSCS mixture.

    The free e^{-i omega (m-n) t} phases are applied only when forming the
    phase distribution, never here.
    """
    r1 = abs(mix.zeta)
    phi = math.atan2(mix.zeta.imag, mix.zeta.real)
    g = squeeze_matrix(cutoff, r1, phi)
    rho_frame = np.zeros((cutoff, cutoff), dtype=complex)
    for weight, v in _gcs_component_vectors(mix, cutoff, k_max):
        rho_frame += weight * np.outer(v, v.conj())
    pref = math.exp(-mix.beta_tilde * abs(mix.eta_tilde) ** 2) / (1.0 + mix.beta_tilde)
    rho = pref * (g @ rho_frame @ g.conj().T)
    trace = float(np.trace(rho).real)
    if abs(trace - 1.0) > trace_tol:
        raise TruncationError(
            f"assembled trace {trace:.10f} misses 1 by more than {trace_tol:.1e}; "
            f"raise the Fock cutoff (currently {cutoff})"
        )
    return rho


def phase_distribution_fock(rho: np.ndarray, omega: float, t: float, grid=None) -> PhaseDistribution:
    """P(theta) = (1/2pi) <theta|rho_S|theta> for an interaction-picture Fock
    density matrix, reverting to the Schroedinger picture on the way."""
    rho = np.asarray(rho, dtype=complex)
    cutoff = rho.shape[0]
    n = np.arange(cutoff, dtype=float)
    dn = n[:, None] - n[None, :]
    rho_s = rho * np.exp(-1j * omega * dn * t)
    coeffs = {}
    for d in range(-(cutoff - 1), cutoff):
        coeffs[d] = np.trace(rho_s, offset=d) / (2.0 * math.pi)
    return distribution_from_fourier(coeffs, grid)


def default_dissipative_cutoff(mix: GscsMixture, eta0: complex) -> int:
    """Fock cutoff heuristic.

    Squeezed coherences die only geometrically, roughly as
    tanh(r1)^(cutoff/2), so the squeeze term targets a 1e-10 tail; the
    displaced-thermal occupation adds a plain pad on top.
    """
    mean_frame = mix.beta_tilde + max(abs(mix.eta_tilde), abs(eta0)) ** 2
    pad = 10.0 * (mean_frame + 1.0)
    r1 = abs(mix.zeta)
    if r1 > 0.0:
        pad += 2.0 * math.log(1e10) / -math.log(math.tanh(r1))
    return max(40, int(math.ceil(pad + 20.0)))


def _phase_dist_direct(
    mix: GscsMixture, omega: float, t: float, cutoff: int, theta: np.ndarray
) -> np.ndarray:
    """Direct evaluation of the printed phase-distribution sum, factorized
    per mixture component k; never forms the density matrix."""
    r1 = abs(mix.zeta)
    phi_z = math.atan2(mix.zeta.imag, mix.zeta.real)
    g = squeeze_matrix(cutoff, r1, phi_z)
    m = np.arange(cutoff, dtype=float)
    phases = np.exp(-1j * np.outer(m, theta + omega * t))  # e^{-i m (theta + w t)}
    total = np.zeros(len(theta))
    for weight, v in _gcs_component_vectors(mix, cutoff, None):
        psi = g @ v
        gk = psi @ phases
        total += weight * np.abs(gk) ** 2
    pref = math.exp(-mix.beta_tilde * abs(mix.eta_tilde) ** 2) / (1.0 + mix.beta_tilde)
    return pref * total / (2.0 * math.pi)


def phase_dist_osc_dissipative(
    spec: OscillatorLindbladSpec,
    eta0: complex,
    t: float,
    cutoff: int | None = None,
    grid=None,
    agreement_tol: float = 1e-8,
) -> PhaseDistribution:
    """Phase distribution of the dissipative oscillator at time t.

    Evaluated at two Fock cutoffs; disagreement beyond agreement_tol raises
    TruncationError.
    """
    mix = mixture_params(spec, t, eta0)
    if cutoff is None:
        cutoff = default_dissipative_cutoff(mix, eta0)
    theta = resolve_grid(grid)
    values = _phase_dist_direct(mix, spec.omega, t, cutoff, theta)
    check = _phase_dist_direct(mix, spec.omega, t, max(8, cutoff - 8), theta)
    dev = float(np.max(np.abs(values - check)))
    if dev > agreement_tol:
        raise TruncationError(
            f"two-cutoff disagreement {dev:.3e} at cutoffs ({cutoff}, {cutoff - 8})"
        )
    return PhaseDistribution(theta, values)
