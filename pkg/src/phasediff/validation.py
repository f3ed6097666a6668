"""Self-check suite: closed forms against independent brute-force oracles.

Every check reports (name, tolerance, deviation, passed).  The oracles are
deliberately redundant implementations: direct master-equation integration,
polar and frequency quadrature, and matrix exponentials.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm

from .bath_kernels import HighTemperature, QndBathSpec, ZeroTemperature, gamma_qnd
from .dissipative_oscillator import (
    fock_density_from_gscs,
    mixture_params,
    oscillator_spec,
    phase_dist_osc_dissipative,
    phase_distribution_fock,
)
from .dissipative_qubit import propagate_qubit, qubit_spec
from .distribution import phase_grid
from .figures import RunConfig, run_figure
from .halfint import HalfInteger, m_range
from .oracle import (
    gamma_by_quadrature,
    integrate_lindblad_oscillator,
    integrate_lindblad_qubit,
    phase_dist_by_quadrature,
)
from .phase_stats import dispersion, integrate_distribution
from .qnd_phase import (
    AtomicCoherentParams,
    atomic_coherent_density,
    phase_dist_coherent_halfspin,
    phase_distribution_atomic,
    qnd_evolve,
)
from .special_functions import squeeze_matrix, wigner_d_half_pi


@dataclass(frozen=True)
class CheckResult:
    name: str
    tolerance: float
    deviation: float

    @property
    def passed(self) -> bool:
        return self.deviation <= self.tolerance


def _check_wigner_d_orthogonality() -> CheckResult:
    j = HalfInteger.of(5)
    ms = m_range(j)
    d = np.array([[wigner_d_half_pi(j, n, p) for p in ms] for n in ms])
    dev = float(np.max(np.abs(d.T @ d - np.eye(len(ms)))))
    return CheckResult("wigner-d rotation matrix orthogonality (j=5)", 1e-12, dev)


def _check_squeeze_vs_expm() -> CheckResult:
    r1, phi, big, window = 0.5, 0.7, 140, 12
    n = np.arange(big)
    ad2 = np.diag(np.sqrt((n[:-2] + 1) * (n[:-2] + 2)), -2).astype(complex)
    zeta = r1 * complex(math.cos(phi), math.sin(phi))
    gen = 0.5 * (zeta.conjugate() * ad2.conj().T - zeta * ad2)
    oracle = expm(gen)[:window, :window]
    g = squeeze_matrix(window, r1, phi)
    dev = float(np.max(np.abs(g - oracle)))
    return CheckResult("squeeze matrix element vs matrix exponential", 1e-10, dev)


def _check_gamma_kernel() -> CheckResult:
    worst = 0.0
    for regime in (ZeroTemperature(), HighTemperature(T=100.0)):
        for r, a in ((0.0, 0.0), (1.0, 0.0), (1.0, 0.05)):
            spec = QndBathSpec(gamma0=0.025, omega_c=100.0, r=r, a=a, regime=regime)
            for t in (0.2, 1.0):
                exact = gamma_qnd(t, spec)
                quad = gamma_by_quadrature(t, spec)
                worst = max(worst, abs(exact - quad) / max(1e-30, abs(exact)))
    return CheckResult("dephasing kernel closed form vs quadrature", 1e-6, worst)


def _check_qubit_propagator() -> CheckResult:
    rho0 = np.array([[0.3, 0.25 - 0.1j], [0.25 + 0.1j, 0.7]], dtype=complex)
    worst = 0.0
    for r, T, g0, t in (
        (0.0, 0.0, 0.25, 1.5),
        (1.0, 0.0, 0.25, 0.7),
        (2.0, 300.0, 0.25, 0.3),
        (0.5, 100.0, 0.0025, 5.0),
    ):
        spec = qubit_spec(1.0, g0, r, math.pi / 8, T)
        closed = propagate_qubit(rho0, spec, t)
        oracle = integrate_lindblad_qubit(rho0, spec, t)
        worst = max(worst, float(np.max(np.abs(closed - oracle))))
    return CheckResult("qubit propagator closed form vs integration", 1e-8, worst)


def _check_oscillator_mixture() -> CheckResult:
    cutoff = 60
    worst = 0.0
    for r, T, eta0, t in ((1.0, 0.0, 1.0, 0.5), (0.0, 1.0, 1.0, 0.8)):
        spec = oscillator_spec(1.0, 0.25, r, 0.0, T)
        mix0 = mixture_params(spec, 0.0, eta0)
        rho0 = fock_density_from_gscs(mix0, cutoff, trace_tol=1e-4)
        oracle = integrate_lindblad_oscillator(rho0, spec, t, cutoff, leakage_tol=1e-5)
        mix = mixture_params(spec, t, eta0)
        closed = fock_density_from_gscs(mix, cutoff, trace_tol=1e-4)
        dev = 0.5 * float(np.sum(np.abs(np.linalg.eigvalsh(closed - oracle))))
        worst = max(worst, dev)
    return CheckResult("oscillator mixture state vs integration (trace distance)", 1e-4, worst)


def _check_atomic_closed_form() -> CheckResult:
    state = AtomicCoherentParams(math.pi / 3, 0.4)
    rho = qnd_evolve(atomic_coherent_density(state, 0.5), 1.0, 0.3, 0.0, 0.02)
    grid = phase_grid(180)
    machinery = phase_distribution_atomic(rho, grid)
    closed = phase_dist_coherent_halfspin(state, 1.0, 0.3, 0.02, grid)
    dev = float(np.max(np.abs(machinery.values - closed.values)))
    return CheckResult("single-atom closed form vs Beta machinery", 1e-13, dev)


def _check_atomic_quadrature() -> CheckResult:
    from .figures import SCENARIOS
    from .qnd_phase import AtomicSqueezedParams, atomic_squeezed_density

    p = SCENARIOS["fig1"].defaults
    rho0 = atomic_squeezed_density(AtomicSqueezedParams(p["j"], p["p"], p["Theta"]))
    rho_t = qnd_evolve(rho0, p["omega"], 0.1, 0.001, 0.005)
    grid = phase_grid(90)
    exact = phase_distribution_atomic(rho_t, grid)
    quad = phase_dist_by_quadrature(rho_t, grid)
    dev = float(np.max(np.abs(exact.values - quad.values)))
    return CheckResult("ten-atom distribution vs polar quadrature", 1e-8, dev)


def _check_dissipative_phase_dist() -> CheckResult:
    spec = oscillator_spec(1.0, 0.025, 1.0, 0.0, 0.0)
    grid = phase_grid(120)
    t = 0.1
    direct = phase_dist_osc_dissipative(spec, 1.0, t, grid=grid)
    mix = mixture_params(spec, t, 1.0)
    rho = fock_density_from_gscs(mix, 130)
    assembled = phase_distribution_fock(rho, spec.omega, t, grid)
    dev = float(np.max(np.abs(direct.values - assembled.values)))
    return CheckResult("dissipative oscillator direct sum vs density assembly", 1e-6, dev)


def _check_normalization() -> CheckResult:
    worst = 0.0
    for name in ("fig1", "fig2", "fig4"):
        fd = run_figure(RunConfig(name, grid=360))
        for _label, p in fd.distributions:
            worst = max(worst, abs(integrate_distribution(p) - 1.0))
    return CheckResult("normalization of scenario distributions", 1e-10, worst)


def _check_dispersion_basics() -> CheckResult:
    from .distribution import PhaseDistribution

    grid = phase_grid(360)
    uniform = PhaseDistribution(grid, np.full(len(grid), 1.0 / (2.0 * math.pi)))
    dev = abs(dispersion(uniform) - 1.0)
    return CheckResult("dispersion of the uniform distribution", 1e-12, dev)


QUICK_CHECKS = (
    _check_wigner_d_orthogonality,
    _check_gamma_kernel,
    _check_qubit_propagator,
    _check_atomic_closed_form,
    _check_dispersion_basics,
)
FULL_EXTRA_CHECKS = (
    _check_squeeze_vs_expm,
    _check_oscillator_mixture,
    _check_atomic_quadrature,
    _check_dissipative_phase_dist,
    _check_normalization,
)


def run_validation(quick: bool = False) -> list[CheckResult]:
    checks = QUICK_CHECKS if quick else QUICK_CHECKS + FULL_EXTRA_CHECKS
    return [check() for check in checks]
