"""Functionals of phase distributions: normalization audit, dispersion,
and parameter sweeps.

On a uniform periodic grid the trapezoid rule is a plain Riemann sum and
integrates trigonometric polynomials of degree < grid size exactly, so the
first circular moment below is spectrally accurate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from .distribution import PhaseDistribution


def integrate_distribution(p: PhaseDistribution) -> float:
    """Trapezoidal integral of P over [0, 2pi)."""
    return float(np.sum(p.values) * p.step)


def first_circular_moment(p: PhaseDistribution) -> complex:
    """Integral of e^{-i phi} P(phi) d phi on the uniform grid."""
    return complex(np.sum(np.exp(-1j * p.grid) * p.values) * p.step)


def dispersion(p: PhaseDistribution, norm_tol: float = 1e-6) -> float:
    """Phase dispersion D = 1 - |first circular moment|^2.

    Origin-independent; 1 for the uniform distribution, -> 0 for a narrow
    peak.  Input must be normalized within norm_tol.
    """
    total = integrate_distribution(p)
    if abs(total - 1.0) > norm_tol:
        raise ValueError(f"distribution integrates to {total}, not 1")
    return 1.0 - abs(first_circular_moment(p)) ** 2


@dataclass(frozen=True)
class DispersionCurve:
    parameter_name: str
    points: tuple[tuple[float, float], ...]

    def parameters(self) -> np.ndarray:
        return np.array([x for x, _ in self.points])

    def values(self) -> np.ndarray:
        return np.array([d for _, d in self.points])


def dispersion_sweep(
    family: Callable[[float], PhaseDistribution],
    parameter_grid: Iterable[float],
    parameter_name: str = "parameter",
) -> DispersionCurve:
    """Evaluate D along a one-parameter family of distributions."""
    points = tuple((float(x), dispersion(family(x))) for x in parameter_grid)
    return DispersionCurve(parameter_name=parameter_name, points=points)
