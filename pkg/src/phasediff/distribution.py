"""Phase distribution container and the shared angular grid."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

DEFAULT_GRID_SIZE = 720


def phase_grid(n: int = DEFAULT_GRID_SIZE) -> np.ndarray:
    """Uniform angles on [0, 2pi), endpoint excluded."""
    if n < 8:
        raise ValueError(f"grid size {n} too small")
    return np.linspace(0.0, 2.0 * np.pi, n, endpoint=False)


@dataclass(frozen=True)
class PhaseDistribution:
    """Sampled phase distribution P(phi) on a uniform grid over [0, 2pi)."""

    grid: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        grid = np.asarray(self.grid, dtype=float)
        values = np.asarray(self.values, dtype=float)
        if grid.shape != values.shape or grid.ndim != 1:
            raise ValueError("grid and values must be 1-d arrays of equal length")
        object.__setattr__(self, "grid", grid)
        object.__setattr__(self, "values", values)

    @property
    def step(self) -> float:
        return 2.0 * np.pi / len(self.grid)


def resolve_grid(grid) -> np.ndarray:
    """Accept an angle array, a point count, or None (default grid)."""
    if grid is None:
        return phase_grid()
    if np.isscalar(grid):
        return phase_grid(int(grid))
    return np.asarray(grid, dtype=float)


def distribution_from_fourier(coeffs: dict[int, complex], grid) -> PhaseDistribution:
    """Build P(phi) = sum_d c_d e^{i d phi} on the grid; imaginary parts of a
    Hermitian-symmetric coefficient set cancel and are discarded."""
    phi = resolve_grid(grid)
    values = np.zeros(len(phi), dtype=complex)
    for d, c in coeffs.items():
        values += c * np.exp(1j * d * phi)
    return PhaseDistribution(phi, values.real)
