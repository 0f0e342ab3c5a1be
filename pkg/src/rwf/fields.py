"""Periodic spatial grid and time series containers for complex wave fields."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import numpy as np


@dataclass(frozen=True)
class Grid:
    """Uniform periodic grid on [-length/2, length/2)."""

    n: int
    length: float

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"grid needs at least one node, got n={self.n}")
        if not self.length > 0:
            raise ValueError(f"domain length must be positive, got {self.length}")

    @property
    def spacing(self) -> float:
        return self.length / self.n

    @property
    def x(self) -> np.ndarray:
        """Node positions -L/2 + i*L/n."""
        return -0.5 * self.length + self.spacing * np.arange(self.n)

    @property
    def wavenumbers(self) -> np.ndarray:
        """Spectral wavenumbers in FFT order; the k=0 mode appears exactly once."""
        return 2.0 * np.pi * np.fft.fftfreq(self.n, d=self.spacing)


def spectral_derivative(grid: Grid, values: np.ndarray, order: int = 1) -> np.ndarray:
    """Periodic spatial derivative computed in Fourier space."""
    k = grid.wavenumbers
    return np.fft.ifft((1j * k) ** order * np.fft.fft(values))


def interleave(values: np.ndarray) -> np.ndarray:
    """Complex field(s) -> real vector(s) [Re psi_0, Im psi_0, Re psi_1, ...]."""
    values = np.ascontiguousarray(values, dtype=np.complex128)
    return values.view(np.float64).reshape(values.shape[:-1] + (2 * values.shape[-1],)).copy()

def deinterleave(flat: np.ndarray) -> np.ndarray:
    """Inverse of :func:`interleave`."""
    flat = np.ascontiguousarray(flat, dtype=np.float64)
    if flat.shape[-1] % 2:
        raise ValueError("interleaved vector length must be even")
    return flat.view(np.complex128).reshape(flat.shape[:-1] + (flat.shape[-1] // 2,)).copy()


@dataclass
class FieldSeries:
    """Complex envelope snapshots on a shared grid at uniformly spaced times."""

    grid: Grid
    times: np.ndarray
    values: np.ndarray  # (n_time, grid.n) complex128
    provenance: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        self.times = np.asarray(self.times, dtype=np.float64)
        self.values = np.asarray(self.values, dtype=np.complex128)
        if self.values.ndim != 2 or self.values.shape[1] != self.grid.n:
            raise ValueError(
                f"values must be (n_time, {self.grid.n}), got {self.values.shape}"
            )
        if len(self.times) != self.values.shape[0]:
            raise ValueError("times and values disagree on the number of snapshots")
        if len(self.times) > 1:
            dt = np.diff(self.times)
            if np.any(dt <= 0):
                raise ValueError("sample times must be strictly increasing")
            if not np.allclose(dt, dt[0], rtol=1e-9, atol=1e-12):
                raise ValueError("sample times must be uniformly spaced")

    @property
    def n_time(self) -> int:
        return self.values.shape[0]

    @property
    def dt_sample(self) -> float:
        if self.n_time < 2:
            return 0.0
        return float(self.times[1] - self.times[0])

    def flattened(self) -> np.ndarray:
        """Snapshots as interleaved real/imag rows, shape (n_time, 2*grid.n)."""
        return interleave(self.values)

    def window(self, t_start: float, t_end: float) -> "FieldSeries":
        """Sub-series restricted to times in [t_start, t_end]."""
        mask = (self.times >= t_start - 1e-12) & (self.times <= t_end + 1e-12)
        if not mask.any():
            raise ValueError(f"no samples in [{t_start}, {t_end}]")
        return FieldSeries(
            self.grid, self.times[mask], self.values[mask], dict(self.provenance)
        )

    def index_at_time(self, t: float) -> int:
        """Index of the sample closest to time t (must lie within the span)."""
        if t < self.times[0] - 1e-9 or t > self.times[-1] + 1e-9:
            raise ValueError(f"time {t} outside series span [{self.times[0]}, {self.times[-1]}]")
        return int(np.argmin(np.abs(self.times - t)))
