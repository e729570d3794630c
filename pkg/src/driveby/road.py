"""ISO 8608 class-A road roughness profiles.

Spectral-representation synthesis over 0.01-10 cycles/m with a cosine end
taper so the profile vanishes at both bridge supports.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

#: Class-A displacement PSD coefficient at the reference spatial frequency.
PSD_REFERENCE = 16.0e-6          # G_d(n_0), m^3
REFERENCE_FREQUENCY = 0.1        # n_0, cycles/m
BAND = (0.01, 10.0)              # cycles/m
HARMONIC_COUNT = 2000


def psd_class_a(n: np.ndarray) -> np.ndarray:
    """Displacement PSD G_d(n) = G_d(n_0) (n/n_0)^-2."""
    return PSD_REFERENCE * (np.asarray(n) / REFERENCE_FREQUENCY) ** -2.0


@dataclass(frozen=True)
class RoadProfile:
    """Sum-of-cosines roughness realization over [0, span_length]."""

    amplitudes: np.ndarray       # per-harmonic amplitude, m
    wavenumbers: np.ndarray      # 2*pi*n_i, rad/m
    phases: np.ndarray           # rad
    span_length: float
    taper_length: float
    seed: object                 # whatever np.random.default_rng accepted

    def evaluate(self, x) -> tuple[np.ndarray, np.ndarray]:
        """(r, dr/dx) at positions x; zero outside [0, span_length]."""
        x = np.atleast_1d(np.asarray(x, dtype=float))
        r = np.zeros_like(x)
        dr = np.zeros_like(x)
        inside = (x >= 0.0) & (x <= self.span_length)
        if np.any(inside):
            xi = x[inside]
            raw = np.empty_like(xi)
            draw = np.empty_like(xi)
            slope_amp = self.amplitudes * self.wavenumbers
            chunk = 4096  # bounds the (chunk, n_harmonics) workspace
            for lo in range(0, xi.size, chunk):
                sl = slice(lo, lo + chunk)
                phase = np.outer(xi[sl], self.wavenumbers) + self.phases
                raw[sl] = np.cos(phase) @ self.amplitudes
                draw[sl] = -np.sin(phase) @ slope_amp
            w, dw = self._taper(xi)
            r[inside] = raw * w
            dr[inside] = draw * w + raw * dw
        return r, dr

    def _taper(self, x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Cosine ramp 0 -> 1 over taper_length at each end, with derivative."""
        lt, L = self.taper_length, self.span_length
        w = np.ones_like(x)
        dw = np.zeros_like(x)
        left = x < lt
        w[left] = 0.5 * (1.0 - np.cos(np.pi * x[left] / lt))
        dw[left] = 0.5 * np.pi / lt * np.sin(np.pi * x[left] / lt)
        right = x > L - lt
        w[right] = 0.5 * (1.0 - np.cos(np.pi * (L - x[right]) / lt))
        dw[right] = -0.5 * np.pi / lt * np.sin(np.pi * (L - x[right]) / lt)
        return w, dw

    def sample_columns(self, dx: float = 0.01) -> np.ndarray:
        """(x, r) columns for plotting/serialization."""
        x = np.arange(0.0, self.span_length + dx / 2.0, dx)
        r, _ = self.evaluate(x)
        return np.column_stack([x, r])


def generate(span_length: float, seed, amplitude_scale: float = 1.0) -> RoadProfile:
    """Fresh class-A realization for one crossing.

    Harmonics are log-spaced over the band; each amplitude carries the PSD mass
    of its bin, so the synthetic PSD matches G_d(n) regardless of spacing.
    ``amplitude_scale = 0`` gives a perfectly smooth road.
    """
    if span_length <= 0.0:
        raise ValueError("span_length must be positive")
    rng = np.random.default_rng(seed)
    edges = np.geomspace(BAND[0], BAND[1], HARMONIC_COUNT + 1)
    centers = np.sqrt(edges[:-1] * edges[1:])
    widths = np.diff(edges)
    amplitudes = amplitude_scale * np.sqrt(2.0 * psd_class_a(centers) * widths)
    phases = rng.uniform(0.0, 2.0 * np.pi, size=HARMONIC_COUNT)
    return RoadProfile(
        amplitudes=amplitudes,
        wavenumbers=2.0 * np.pi * centers,
        phases=phases,
        span_length=span_length,
        taper_length=min(1.0, span_length / 10.0),
        seed=seed,
    )
