"""Half-car inspection vehicle: modal properties, non-dimensional ratios,
static loads, and design-space sampling.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional

import numpy as np

from .beam import GRAVITY, BeamBridge
from .errors import ConfigError

#: Properties held fixed while mass and stiffness are optimized.
DEFAULT_AXLE_DAMPING = 1.0e4      # N s/m per axle
DEFAULT_PITCH_INERTIA = 93234.0   # kg m^2
DEFAULT_AXLE_OFFSET = 2.375       # m, center of mass to either axle


@dataclass(frozen=True)
class HalfCarVehicle:
    """Two-DOF half-car (bounce + pitch), front = axle 1, rear = axle 2."""

    total_mass: float                 # m_v, kg
    axle_stiffness: tuple[float, float]   # k_v1, k_v2, N/m
    axle_damping: tuple[float, float] = (DEFAULT_AXLE_DAMPING, DEFAULT_AXLE_DAMPING)
    pitch_inertia: float = DEFAULT_PITCH_INERTIA
    axle_offsets: tuple[float, float] = (DEFAULT_AXLE_OFFSET, DEFAULT_AXLE_OFFSET)
    speed_mean: float = 2.0           # m/s
    speed_std: float = 0.2            # m/s
    name: str = ""

    def __post_init__(self) -> None:
        if self.total_mass <= 0.0 or self.pitch_inertia <= 0.0:
            raise ConfigError("vehicle mass and pitch inertia must be positive")
        if min(self.axle_stiffness) <= 0.0 or min(self.axle_damping) <= 0.0:
            raise ConfigError("axle stiffness and damping must be positive")
        if min(self.axle_offsets) < 0.0 or sum(self.axle_offsets) <= 0.0:
            raise ConfigError("wheelbase d1 + d2 must be positive")
        if self.speed_mean <= 0.0 or self.speed_std < 0.0:
            raise ConfigError("speed_mean must be positive and speed_std non-negative")

    @classmethod
    def symmetric(cls, total_mass: float, axle_stiffness: float, **kw) -> "HalfCarVehicle":
        """Vehicle with identical front/rear tyre-suspension systems."""
        return cls(total_mass=total_mass, axle_stiffness=(axle_stiffness, axle_stiffness), **kw)

    @property
    def wheelbase(self) -> float:
        return self.axle_offsets[0] + self.axle_offsets[1]

    @property
    def axle_masses(self) -> tuple[float, float]:
        """Static mass split: m_v1 = m_v d2/d, m_v2 = m_v d1/d."""
        d1, d2 = self.axle_offsets
        d = self.wheelbase
        return self.total_mass * d2 / d, self.total_mass * d1 / d


def vehicle_frequencies(vehicle: HalfCarVehicle) -> tuple[float, float, float]:
    """(f_bounce, f_pitch, f_z) in Hz; f_z is the lowest vehicle natural frequency.

    For the symmetric configuration bounce and pitch decouple and closed forms
    apply; otherwise the 2x2 (z_v, theta_v) eigenproblem is solved.
    """
    k1, k2 = vehicle.axle_stiffness
    d1, d2 = vehicle.axle_offsets
    m, iv = vehicle.total_mass, vehicle.pitch_inertia
    if np.isclose(k1, k2) and np.isclose(d1, d2):
        f_bounce = np.sqrt((k1 + k2) / m) / (2.0 * np.pi)
        f_pitch = np.sqrt((k1 * d1**2 + k2 * d2**2) / iv) / (2.0 * np.pi)
    else:
        kzz = k1 + k2
        kzt = k1 * d1 - k2 * d2
        ktt = k1 * d1**2 + k2 * d2**2
        kmat = np.array([[kzz, kzt], [kzt, ktt]])
        mmat = np.diag([m, iv])
        lam = np.linalg.eigvalsh(np.linalg.inv(mmat) @ kmat)
        f_lo, f_hi = np.sqrt(np.sort(lam)) / (2.0 * np.pi)
        return float(f_hi), float(f_lo), float(f_lo)
    return float(f_bounce), float(f_pitch), float(min(f_bounce, f_pitch))


def mass_ratio(vehicle: HalfCarVehicle, bridge: BeamBridge) -> float:
    """mu = m_v / (mu_b * L)."""
    return vehicle.total_mass / bridge.total_mass


def frequency_ratio(vehicle: HalfCarVehicle, f_b1: float) -> float:
    """beta = f_z / f_b1."""
    return vehicle_frequencies(vehicle)[2] / f_b1


def static_axle_loads(vehicle: HalfCarVehicle) -> tuple[float, float]:
    """Static contact forces (N_front, N_rear) = ((d2/d) m_v g, (d1/d) m_v g)."""
    d1, d2 = vehicle.axle_offsets
    d = vehicle.wheelbase
    return vehicle.total_mass * GRAVITY * d2 / d, vehicle.total_mass * GRAVITY * d1 / d


def sample_speed(vehicle: HalfCarVehicle, seed) -> float:
    """One crossing speed from Normal(mean, std), truncated below at 0.5 m/s."""
    if vehicle.speed_std == 0.0:
        return vehicle.speed_mean
    rng = np.random.default_rng(seed)
    while True:
        v = rng.normal(vehicle.speed_mean, vehicle.speed_std)
        if v >= 0.5:
            return float(v)


@dataclass(frozen=True)
class DesignSpace:
    """Mass/stiffness box the optimizer explores."""

    mass_range: tuple[float, float] = (50.0, 20000.0)
    stiffness_range: tuple[float, float] = (0.03e6, 8.0e6)

    def __post_init__(self) -> None:
        for lo, hi in (self.mass_range, self.stiffness_range):
            if not 0.0 < lo < hi:
                raise ConfigError("design-space ranges must satisfy 0 < lower < upper")

    def normalize(self, points: np.ndarray) -> np.ndarray:
        """Map (m_v, k_v) rows to the unit square."""
        pts = np.atleast_2d(np.asarray(points, dtype=float))
        lo = np.array([self.mass_range[0], self.stiffness_range[0]])
        hi = np.array([self.mass_range[1], self.stiffness_range[1]])
        return (pts - lo) / (hi - lo)

    def denormalize(self, unit: np.ndarray) -> np.ndarray:
        unit = np.atleast_2d(np.asarray(unit, dtype=float))
        lo = np.array([self.mass_range[0], self.stiffness_range[0]])
        hi = np.array([self.mass_range[1], self.stiffness_range[1]])
        return lo + unit * (hi - lo)


@dataclass(frozen=True)
class DesignPoint:
    """One candidate (m_v, k_v) with its non-dimensional coordinates."""

    total_mass: float
    axle_stiffness: float
    mu: float = float("nan")
    beta: float = float("nan")

    def to_vehicle(self, template: Optional[HalfCarVehicle] = None) -> HalfCarVehicle:
        if template is None:
            return HalfCarVehicle.symmetric(self.total_mass, self.axle_stiffness)
        return replace(template, total_mass=self.total_mass,
                       axle_stiffness=(self.axle_stiffness, self.axle_stiffness))


def design_point(m_v: float, k_v: float, bridge: BeamBridge, f_b1: float) -> DesignPoint:
    veh = HalfCarVehicle.symmetric(m_v, k_v)
    return DesignPoint(m_v, k_v, mu=mass_ratio(veh, bridge),
                       beta=frequency_ratio(veh, f_b1))


def lhs_sample(space: DesignSpace, count: int, seed) -> np.ndarray:
    """Latin-hypercube sample of (m_v, k_v): one point per equal-width stratum
    per dimension, strata randomly paired. Returns a (count, 2) array."""
    if count < 1:
        raise ConfigError("count must be >= 1")
    rng = np.random.default_rng(seed)
    unit = np.empty((count, 2))
    for dim in range(2):
        unit[:, dim] = (rng.permutation(count) + rng.uniform(size=count)) / count
    return space.denormalize(unit)


def derive_matched_vehicle(mu: float, beta: float, bridge: BeamBridge, f_b1: float,
                           template: Optional[HalfCarVehicle] = None,
                           name: str = "") -> HalfCarVehicle:
    """Vehicle with target (mu, beta) on a given bridge.

    m_v = mu * mu_b * L. Both modal frequencies scale as sqrt(k), so the
    stiffness matching f_z = beta * f_b1 under the lowest-frequency convention
    is k = (2 pi f_z)^2 * max(m_v/2, I_v/(d1^2 + d2^2)).
    """
    tpl = template or HalfCarVehicle.symmetric(1000.0, 1.0e6)
    m_v = mu * bridge.total_mass
    d1, d2 = tpl.axle_offsets
    omega = 2.0 * np.pi * beta * f_b1
    k_v = omega**2 * max(m_v / 2.0, tpl.pitch_inertia / (d1**2 + d2**2))
    return replace(tpl, total_mass=m_v, axle_stiffness=(k_v, k_v), name=name)
