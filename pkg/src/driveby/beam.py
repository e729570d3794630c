"""Finite-element model of a simply supported Euler-Bernoulli beam bridge.

Hermite-cubic elements with consistent mass, optional crack damage as a local
flexural-rigidity reduction, and Rayleigh damping fitted on the first two modes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np
import scipy.linalg

from .errors import AssemblyError, GeometryError, NumericalError, SpanError

GRAVITY = 9.81  # m/s^2


@dataclass(frozen=True)
class CrackDamage:
    """Open crack at ``location`` with depth ``depth_ratio`` of the section height.

    Flexural rigidity drops to E*I_c at the crack and recovers linearly to the
    intact value over 1.5 section heights on each side.
    """

    location: float          # m along the span
    depth_ratio: float       # crack depth / section height, in [0, 1)

    def validate(self, span_length: float) -> None:
        if not 0.0 < self.location < span_length:
            raise GeometryError(f"crack location {self.location} outside span (0, {span_length})")
        if not 0.0 <= self.depth_ratio < 1.0:
            raise GeometryError(f"crack depth ratio {self.depth_ratio} outside [0, 1)")


@dataclass(frozen=True)
class BeamBridge:
    """Simply supported beam bridge definition (SI units)."""

    span_length: float       # L, m
    youngs_modulus: float    # E, N/m^2
    area: float              # A, m^2
    inertia: float           # I_o, m^4
    mass_per_length: float   # mu_b, kg/m
    damping_ratio: float     # xi, dimensionless
    element_count: int = 50
    damage: Optional[CrackDamage] = None
    stiffness_scale: float = 1.0   # uniform EI multiplier (non-crack damage fixtures)

    def __post_init__(self) -> None:
        for name in ("span_length", "youngs_modulus", "area", "inertia", "mass_per_length"):
            if getattr(self, name) <= 0.0:
                raise GeometryError(f"{name} must be positive, got {getattr(self, name)}")
        if not 0.0 <= self.damping_ratio < 1.0:
            raise GeometryError(f"damping_ratio must lie in [0, 1), got {self.damping_ratio}")
        if self.element_count < 10:
            raise GeometryError(f"element_count must be >= 10, got {self.element_count}")
        if self.stiffness_scale <= 0.0:
            raise GeometryError(f"stiffness_scale must be positive, got {self.stiffness_scale}")
        if self.damage is not None:
            self.damage.validate(self.span_length)

    @property
    def total_mass(self) -> float:
        return self.mass_per_length * self.span_length

    def analytic_frequency(self, mode: int = 1) -> float:
        """Closed-form natural frequency (Hz) of the undamaged simply supported beam."""
        L, stiff = self.span_length, self.youngs_modulus * self.inertia * self.stiffness_scale
        return (mode**2 * np.pi / (2.0 * L**2)) * np.sqrt(stiff / self.mass_per_length)


def equivalent_section(bridge: BeamBridge) -> tuple[float, float]:
    """Equivalent rectangular section (height h, width b) matching A and I_o.

    The crack model needs h and b, which bridge tables do not list; a rectangle
    with b*h = A and b*h^3/12 = I_o is uniquely determined.
    """
    if bridge.area <= 0.0 or bridge.inertia <= 0.0:
        raise GeometryError("section recovery needs positive area and inertia")
    h = float(np.sqrt(12.0 * bridge.inertia / bridge.area))
    b = bridge.area / h
    return h, b


def flexural_rigidity(bridge: BeamBridge, x: np.ndarray) -> np.ndarray:
    """E*I(x) along the span, including the crack notch profile when present."""
    x = np.asarray(x, dtype=float)
    ei = np.full_like(x, bridge.youngs_modulus * bridge.inertia)
    if bridge.damage is not None and bridge.damage.depth_ratio > 0.0:
        h, _ = equivalent_section(bridge)
        ei_crack = bridge.youngs_modulus * bridge.inertia * (1.0 - bridge.damage.depth_ratio) ** 3
        half_extent = 1.5 * h
        dist = np.abs(x - bridge.damage.location)
        ramp = np.clip(dist / half_extent, 0.0, 1.0)
        ei = ei_crack + (ei - ei_crack) * ramp
    return ei * bridge.stiffness_scale


def hermite_shape(s: float, le: float) -> np.ndarray:
    """Hermite cubic shape functions at local coordinate s = xi/le in [0, 1]."""
    return np.array([
        1.0 - 3.0 * s**2 + 2.0 * s**3,
        le * (s - 2.0 * s**2 + s**3),
        3.0 * s**2 - 2.0 * s**3,
        le * (-(s**2) + s**3),
    ])


def _element_stiffness(ei: float, le: float) -> np.ndarray:
    c = ei / le**3
    return c * np.array([
        [12.0, 6.0 * le, -12.0, 6.0 * le],
        [6.0 * le, 4.0 * le**2, -6.0 * le, 2.0 * le**2],
        [-12.0, -6.0 * le, 12.0, -6.0 * le],
        [6.0 * le, 2.0 * le**2, -6.0 * le, 4.0 * le**2],
    ])


def _element_mass(mu: float, le: float) -> np.ndarray:
    c = mu * le / 420.0
    return c * np.array([
        [156.0, 22.0 * le, 54.0, -13.0 * le],
        [22.0 * le, 4.0 * le**2, 13.0 * le, -3.0 * le**2],
        [54.0, 13.0 * le, 156.0, -22.0 * le],
        [-13.0 * le, -3.0 * le**2, -22.0 * le, 4.0 * le**2],
    ])


@dataclass
class AssembledSystem:
    """Constrained global matrices of the beam plus bookkeeping for coupling.

    Free DOFs exclude the transverse displacement at both supports; rotations
    stay free. Immutable after assembly (treat arrays as read-only).
    """

    bridge: BeamBridge
    mass: np.ndarray           # M_b, (n, n)
    stiffness: np.ndarray      # K_b, (n, n)
    damping: np.ndarray        # C_b = a0*M_b + a1*K_b
    rayleigh: tuple[float, float]
    element_length: float
    dof_map: np.ndarray        # (n_e, 4) global free-DOF index per element slot, -1 if constrained
    n_free: int
    _freqs: np.ndarray = field(default=None, repr=False)

    @property
    def span_length(self) -> float:
        return self.bridge.span_length

    def shape_vector(self, x: float) -> np.ndarray:
        """Interpolation vector u_b(x): u_b(x)^T Z_b is the deflection at x."""
        L = self.bridge.span_length
        if not 0.0 <= x <= L:
            raise SpanError(f"x = {x} outside [0, {L}]")
        le = self.element_length
        e = min(int(x / le), self.bridge.element_count - 1)
        s = x / le - e
        shape = hermite_shape(s, le)
        out = np.zeros(self.n_free)
        for k, dof in enumerate(self.dof_map[e]):
            if dof >= 0:
                out[dof] += shape[k]
        return out

    def uniform_load_vector(self, w: float) -> np.ndarray:
        """Consistent nodal load vector for a uniform transverse load w (N/m)."""
        le = self.element_length
        fe = w * np.array([le / 2.0, le**2 / 12.0, le / 2.0, -(le**2) / 12.0])
        f = np.zeros(self.n_free)
        for e in range(self.bridge.element_count):
            for k, dof in enumerate(self.dof_map[e]):
                if dof >= 0:
                    f[dof] += fe[k]
        return f


def assemble(bridge: BeamBridge) -> AssembledSystem:
    """Assemble constrained M, C, K with the crack profile sampled at element midpoints."""
    n_e = bridge.element_count
    le = bridge.span_length / n_e
    n_global = 2 * (n_e + 1)
    constrained = {0, 2 * n_e}
    free_index = np.full(n_global, -1, dtype=int)
    idx = 0
    for g in range(n_global):
        if g not in constrained:
            free_index[g] = idx
            idx += 1
    n_free = idx

    midpoints = (np.arange(n_e) + 0.5) * le
    ei = flexural_rigidity(bridge, midpoints)

    M = np.zeros((n_free, n_free))
    K = np.zeros((n_free, n_free))
    dof_map = np.zeros((n_e, 4), dtype=int)
    m_e = _element_mass(bridge.mass_per_length, le)
    for e in range(n_e):
        k_e = _element_stiffness(ei[e], le)
        gdofs = np.array([2 * e, 2 * e + 1, 2 * e + 2, 2 * e + 3])
        fdofs = free_index[gdofs]
        dof_map[e] = fdofs
        for a in range(4):
            if fdofs[a] < 0:
                continue
            for b in range(4):
                if fdofs[b] < 0:
                    continue
                K[fdofs[a], fdofs[b]] += k_e[a, b]
                M[fdofs[a], fdofs[b]] += m_e[a, b]

    try:
        omega = _lowest_omegas(K, M, 2)
    except Exception as exc:  # pragma: no cover - defensive
        raise AssemblyError(f"constrained system not solvable: {exc}") from exc
    if omega[0] <= 0.0:
        raise AssemblyError("constrained stiffness is singular (zero first eigenvalue)")

    xi = bridge.damping_ratio
    w1, w2 = omega
    a0 = 2.0 * xi * w1 * w2 / (w1 + w2)
    a1 = 2.0 * xi / (w1 + w2)
    C = a0 * M + a1 * K

    return AssembledSystem(
        bridge=bridge, mass=M, stiffness=K, damping=C, rayleigh=(a0, a1),
        element_length=le, dof_map=dof_map, n_free=n_free,
    )


def _lowest_omegas(K: np.ndarray, M: np.ndarray, count: int) -> np.ndarray:
    vals = scipy.linalg.eigh(K, M, eigvals_only=True, subset_by_index=[0, count - 1])
    return np.sqrt(np.maximum(vals, 0.0))


def natural_frequencies(system: AssembledSystem, count: int = 3) -> np.ndarray:
    """Lowest ``count`` natural frequencies in Hz, ascending."""
    if not 1 <= count <= system.n_free:
        raise ValueError(f"count must lie in [1, {system.n_free}]")
    try:
        omega = _lowest_omegas(system.stiffness, system.mass, count)
    except scipy.linalg.LinAlgError as exc:
        cond = np.linalg.cond(system.stiffness)
        raise NumericalError(f"eigen-solver failed (cond(K) = {cond:.3e}): {exc}") from exc
    return omega / (2.0 * np.pi)


def mode_shape(system: AssembledSystem, mode: int = 1) -> np.ndarray:
    """Mass-normalized eigenvector of the requested mode (1-based)."""
    vals, vecs = scipy.linalg.eigh(system.stiffness, system.mass,
                                   subset_by_index=[mode - 1, mode - 1])
    phi = vecs[:, 0]
    return phi / np.sqrt(phi @ system.mass @ phi)


def static_deflection(system: AssembledSystem, load: np.ndarray) -> np.ndarray:
    """Nodal solution of K_b Z = load."""
    try:
        return scipy.linalg.solve(system.stiffness, load, assume_a="pos")
    except scipy.linalg.LinAlgError as exc:
        raise NumericalError(f"static solve failed: {exc}") from exc
