"""
Disk Quadrature and Circle Fourier Analysis

Polar Gauss-Legendre/trapezoid grids on the unit disk, uniform grids on the
circle, normalized arc-length integration, discrete Fourier coefficients and
Möbius maps. Every other engine integrates through this module.
"""

from dataclasses import dataclass
from typing import Callable

import numpy as np
from loguru import logger
from scipy.special import roots_legendre

from wolffd.core.exceptions import ArgumentError
from wolffd.engines.disk_core.poly import AnalyticPoly

ROUNDING_EPS = 1e-16
MAX_MOBIUS_SAMPLES = 1 << 20


def equispaced_angles(n_theta: int) -> np.ndarray:
    """Angles -π + 2πj/n for j = 0..n-1"""
    return -np.pi + 2.0 * np.pi * np.arange(n_theta) / n_theta


def gauss_legendre_interval(n: int, a, b):
    """Gauss-Legendre nodes and weights mapped to [a, b]; a, b may be arrays"""
    x, w = roots_legendre(n)
    a = np.asarray(a, dtype=float)[..., None]
    b = np.asarray(b, dtype=float)[..., None]
    half = 0.5 * (b - a)
    return a + half * (x + 1.0), half * w


@dataclass(frozen=True, eq=False)
class DiskGrid:
    """Tensor-product polar quadrature on the open unit disk (measure dA)"""

    n_r: int
    n_theta: int
    radii: np.ndarray
    radial_weights: np.ndarray
    angles: np.ndarray
    nodes: np.ndarray
    weights: np.ndarray

    @property
    def size(self) -> int:
        return self.nodes.size

    def as_matrix(self, values: np.ndarray) -> np.ndarray:
        """Reshape node-ordered values to (n_r, n_theta, ...)"""
        return np.reshape(values, (self.n_r, self.n_theta) + np.shape(values)[1:])


@dataclass(frozen=True, eq=False)
class BoundaryGrid:
    """Uniform nodes on the unit circle with normalized measure dσ = dt/2π"""

    n_theta: int
    angles: np.ndarray

    @property
    def weight(self) -> float:
        return 1.0 / self.n_theta

    @property
    def nodes(self) -> np.ndarray:
        return np.exp(1j * self.angles)


@dataclass(frozen=True, eq=False)
class BoundaryFunction:
    """Two-sided Fourier data f̂(n), n = -M..M"""

    coeffs: np.ndarray

    @property
    def M(self) -> int:
        return (self.coeffs.shape[0] - 1) // 2

    @property
    def frequencies(self) -> np.ndarray:
        return np.arange(-self.M, self.M + 1)

    def coeff(self, n: int):
        if abs(n) > self.M:
            return np.zeros(self.coeffs.shape[1:], dtype=complex) if self.coeffs.ndim > 1 else 0j
        return self.coeffs[n + self.M]

    @classmethod
    def from_dict(cls, data: dict) -> "BoundaryFunction":
        M = max((abs(k) for k in data), default=0)
        arr = np.zeros(2 * M + 1, dtype=complex)
        for k, v in data.items():
            arr[k + M] = v
        return cls(arr)

    def sample(self, angles: np.ndarray) -> np.ndarray:
        """f(e^{it}) at the given angles"""
        phase = np.exp(1j * np.outer(angles, self.frequencies))
        return np.tensordot(phase, self.coeffs, axes=(1, 0))


def make_polar_grid(n_r: int, n_theta: int) -> DiskGrid:
    """Gauss-Legendre in r with the Jacobian folded in, trapezoid in θ"""
    if n_r < 2 or n_theta < 4:
        raise ArgumentError(f"polar grid needs n_r >= 2 and n_theta >= 4, got ({n_r}, {n_theta})")
    r, w = gauss_legendre_interval(n_r, 0.0, 1.0)
    w = w * r
    theta = equispaced_angles(n_theta)
    nodes = (r[:, None] * np.exp(1j * theta)[None, :]).ravel()
    weights = (w[:, None] * np.full(n_theta, 2.0 * np.pi / n_theta)[None, :]).ravel()
    return DiskGrid(n_r, n_theta, r, w, theta, nodes, weights)


def make_boundary_grid(n_theta: int) -> BoundaryGrid:
    if n_theta < 1:
        raise ArgumentError(f"boundary grid needs n_theta >= 1, got {n_theta}")
    return BoundaryGrid(n_theta, equispaced_angles(n_theta))


def integrate_disk(samples, grid: DiskGrid):
    """Σ weight·sample over the grid; extra trailing axes are kept"""
    samples = np.asarray(samples)
    if samples.shape[0] != grid.size:
        raise ArgumentError(f"expected {grid.size} samples, got {samples.shape[0]}")
    return np.tensordot(grid.weights, samples, axes=(0, 0))


def integrate_boundary(samples, grid: BoundaryGrid):
    """Mean of the samples (dσ is normalized)"""
    samples = np.asarray(samples)
    if samples.shape[0] != grid.n_theta:
        raise ArgumentError(f"expected {grid.n_theta} samples, got {samples.shape[0]}")
    return np.mean(samples, axis=0)


def fourier_coeffs(samples, M: int) -> BoundaryFunction:
    """f̂(n) = (1/K)Σ_j s_j e^{-inθ_j} on θ_j = -π + 2πj/K, n = -M..M"""
    samples = np.asarray(samples, dtype=complex)
    K = samples.shape[0]
    if M < 0 or 2 * M + 1 > K:
        raise ArgumentError(f"M={M} is too large for {K} samples")
    spectrum = np.fft.fft(samples, axis=0) / K
    n = np.arange(-M, M + 1)
    # θ_0 = -π shifts frequency n by (-1)^n
    sign = np.where(n % 2 == 0, 1.0, -1.0)
    picked = spectrum[n % K]
    return BoundaryFunction(picked * sign.reshape((-1,) + (1,) * (picked.ndim - 1)))


def mobius(a: complex, z):
    """β_a(z) = (a - z)/(1 - ā z), an involution of the disk"""
    if abs(a) >= 1.0:
        raise ArgumentError(f"Möbius parameter must satisfy |a| < 1, got {a}")
    z = np.asarray(z, dtype=complex)
    return (a - z) / (1.0 - np.conj(a) * z)


def mobius_tail_degree(a: complex, eps: float = ROUNDING_EPS) -> int:
    """Smallest k with |a|^k <= eps; 0 for a = 0"""
    if abs(a) >= 1.0:
        raise ArgumentError(f"Möbius parameter must satisfy |a| < 1, got {a}")
    if abs(a) == 0.0:
        return 0
    return int(np.ceil(np.log(eps) / np.log(abs(a))))


def compose_poly_mobius(p: AnalyticPoly, a: complex, N_out: int) -> AnalyticPoly:
    """Taylor coefficients of p∘β_a up to degree N_out"""
    # aliasing error is |a|^K times the coefficient scale
    tail = mobius_tail_degree(a)
    K = 512
    while K < 4 * (N_out + 1) or (K < MAX_MOBIUS_SAMPLES and K < N_out + 1 + tail):
        K *= 2
    if K < N_out + 1 + tail:
        logger.warning(f"Möbius composition at |a| = {abs(a):.6g} aliases at the {abs(a) ** K:.1e} level")
    angles = equispaced_angles(K)
    values = p(mobius(a, np.exp(1j * angles)))
    bf = fourier_coeffs(values, N_out)
    return AnalyticPoly(bf.coeffs[bf.M:])


def integrate_centered(func: Callable[[np.ndarray], np.ndarray], center: complex,
                       n_rho: int = 64, n_phi: int = 128) -> complex:
    """∫_D func dA in polar coordinates about an interior point.

    Rays z = c + ρe^{iφ} run from ρ = 0 to the unit circle; the factor ρ in
    dA = ρ dρ dφ absorbs 1/|z - c| singularities of the integrand.
    """
    c = complex(center)
    if abs(c) >= 1.0:
        raise ArgumentError("center must lie in the open disk")
    phi = 2.0 * np.pi * np.arange(n_phi) / n_phi
    e = np.exp(1j * phi)
    proj = np.real(np.conj(c) * e)
    rho_max = -proj + np.sqrt(proj ** 2 + 1.0 - abs(c) ** 2)
    rho, w = gauss_legendre_interval(n_rho, np.zeros(n_phi), rho_max)
    z = c + rho * e[:, None]
    vals = np.asarray(func(z), dtype=complex)
    return complex(np.sum(vals * rho * w) * 2.0 * np.pi / n_phi)
