"""
Cauchy Transform and the Singular Operator T

Closed forms on finite monomial expansions w(u) = Σ a_{nm} uⁿ ū^m:

    ŵ(z)  = -(1/π)∫_D w(u)/(u - z) dA(u)
    Tf(λ) = ∫_D f(z)/((z - λ)(1 - z λ̄)) dA(z)

together with the rotation decomposition f = Σ_l f_l(r)e^{ilθ}, the radial
operators T_l on L²([0,1], r dr) and centred-quadrature oracles. dA is
Lebesgue area, so ‖1‖²_A = π and ‖f‖²_A = 2π Σ_l ∫|f_l|² r dr.
"""

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Tuple, Union

import numpy as np

from wolffd.core.exceptions import ArgumentError
from wolffd.engines.disk_core import DiskGrid, gauss_legendre_interval, integrate_centered, integrate_disk

RADIAL_QUAD_NODES = 64


@dataclass(frozen=True, eq=False)
class MonomialExpansion:
    """Finite sum Σ a_{nm} uⁿ ū^m"""

    terms: Dict[Tuple[int, int], complex] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (n, m), a in dict(self.terms).items():
            if n < 0 or m < 0:
                raise ArgumentError(f"monomial exponents must be nonnegative, got ({n}, {m})")
            if a != 0:
                clean[(int(n), int(m))] = complex(a)
        object.__setattr__(self, "terms", clean)

    @classmethod
    def monomial(cls, n: int, m: int, a: complex = 1.0) -> "MonomialExpansion":
        return cls({(n, m): a})

    @classmethod
    def from_list(cls, items) -> "MonomialExpansion":
        """[[n, m, re, im], ...]"""
        return cls({(int(it[0]), int(it[1])): complex(it[2], it[3]) for it in items})

    def __call__(self, u):
        u = np.asarray(u, dtype=complex)
        out = np.zeros_like(u)
        ub = np.conj(u)
        for (n, m), a in self.terms.items():
            out = out + a * u ** n * ub ** m
        return out

    def __add__(self, other: "MonomialExpansion") -> "MonomialExpansion":
        terms = dict(self.terms)
        for key, a in other.terms.items():
            terms[key] = terms.get(key, 0.0) + a
        return MonomialExpansion(terms)

    def scale(self, c: complex) -> "MonomialExpansion":
        return MonomialExpansion({k: a * c for k, a in self.terms.items()})

    @property
    def max_exponent(self) -> int:
        return max((max(k) for k in self.terms), default=0)

    def area_norm_sq(self) -> float:
        """‖w‖²_A in closed form through the rotation decomposition"""
        return 2.0 * np.pi * sum(p.norm_sq() for p in rotation_decompose(self))


@dataclass(frozen=True, eq=False)
class RadialProfile:
    """f_l(r) = Σ_p c_p r^p for the angular frequency l"""

    l: int
    powers: np.ndarray
    coeffs: np.ndarray

    def __call__(self, r):
        r = np.asarray(r, dtype=float)
        out = np.zeros(r.shape, dtype=complex)
        for p, c in zip(self.powers, self.coeffs):
            out = out + c * r ** p
        return out

    def norm_sq(self) -> float:
        """∫₀¹ |f_l|² r dr"""
        P = self.powers[:, None] + self.powers[None, :] + 2.0
        return float(np.real(np.sum(np.outer(self.coeffs, np.conj(self.coeffs)) / P)))


Profile = Union[RadialProfile, Callable[[np.ndarray], np.ndarray]]


def _as_array_input(z):
    scalar = np.ndim(z) == 0
    return np.asarray(z, dtype=complex), scalar


def _finish(values, scalar: bool):
    return complex(values) if scalar else values


def cauchy_transform(w: MonomialExpansion, z):
    """Σ a_{nm}(zⁿ z̄^{m+1} - [n>m] z^{n-m-1})/(m+1)"""
    z, scalar = _as_array_input(z)
    zb = np.conj(z)
    out = np.zeros_like(z)
    for (n, m), a in w.terms.items():
        term = z ** n * zb ** (m + 1)
        if n > m:
            term = term - z ** (n - m - 1)
        out = out + a * term / (m + 1)
    return _finish(out, scalar)


def beurling_derivative(w: MonomialExpansion, z):
    """∂_z of the closed-form Cauchy transform"""
    z, scalar = _as_array_input(z)
    if np.any(np.abs(z) >= 1.0):
        raise ArgumentError("beurling_derivative needs |z| < 1")
    zb = np.conj(z)
    out = np.zeros_like(z)
    for (n, m), a in w.terms.items():
        term = np.zeros_like(z)
        if n > 0:
            term = n * z ** (n - 1) * zb ** (m + 1)
        if n - m - 1 > 0:
            term = term - (n - m - 1) * z ** (n - m - 2)
        out = out + a * term / (m + 1)
    return _finish(out, scalar)


def dbar_defect(w: MonomialExpansion, z: complex, step: float = 1e-4) -> float:
    """|∂̄ŵ(z) - w(z)| with ∂̄ = ½(∂_x + i∂_y) by central differences"""
    z = complex(z)
    if abs(z) + step >= 1.0:
        raise ArgumentError("dbar_defect needs |z| + step < 1")
    dx = (cauchy_transform(w, z + step) - cauchy_transform(w, z - step)) / (2 * step)
    dy = (cauchy_transform(w, z + 1j * step) - cauchy_transform(w, z - 1j * step)) / (2 * step)
    return float(abs(0.5 * (dx + 1j * dy) - w(z)))


def T_apply(f: MonomialExpansion, lam):
    """Closed form of Tf(λ) monomial by monomial.

    l = n - m ≥ 1:  2π λ^{l-1} Σ_{k≤m} |λ|^{2k} / (2m+2)
    l ≤ 0:          2π λ̄^{1-l} Σ_{k<n} |λ|^{2k} / (2m+2)
    """
    lam, scalar = _as_array_input(lam)
    if np.any(np.abs(lam) >= 1.0):
        raise ArgumentError("T_apply needs |λ| < 1")
    rho2 = np.abs(lam) ** 2
    out = np.zeros_like(lam)
    for (n, m), a in f.terms.items():
        l = n - m
        if l >= 1:
            term = lam ** (l - 1) * sum(rho2 ** k for k in range(m + 1))
        elif n == 0:
            continue
        else:
            term = np.conj(lam) ** (1 - l) * sum(rho2 ** k for k in range(n))
        out = out + a * 2.0 * np.pi * term / (2 * m + 2)
    return _finish(out, scalar)


def cauchy_transform_quad(w: Callable, z: complex, n_rho: int = 96, n_phi: int = 192) -> complex:
    """-(1/π)∫ w(u)/(u - z) dA(u) by quadrature centred at z"""
    return -integrate_centered(lambda u: w(u) / (u - z), z, n_rho, n_phi) / np.pi


def T_apply_quad(f: Callable, lam: complex, n_rho: int = 96, n_phi: int = 192) -> complex:
    """∫ f(z)/((z - λ)(1 - zλ̄)) dA(z) by quadrature centred at λ"""
    lb = np.conj(lam)
    return integrate_centered(lambda z: f(z) / ((z - lam) * (1.0 - z * lb)), lam, n_rho, n_phi)


def rotation_decompose(f: MonomialExpansion) -> List[RadialProfile]:
    """Profiles f_l(r) = Σ_k a_{l+k,k} r^{l+2k}, sorted by l"""
    grouped: Dict[int, Dict[int, complex]] = {}
    for (n, m), a in f.terms.items():
        powers = grouped.setdefault(n - m, {})
        powers[n + m] = powers.get(n + m, 0.0) + a
    profiles = []
    for l in sorted(grouped):
        items = sorted(grouped[l].items())
        profiles.append(RadialProfile(
            l,
            np.array([p for p, _ in items], dtype=float),
            np.array([c for _, c in items], dtype=complex),
        ))
    return profiles


def _check_radius(s) -> np.ndarray:
    s = np.asarray(s, dtype=float)
    if np.any(s <= 0.0) or np.any(s >= 1.0):
        raise ArgumentError("T_l needs 0 < s < 1")
    return s


def T_l_apply(l: int, f_l: Profile, s, n_quad: int = RADIAL_QUAD_NODES):
    """Radial operator T_l at s by Gauss-Legendre on (0,s) and (s,1).

    l ≥ 1:  (1/(1-s²))∫_s^1 (s/r)^{l-1} f(r) dr
    l ≤ 0:  -(Σ_{k≤L} s^{2k})∫_0^s (r/s)^{1+L} f(r) dr + (1/(1-s²))∫_s^1 (rs)^{1+L} f(r) dr,  L = -l
    """
    scalar = np.ndim(s) == 0
    s = _check_radius(s)
    r_out, w_out = gauss_legendre_interval(n_quad, s, 1.0)
    sc = s[..., None]
    outer_scale = 1.0 / (1.0 - s ** 2)
    if l >= 1:
        val = outer_scale * np.sum(w_out * (sc / r_out) ** (l - 1) * f_l(r_out), axis=-1)
    else:
        L = -l
        r_in, w_in = gauss_legendre_interval(n_quad, 0.0 * s, s)
        S = sum(s ** (2 * k) for k in range(L + 1))
        inner = np.sum(w_in * (r_in / sc) ** (1 + L) * f_l(r_in), axis=-1)
        outer = np.sum(w_out * (r_out * sc) ** (1 + L) * f_l(r_out), axis=-1)
        val = -S * inner + outer_scale * outer
    return complex(val) if scalar else val


def rotation_identity_defect(f: MonomialExpansion, grid: DiskGrid) -> float:
    """max |Tf - 2π Σ_l e^{i(l-1)t} T_l f_l(s)| over the grid nodes"""
    nodes = grid.nodes
    s = np.abs(nodes)
    t = np.angle(nodes)
    direct = T_apply(f, nodes)
    rotated = np.zeros_like(direct)
    for profile in rotation_decompose(f):
        rotated = rotated + np.exp(1j * (profile.l - 1) * t) * T_l_apply(profile.l, profile, s)
    return float(np.max(np.abs(direct - 2.0 * np.pi * rotated)))


def fit_monomial_expansion(samples, grid: DiskGrid, degree: int) -> Tuple[MonomialExpansion, float]:
    """Frequency-wise weighted least squares for a MonomialExpansion with n, m ≤ degree.

    Returns the expansion and the relative L²(dA) residual of the fit on the grid.
    """
    samples = np.asarray(samples, dtype=complex)
    if samples.shape != (grid.size,):
        raise ArgumentError(f"expected {grid.size} scalar samples, got shape {samples.shape}")
    if degree < 0 or 2 * degree + 1 > grid.n_theta:
        raise ArgumentError(f"degree {degree} is not resolvable on {grid.n_theta} angles")
    table = grid.as_matrix(samples)
    spectrum = np.fft.fft(table, axis=1) / grid.n_theta
    sw = np.sqrt(grid.radial_weights)
    r = grid.radii
    terms: Dict[Tuple[int, int], complex] = {}
    for l in range(-degree, degree + 1):
        ks = [k for k in range(max(0, -l), degree + 1) if 0 <= l + k <= degree]
        if not ks:
            continue
        # angles start at -π
        f_l = spectrum[:, l % grid.n_theta] * (-1.0) ** abs(l)
        V = np.stack([r ** (l + 2 * k) for k in ks], axis=1)
        sol, *_ = np.linalg.lstsq(V * sw[:, None], f_l * sw, rcond=None)
        for k, a in zip(ks, sol):
            terms[(l + k, k)] = a
    fit = MonomialExpansion(terms)
    err = np.real(integrate_disk(np.abs(fit(grid.nodes) - samples) ** 2, grid))
    base = np.real(integrate_disk(np.abs(samples) ** 2, grid))
    residual = float(np.sqrt(err / base)) if base > 0 else float(np.sqrt(err))
    return fit, residual
