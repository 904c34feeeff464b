"""
Method of rotations for sampled functions.

For w = Σ_l f_l(r)e^{ilθ} and z = s e^{it}:

    ŵ(z)    = Σ_l 2 e^{i(l-1)t} A_l(s)
    ∂_z ŵ   = Σ_l e^{i(l-2)t} [2(l-1)A_l(s)/s + f_l(s)]
    Tw(z)   = 2π Σ_l e^{i(l-1)t} (T_l f_l)(s)

with A_l(s) = ∫_0^s (r/s)^{1-l} f_l dr for l ≤ 0 and -∫_s^1 (s/r)^{l-1} f_l dr
for l ≥ 1. Profiles come from an angular FFT on rings placed at the
Gauss-Legendre nodes of (0,s) and (s,1).
"""

from concurrent.futures import ThreadPoolExecutor
from typing import Callable

import numpy as np
from loguru import logger

from wolffd.core.exceptions import ArgumentError
from wolffd.engines.disk_core import gauss_legendre_interval

KINDS = ("cauchy", "dz", "T")
CHUNK = 16


def _radial_kernels(kind: str, l: np.ndarray, s: np.ndarray, r_in: np.ndarray, r_out: np.ndarray):
    """Kernels (R, nq, K) applied to f_l on the inner and outer nodes"""
    sc = s[:, None, None]
    ri = r_in[:, :, None]
    ro = r_out[:, :, None]
    neg = l <= 0
    pos = ~neg
    if kind in ("cauchy", "dz"):
        e_in = np.where(neg, 1 - l, 0)
        e_out = np.where(pos, l - 1, 0)
        k_in = (ri / sc) ** e_in * neg
        k_out = -((sc / ro) ** e_out) * pos
        return k_in, k_out
    L = np.where(neg, -l, 0)
    S = (1.0 - sc ** (2 * (L + 1))) / (1.0 - sc ** 2)
    k_in = -S * (ri / sc) ** (1 + L) * neg
    e_out = np.where(pos, l - 1, 0)
    k_out = np.where(pos, (sc / ro) ** e_out, (ro * sc) ** (1 + L)) / (1.0 - sc ** 2)
    return k_in, k_out


def _chunk(w_func, s, angles, kind, n_quad, n_angular):
    R = s.size
    r_in, w_in = gauss_legendre_interval(n_quad, np.zeros(R), s)
    r_out, w_out = gauss_legendre_interval(n_quad, s, np.ones(R))
    rings = np.concatenate([r_in, r_out, s[:, None]], axis=1)
    theta = 2.0 * np.pi * np.arange(n_angular) / n_angular
    pts = rings[:, :, None] * np.exp(1j * theta)[None, None, :]
    vals = np.asarray(w_func(pts), dtype=complex)
    comp = vals.shape[3:]
    vals = vals.reshape(vals.shape[:3] + (-1,))
    spec = np.fft.fft(vals, axis=2) / n_angular
    l = np.rint(np.fft.fftfreq(n_angular, 1.0 / n_angular)).astype(int)
    f_in, f_out, f_s = spec[:, :n_quad], spec[:, n_quad:2 * n_quad], spec[:, 2 * n_quad]

    k_in, k_out = _radial_kernels(kind, l, s, r_in, r_out)
    A = (np.einsum("rqk,rqkc->rkc", w_in[:, :, None] * k_in, f_in)
         + np.einsum("rqk,rqkc->rkc", w_out[:, :, None] * k_out, f_out))

    if kind == "cauchy":
        phase = np.exp(1j * np.outer(angles, l - 1))
        out = 2.0 * np.einsum("tk,rkc->rtc", phase, A)
    elif kind == "dz":
        phase = np.exp(1j * np.outer(angles, l - 2))
        inner = 2.0 * (l - 1)[None, :, None] * A / s[:, None, None] + f_s
        out = np.einsum("tk,rkc->rtc", phase, inner)
    else:
        phase = np.exp(1j * np.outer(angles, l - 1))
        out = 2.0 * np.pi * np.einsum("tk,rkc->rtc", phase, A)
    return out.reshape((R, angles.size) + comp)


def rotation_transform(w_func: Callable[[np.ndarray], np.ndarray], radii, angles, kind: str = "cauchy",
                       n_quad: int = 48, n_angular: int = 256, threads: int = 1) -> np.ndarray:
    """ŵ, ∂_z ŵ or Tw of a sampled function on the polar product radii × angles.

    w_func maps an array of points to values of the same shape, optionally
    with trailing component axes. Result shape: (len(radii), len(angles), ...).
    """
    if kind not in KINDS:
        raise ArgumentError(f"unknown transform kind {kind!r}, expected one of {KINDS}")
    s = np.atleast_1d(np.asarray(radii, dtype=float))
    if np.any(s <= 0.0) or np.any(s > 1.0):
        raise ArgumentError("rotation_transform needs radii in (0, 1]")
    if kind != "cauchy" and np.any(s >= 1.0):
        raise ArgumentError(f"kind {kind!r} needs radii in (0, 1)")
    if n_quad < 2 or n_angular < 8:
        raise ArgumentError("rotation_transform needs n_quad >= 2 and n_angular >= 8")
    t = np.atleast_1d(np.asarray(angles, dtype=float))
    chunks = [s[i:i + CHUNK] for i in range(0, s.size, CHUNK)]
    logger.debug(f"rotation transform kind={kind}: {s.size} radii, {t.size} angles, {len(chunks)} chunks")

    def run(part):
        return _chunk(w_func, part, t, kind, n_quad, n_angular)

    if threads > 1 and len(chunks) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(run, chunks))
    else:
        parts = [run(part) for part in chunks]
    return np.concatenate(parts, axis=0)
