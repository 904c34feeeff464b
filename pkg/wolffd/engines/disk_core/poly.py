"""
Analytic polynomials on the closed disk

Coefficients a_0..a_N of p(z) = Σ a_n z^n, stored as a complex numpy array.
"""

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

import numpy as np

Number = Union[int, float, complex]


@dataclass(frozen=True, eq=False)
class AnalyticPoly:
    """Finite coefficient sequence of an analytic polynomial"""

    coeffs: np.ndarray

    def __post_init__(self):
        arr = np.atleast_1d(np.asarray(self.coeffs, dtype=complex)).copy()
        if arr.ndim != 1:
            raise ValueError("coefficients must be one-dimensional")
        if arr.size == 0:
            arr = np.zeros(1, dtype=complex)
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)

    @classmethod
    def from_list(cls, values: Iterable[Number]) -> "AnalyticPoly":
        return cls(np.array(list(values), dtype=complex))

    @classmethod
    def constant(cls, c: Number) -> "AnalyticPoly":
        return cls(np.array([c], dtype=complex))

    @classmethod
    def monomial(cls, n: int, c: Number = 1.0) -> "AnalyticPoly":
        arr = np.zeros(n + 1, dtype=complex)
        arr[n] = c
        return cls(arr)

    @property
    def degree(self) -> int:
        nz = np.flatnonzero(self.coeffs)
        return int(nz[-1]) if nz.size else -1

    def is_zero(self) -> bool:
        return self.degree < 0

    def padded(self, length: int) -> np.ndarray:
        """Coefficients truncated or zero-padded to `length` entries"""
        out = np.zeros(length, dtype=complex)
        k = min(length, self.coeffs.size)
        out[:k] = self.coeffs[:k]
        return out

    def __call__(self, z):
        # Horner, highest coefficient first
        z = np.asarray(z, dtype=complex)
        acc = np.zeros_like(z)
        for a in self.coeffs[::-1]:
            acc = acc * z + a
        return acc

    def evaluate_conj(self, z):
        """conj(p(z)), the antianalytic companion"""
        return np.conj(self(z))

    def derivative(self) -> "AnalyticPoly":
        if self.coeffs.size <= 1:
            return AnalyticPoly.constant(0.0)
        n = np.arange(1, self.coeffs.size)
        return AnalyticPoly(self.coeffs[1:] * n)

    def __add__(self, other: "AnalyticPoly") -> "AnalyticPoly":
        size = max(self.coeffs.size, other.coeffs.size)
        return AnalyticPoly(self.padded(size) + other.padded(size))

    def __sub__(self, other: "AnalyticPoly") -> "AnalyticPoly":
        return self + other.scale(-1.0)

    def __mul__(self, other: "AnalyticPoly") -> "AnalyticPoly":
        return AnalyticPoly(np.convolve(self.coeffs, other.coeffs))

    def scale(self, c: Number) -> "AnalyticPoly":
        return AnalyticPoly(self.coeffs * c)

    def pow(self, k: int) -> "AnalyticPoly":
        out = AnalyticPoly.constant(1.0)
        for _ in range(k):
            out = out * self
        return out

    def trimmed(self) -> "AnalyticPoly":
        return AnalyticPoly(self.coeffs[: max(self.degree, 0) + 1])

    def to_pairs(self) -> list:
        return [[float(a.real), float(a.imag)] for a in self.coeffs]

    @classmethod
    def from_pairs(cls, pairs: Sequence[Sequence[float]]) -> "AnalyticPoly":
        return cls(np.array([complex(p[0], p[1]) for p in pairs], dtype=complex))

    def __repr__(self) -> str:
        return f"AnalyticPoly(degree={self.degree}, coeffs={np.round(self.coeffs[:8], 6).tolist()})"
