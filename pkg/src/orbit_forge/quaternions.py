"""Quaternions and dense quaternionic matrices.

A quaternionic matrix is stored entrywise as four real component arrays
(w + x i + y j + z k).  Products are computed through the complex pair
representation M = A + jB with A = w + ix and B = y - iz; the complex
2n x 2n image [[A, -conj(B)], [B, conj(A)]] is the bridge to all spectral
work.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ShapeMismatchError


@dataclass(frozen=True)
class Quaternion:
    w: float = 0.0
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    def __add__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.w + other.w, self.x + other.x,
                          self.y + other.y, self.z + other.z)

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.w - other.w, self.x - other.x,
                          self.y - other.y, self.z - other.z)

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            a, b = self, other
            return Quaternion(
                a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
                a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
                a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
            )
        return Quaternion(self.w * other, self.x * other,
                          self.y * other, self.z * other)

    def __rmul__(self, other) -> "Quaternion":
        return Quaternion(self.w * other, self.x * other,
                          self.y * other, self.z * other)

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm(self) -> float:
        return math.sqrt(self.w ** 2 + self.x ** 2 + self.y ** 2 + self.z ** 2)

    def allclose(self, other: "Quaternion", tol: float = 1e-12) -> bool:
        return (self - other).norm() <= tol


ONE = Quaternion(1.0)
I = Quaternion(x=1.0)
J = Quaternion(y=1.0)
K = Quaternion(z=1.0)


class QuaternionMatrix:
    """Dense quaternionic matrix held as four real (n, m) component arrays."""

    __slots__ = ("w", "x", "y", "z")

    def __init__(self, w, x=None, y=None, z=None):
        w = np.asarray(w, dtype=float)
        zero = np.zeros_like(w)
        self.w = w
        self.x = zero.copy() if x is None else np.asarray(x, dtype=float)
        self.y = zero.copy() if y is None else np.asarray(y, dtype=float)
        self.z = zero.copy() if z is None else np.asarray(z, dtype=float)
        if not (self.w.shape == self.x.shape == self.y.shape == self.z.shape):
            raise ShapeMismatchError("component arrays must share one shape")
        if self.w.ndim != 2:
            raise ShapeMismatchError("quaternionic matrices are 2-dimensional")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zeros(cls, n: int, m: int | None = None) -> "QuaternionMatrix":
        m = n if m is None else m
        return cls(np.zeros((n, m)))

    @classmethod
    def eye(cls, n: int) -> "QuaternionMatrix":
        return cls(np.eye(n))

    @classmethod
    def from_complex_pair(cls, a, b) -> "QuaternionMatrix":
        """Build A + jB from complex arrays A and B."""
        a = np.asarray(a, dtype=complex)
        b = np.asarray(b, dtype=complex)
        return cls(a.real, a.imag, b.real, -b.imag)

    @classmethod
    def from_complex_image(cls, m) -> "QuaternionMatrix":
        """Inverse of complex_image; m must be 2n x 2n with the paired block layout."""
        m = np.asarray(m, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] % 2:
            raise ShapeMismatchError("complex image must be square of even size")
        n = m.shape[0] // 2
        return cls.from_complex_pair(m[:n, :n], m[n:, :n])

    # -- structure ----------------------------------------------------------

    @property
    def shape(self):
        return self.w.shape

    def entry(self, i: int, j: int) -> Quaternion:
        return Quaternion(float(self.w[i, j]), float(self.x[i, j]),
                          float(self.y[i, j]), float(self.z[i, j]))

    def complex_pair(self):
        return self.w + 1j * self.x, self.y - 1j * self.z

    def complex_image(self) -> np.ndarray:
        a, b = self.complex_pair()
        return np.block([[a, -b.conj()], [b, a.conj()]])

    def star(self) -> "QuaternionMatrix":
        """Quaternionic conjugate transpose."""
        return QuaternionMatrix(self.w.T.copy(), -self.x.T, -self.y.T, -self.z.T)

    def re_trace(self) -> float:
        return float(np.trace(self.w))

    def norm(self) -> float:
        return math.sqrt(float(np.sum(self.w ** 2) + np.sum(self.x ** 2)
                               + np.sum(self.y ** 2) + np.sum(self.z ** 2)))

    def max_abs(self) -> float:
        return float(max(np.abs(self.w).max(), np.abs(self.x).max(),
                         np.abs(self.y).max(), np.abs(self.z).max()))

    def is_skew(self, tol: float = 1e-12) -> bool:
        """Whether M* = -M entrywise within tol."""
        return (self + self.star()).max_abs() <= tol

    def allclose(self, other: "QuaternionMatrix", tol: float = 1e-12) -> bool:
        return (self - other).max_abs() <= tol

    def copy(self) -> "QuaternionMatrix":
        return QuaternionMatrix(self.w.copy(), self.x.copy(),
                                self.y.copy(), self.z.copy())

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "QuaternionMatrix") -> "QuaternionMatrix":
        self._check_same_shape(other)
        return QuaternionMatrix(self.w + other.w, self.x + other.x,
                                self.y + other.y, self.z + other.z)

    def __sub__(self, other: "QuaternionMatrix") -> "QuaternionMatrix":
        self._check_same_shape(other)
        return QuaternionMatrix(self.w - other.w, self.x - other.x,
                                self.y - other.y, self.z - other.z)

    def __neg__(self) -> "QuaternionMatrix":
        return QuaternionMatrix(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, scalar) -> "QuaternionMatrix":
        s = float(scalar)
        return QuaternionMatrix(self.w * s, self.x * s, self.y * s, self.z * s)

    __rmul__ = __mul__

    def __matmul__(self, other: "QuaternionMatrix") -> "QuaternionMatrix":
        if not isinstance(other, QuaternionMatrix):
            raise ShapeMismatchError("quaternionic matmul needs a quaternionic operand")
        if self.shape[1] != other.shape[0]:
            raise ShapeMismatchError(
                f"matmul shape mismatch: {self.shape} x {other.shape}")
        a1, b1 = self.complex_pair()
        a2, b2 = other.complex_pair()
        # (A1 + jB1)(A2 + jB2) = (A1 A2 - conj(B1) B2) + j (conj(A1) B2 + B1 A2)
        a = a1 @ a2 - b1.conj() @ b2
        b = a1.conj() @ b2 + b1 @ a2
        return QuaternionMatrix.from_complex_pair(a, b)

    def __repr__(self):
        return f"QuaternionMatrix(shape={self.shape})"

    def _check_same_shape(self, other):
        if not isinstance(other, QuaternionMatrix):
            raise ShapeMismatchError("expected a quaternionic operand")
        if self.shape != other.shape:
            raise ShapeMismatchError(
                f"shape mismatch: {self.shape} vs {other.shape}")
