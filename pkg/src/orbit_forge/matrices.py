"""Dense small-matrix machinery: brackets, characteristic polynomials,
Cayley retractions, seeded Haar sampling, and canonical skew spectra.

Characteristic polynomials come in two independent flavours:

* exact Faddeev-LeVerrier over rationals (object arrays / nested lists of
  ``fractions.Fraction`` or ints), used wherever a coefficient identity has
  to hold on the nose;
* a floating route through the eigenvalues, re-expanded with compensated
  summation, used for everything sampled.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import (
    PreconditionError,
    RetractionFailedError,
    ShapeMismatchError,
    UnsupportedScalarError,
)
from .quaternions import QuaternionMatrix


@dataclass(frozen=True)
class PolyCoeffs:
    """Monic polynomial, leading coefficient first (coeffs[0] == 1)."""

    degree: int
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != self.degree + 1:
            raise ShapeMismatchError("coeffs length must be degree + 1")
        if self.coeffs[0] != 1:
            raise PreconditionError("polynomial must be monic")

    @property
    def is_exact(self) -> bool:
        return all(isinstance(c, (Fraction, int)) for c in self.coeffs)

    def as_complex(self) -> np.ndarray:
        return np.array([complex(c) for c in self.coeffs])

    def as_floats(self) -> np.ndarray:
        """Real coefficient vector; complex entries must have negligible
        imaginary parts (all polynomials here are real by theory)."""
        vals = self.as_complex()
        scale = max(1.0, float(np.abs(vals).max()))
        if float(np.abs(vals.imag).max()) > 1e-9 * scale:
            raise UnsupportedScalarError("coefficients carry a non-negligible "
                                         "imaginary part")
        return vals.real.copy()

    def __call__(self, zval):
        acc = self.coeffs[0]
        for c in self.coeffs[1:]:
            acc = acc * zval + c
        return acc

    def allclose(self, other: "PolyCoeffs", tol: float = 1e-12) -> bool:
        if self.degree != other.degree:
            return False
        return bool(np.max(np.abs(self.as_floats() - other.as_floats())) <= tol)


# ---------------------------------------------------------------------------
# structural checks
# ---------------------------------------------------------------------------

def assert_square(m):
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ShapeMismatchError(f"expected a square matrix, got shape {m.shape}")


def assert_skew(m, tol: float = 1e-12):
    """Skew-symmetric (real) or skew-Hermitian (complex) within tol."""
    if isinstance(m, QuaternionMatrix):
        if not m.is_skew(tol):
            raise PreconditionError("matrix is not quaternionic-skew")
        return
    m = np.asarray(m)
    assert_square(m)
    dev = np.abs(m + m.conj().T).max() if m.size else 0.0
    if dev > tol * max(1.0, np.abs(m).max() if m.size else 0.0):
        raise PreconditionError(f"matrix is not skew (deviation {dev:.3e})")


# ---------------------------------------------------------------------------
# bracket
# ---------------------------------------------------------------------------

def bracket(a, b):
    """Commutator AB - BA for same-size, same-scalar-kind square matrices."""
    if isinstance(a, QuaternionMatrix) or isinstance(b, QuaternionMatrix):
        if not (isinstance(a, QuaternionMatrix) and isinstance(b, QuaternionMatrix)):
            raise UnsupportedScalarError("cannot bracket quaternionic with non-quaternionic")
        if a.shape != b.shape or a.shape[0] != a.shape[1]:
            raise ShapeMismatchError(f"bracket shape mismatch: {a.shape} vs {b.shape}")
        return a @ b - b @ a
    a = np.asarray(a)
    b = np.asarray(b)
    assert_square(a)
    assert_square(b)
    if a.shape != b.shape:
        raise ShapeMismatchError(f"bracket shape mismatch: {a.shape} vs {b.shape}")
    return a @ b - b @ a


# ---------------------------------------------------------------------------
# characteristic polynomials
# ---------------------------------------------------------------------------

def _is_exact_matrix(m) -> bool:
    if isinstance(m, np.ndarray):
        return m.dtype == object
    if isinstance(m, (list, tuple)):
        return all(isinstance(v, (int, Fraction)) for row in m for v in row)
    return False


def _charpoly_exact(m) -> PolyCoeffs:
    """Faddeev-LeVerrier over Fraction entries."""
    rows = [[Fraction(v) for v in row] for row in (m.tolist() if isinstance(m, np.ndarray) else m)]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ShapeMismatchError("expected a square matrix")
    mk = [[Fraction(0)] * n for _ in range(n)]
    coeffs = [Fraction(1)]
    for k in range(1, n + 1):
        # T = M_{k-1} + c_{k-1} I ;  M_k = A T ;  c_k = -tr(M_k) / k
        t = [row[:] for row in mk]
        for i in range(n):
            t[i][i] += coeffs[-1]
        mk = [[sum(rows[i][s] * t[s][j] for s in range(n)) for j in range(n)]
              for i in range(n)]
        coeffs.append(-sum(mk[i][i] for i in range(n)) / k)
    return PolyCoeffs(degree=n, coeffs=tuple(coeffs))


def _expand_monic_from_roots(roots: np.ndarray) -> np.ndarray:
    """Coefficients of prod (z - r), with Kahan compensation per coefficient."""
    n = len(roots)
    c = np.zeros(n + 1, dtype=complex)
    comp = np.zeros(n + 1, dtype=complex)
    c[0] = 1.0
    for k, mu in enumerate(roots):
        for j in range(k + 1, 0, -1):
            delta = -mu * c[j - 1]
            yv = delta - comp[j]
            tv = c[j] + yv
            comp[j] = (tv - c[j]) - yv
            c[j] = tv
    return c


def _charpoly_float(m: np.ndarray) -> PolyCoeffs:
    eigs = np.linalg.eigvals(m)
    # sort to keep conjugate pairs adjacent, which improves cancellation
    order = np.lexsort((eigs.imag, eigs.real))
    coeffs = _expand_monic_from_roots(eigs[order])
    if not np.iscomplexobj(m):
        coeffs = coeffs.real
    return PolyCoeffs(degree=m.shape[0], coeffs=tuple(coeffs.tolist()))


def charpoly(m) -> PolyCoeffs:
    """Monic characteristic polynomial det(zI - M).

    Exact (Faddeev-LeVerrier) when entries are rationals; floating via the
    eigenvalue route otherwise.  Quaternionic input is rejected: map it to
    its complex image first.
    """
    if isinstance(m, QuaternionMatrix):
        raise UnsupportedScalarError(
            "characteristic polynomials of quaternionic matrices are not defined "
            "here; take the complex image first")
    if _is_exact_matrix(m):
        return _charpoly_exact(m)
    m = np.asarray(m)
    assert_square(m)
    if m.dtype == object:
        return _charpoly_exact(m)
    return _charpoly_float(m.astype(complex) if np.iscomplexobj(m) else m.astype(float))


# ---------------------------------------------------------------------------
# retraction and sampling
# ---------------------------------------------------------------------------

def cayley_retract(u) -> np.ndarray:
    """(I - U/2)^{-1} (I + U/2) for skew U; lands in the identity component."""
    u = np.asarray(u)
    assert_skew(u, tol=1e-10)
    n = u.shape[0]
    eye = np.eye(n, dtype=u.dtype)
    try:
        q = np.linalg.solve(eye - 0.5 * u, eye + 0.5 * u)
    except np.linalg.LinAlgError as exc:
        raise RetractionFailedError("I - U/2 is singular; halve the step") from exc
    if not np.all(np.isfinite(q)):
        raise RetractionFailedError("retraction produced non-finite entries")
    return q


def _haar_from_rng(n: int, rng: np.random.Generator) -> np.ndarray:
    a = rng.standard_normal((n, n))
    q, r = np.linalg.qr(a)
    q = q * np.where(np.diag(r) < 0.0, -1.0, 1.0)
    if np.linalg.det(q) < 0.0:
        q[:, -1] = -q[:, -1]
    return q


def haar_orthogonal(n: int, seed: int) -> np.ndarray:
    """Seeded Haar-like sample from SO(n): QR of a Gaussian matrix with the
    triangular diagonal made positive, one column negated if det is -1."""
    if n < 1:
        raise PreconditionError("n must be at least 1")
    return _haar_from_rng(n, np.random.default_rng(seed))


# ---------------------------------------------------------------------------
# canonical spectra for 7x7 skew matrices
# ---------------------------------------------------------------------------

def skew_spectrum_so7(m) -> tuple[float, float, float]:
    """Sorted rotation rates (z1 >= z2 >= z3 >= 0) of a real skew 7x7 matrix.

    The eigenvalues are {+-i z1, +-i z2, +-i z3, 0}; the sorted triple is the
    canonical chamber representative and a complete conjugation invariant.
    """
    m = np.asarray(m, dtype=float)
    if m.shape != (7, 7):
        raise PreconditionError(f"expected a 7x7 matrix, got {m.shape}")
    assert_skew(m, tol=1e-12)
    im = np.sort(np.abs(np.linalg.eigvals(m).imag))[::-1]
    return (float(im[0]), float(im[2]), float(im[4]))


def so7_weyl_frame(m) -> tuple[np.ndarray, np.ndarray]:
    """Frame Q in SO(7) with Q^T M Q in sorted canonical block form.

    Returns (Q, D) where D = Q^T M Q consists of 2x2 blocks [[0, -z], [z, 0]]
    with z1 >= z2 >= z3 > 0 followed by a zero diagonal entry.  Requires the
    rotation rates to be distinct and nonzero (the generic case).
    """
    m = np.asarray(m, dtype=float)
    if m.shape != (7, 7):
        raise PreconditionError(f"expected a 7x7 matrix, got {m.shape}")
    assert_skew(m, tol=1e-12)
    vals, vecs = np.linalg.eig(m)
    pos = [i for i in range(7) if vals[i].imag > 1e-10]
    pos.sort(key=lambda i: -vals[i].imag)
    zs = [vals[i].imag for i in pos]
    if len(zs) != 3 or min(abs(zs[a] - zs[a + 1]) for a in range(len(zs) - 1)) < 1e-8:
        raise PreconditionError("rotation rates must be distinct and nonzero")
    cols = []
    for i in pos:
        v = vecs[:, i]
        cols.append(math.sqrt(2.0) * v.imag)
        cols.append(math.sqrt(2.0) * v.real)
    _, sv, vt = np.linalg.svd(m)
    cols.append(vt[-1])
    q = np.column_stack(cols)
    if np.abs(q.T @ q - np.eye(7)).max() > 1e-8:
        raise PreconditionError("failed to assemble an orthonormal frame")
    if np.linalg.det(q) < 0.0:
        q[:, -1] = -q[:, -1]
    return q, q.T @ m @ q
