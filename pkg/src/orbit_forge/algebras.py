"""Canonical bases, invariant inner products, embeddings, and adjoint action
for the matrix Lie algebras so(n), sp(l), u(l), su(n).

Conventions:

* so(n) carries <A, B> = -1/2 tr(AB); its basis is F[i,j] = E_ij - E_ji
  (single-entry E here), ordered lexicographically, 1-based indices.
* sp(l) consists of quaternionic-skew l x l matrices with
  <A, B> = 1/2 tr Re(A B*); its orthonormal basis uses the skew E_ij
  (1 at ij, -1 at ji), the symmetric F_ij (1 at ij and ji) times i, j, k,
  and the diagonal G_i (sqrt(2) at ii) times i, j, k.  Basis order: iG, jG,
  kG (by index), then E, then iF, jF, kF, each lexicographic in (i, j).
* u(l) is held in the real pair form A + iB (A skew, B symmetric), stored as
  a complex array whose real/imaginary parts are exactly that pair; inner
  product -1/2 Re tr(MN), orthonormal basis E_ij, iF_ij, iG_i.
* su(n) uses the same inner product with traceless diagonal combinations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import PreconditionError, ShapeMismatchError
from .matrices import bracket, cayley_retract, _haar_from_rng
from .quaternions import QuaternionMatrix

SQ2 = math.sqrt(2.0)


# ---------------------------------------------------------------------------
# descriptors and elements
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AlgebraDescriptor:
    """One matrix Lie algebra: family tag, rank parameter, orthonormal basis."""

    family: str          # "so" | "sp" | "u" | "su"
    n: int               # matrix size for so/su, quaternionic rank for sp/u
    dim: int
    basis: tuple
    labels: tuple

    @property
    def name(self) -> str:
        return f"{self.family}({self.n})"

    def zero_matrix(self):
        if self.family == "sp":
            return QuaternionMatrix.zeros(self.n)
        dtype = float if self.family == "so" else complex
        return np.zeros((self.n, self.n), dtype=dtype)

    def __repr__(self):
        return f"AlgebraDescriptor({self.name}, dim={self.dim})"


@dataclass(frozen=True)
class AlgebraElement:
    algebra: AlgebraDescriptor
    coords: np.ndarray
    matrix: object

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        _check_same_algebra(self, other)
        return AlgebraElement(self.algebra, self.coords + other.coords,
                              self.matrix + other.matrix)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        _check_same_algebra(self, other)
        return AlgebraElement(self.algebra, self.coords - other.coords,
                              self.matrix - other.matrix)

    def __mul__(self, s) -> "AlgebraElement":
        s = float(s)
        return AlgebraElement(self.algebra, self.coords * s, self.matrix * s)

    __rmul__ = __mul__

    def __neg__(self) -> "AlgebraElement":
        return self * -1.0

    def bracket(self, other: "AlgebraElement") -> "AlgebraElement":
        _check_same_algebra(self, other)
        return element_from_matrix(self.algebra,
                                   bracket(self.matrix, other.matrix))

    def norm(self) -> float:
        return float(np.linalg.norm(self.coords))


def _check_same_algebra(a: AlgebraElement, b: AlgebraElement):
    if a.algebra is not b.algebra and a.algebra != b.algebra:
        raise TypeError(f"algebra mismatch: {a.algebra.name} vs {b.algebra.name}")


# ---------------------------------------------------------------------------
# inner products
# ---------------------------------------------------------------------------

def trace_form(family: str, m, n) -> float:
    """The family's Ad-invariant inner product evaluated on raw matrices."""
    if family == "so":
        return float(-0.5 * np.trace(m @ n))
    if family in ("u", "su"):
        return float(-0.5 * np.trace(m @ n).real)
    if family == "sp":
        return float(0.5 * (m @ n.star()).re_trace())
    raise ValueError(f"unknown family {family!r}")


def invariant_inner(a: AlgebraElement, b: AlgebraElement) -> float:
    """<A, B> in the elements' common algebra (coordinates are orthonormal)."""
    _check_same_algebra(a, b)
    return float(np.dot(a.coords, b.coords))


def matrix_norm(family: str, m) -> float:
    return math.sqrt(max(trace_form(family, m, m), 0.0))


# ---------------------------------------------------------------------------
# basis construction
# ---------------------------------------------------------------------------

def _so_basis(n):
    basis, labels = [], []
    for i in range(n):
        for j in range(i + 1, n):
            m = np.zeros((n, n))
            m[i, j] = 1.0
            m[j, i] = -1.0
            basis.append(m)
            labels.append(f"F[{i + 1},{j + 1}]")
    return basis, labels


def _sp_unit(l, kind, i, j=None):
    """One sp(l) basis matrix, 0-based indices."""
    m = QuaternionMatrix.zeros(l)
    comp = {"i": m.x, "j": m.y, "k": m.z}
    if kind in ("iG", "jG", "kG"):
        comp[kind[0]][i, i] = SQ2
    elif kind == "E":
        m.w[i, j] = 1.0
        m.w[j, i] = -1.0
    elif kind in ("iF", "jF", "kF"):
        comp[kind[0]][i, j] = 1.0
        comp[kind[0]][j, i] = 1.0
    else:
        raise PreconditionError(f"unknown sp basis kind {kind!r}")
    return m


def _sp_basis(l):
    basis, labels = [], []
    for unit in ("iG", "jG", "kG"):
        for i in range(l):
            basis.append(_sp_unit(l, unit, i))
            labels.append(f"{unit}[{i + 1}]")
    for kind in ("E", "iF", "jF", "kF"):
        for i in range(l):
            for j in range(i + 1, l):
                basis.append(_sp_unit(l, kind, i, j))
                labels.append(f"{kind}[{i + 1},{j + 1}]")
    return basis, labels


def _u_basis(l):
    basis, labels = [], []
    for i in range(l):
        m = np.zeros((l, l), dtype=complex)
        m[i, i] = 1j * SQ2
        basis.append(m)
        labels.append(f"iG[{i + 1}]")
    for i in range(l):
        for j in range(i + 1, l):
            m = np.zeros((l, l), dtype=complex)
            m[i, j] = 1.0
            m[j, i] = -1.0
            basis.append(m)
            labels.append(f"E[{i + 1},{j + 1}]")
    for i in range(l):
        for j in range(i + 1, l):
            m = np.zeros((l, l), dtype=complex)
            m[i, j] = 1j
            m[j, i] = 1j
            basis.append(m)
            labels.append(f"iF[{i + 1},{j + 1}]")
    return basis, labels


def _su_basis(n):
    basis, labels = [], []
    for i in range(n):
        for j in range(i + 1, n):
            m = np.zeros((n, n), dtype=complex)
            m[i, j] = 1.0
            m[j, i] = -1.0
            basis.append(m)
            labels.append(f"E[{i + 1},{j + 1}]")
            m = np.zeros((n, n), dtype=complex)
            m[i, j] = 1j
            m[j, i] = 1j
            basis.append(m)
            labels.append(f"iF[{i + 1},{j + 1}]")
    # traceless diagonal directions, orthonormalized: norm^2 of i*diag(v) is |v|^2/2
    for p in range(1, n):
        v = np.zeros(n)
        v[:p] = 1.0
        v[p] = -p
        v *= SQ2 / np.linalg.norm(v)
        basis.append(1j * np.diag(v).astype(complex))
        labels.append(f"D[{p}]")
    return basis, labels


@lru_cache(maxsize=None)
def so(n: int) -> AlgebraDescriptor:
    if n < 2:
        raise PreconditionError("so(n) needs n >= 2")
    basis, labels = _so_basis(n)
    return AlgebraDescriptor("so", n, n * (n - 1) // 2, tuple(basis), tuple(labels))


@lru_cache(maxsize=None)
def sp(l: int) -> AlgebraDescriptor:
    if l < 1:
        raise PreconditionError("sp(l) needs l >= 1")
    basis, labels = _sp_basis(l)
    return AlgebraDescriptor("sp", l, l * (2 * l + 1), tuple(basis), tuple(labels))


@lru_cache(maxsize=None)
def u(l: int) -> AlgebraDescriptor:
    if l < 1:
        raise PreconditionError("u(l) needs l >= 1")
    basis, labels = _u_basis(l)
    return AlgebraDescriptor("u", l, l * l, tuple(basis), tuple(labels))


@lru_cache(maxsize=None)
def su(n: int) -> AlgebraDescriptor:
    if n < 2:
        raise PreconditionError("su(n) needs n >= 2")
    basis, labels = _su_basis(n)
    return AlgebraDescriptor("su", n, n * n - 1, tuple(basis), tuple(labels))


# ---------------------------------------------------------------------------
# element constructors
# ---------------------------------------------------------------------------

def element_from_coords(alg: AlgebraDescriptor, coords) -> AlgebraElement:
    coords = np.asarray(coords, dtype=float)
    if coords.shape != (alg.dim,):
        raise ShapeMismatchError(f"expected {alg.dim} coordinates, got {coords.shape}")
    m = alg.zero_matrix()
    for c, b in zip(coords, alg.basis):
        if c != 0.0:
            m = m + float(c) * b
    return AlgebraElement(alg, coords, m)


def element_from_matrix(alg: AlgebraDescriptor, m, tol: float = 1e-10) -> AlgebraElement:
    """Expand m in the orthonormal basis; reject if it is not in the algebra."""
    coords = np.array([trace_form(alg.family, m, b) for b in alg.basis])
    recon = alg.zero_matrix()
    for c, b in zip(coords, alg.basis):
        if c != 0.0:
            recon = recon + float(c) * b
    dev = recon - m
    gap = dev.max_abs() if isinstance(dev, QuaternionMatrix) else float(np.abs(dev).max())
    scale = max(1.0, float(np.abs(coords).max()) if coords.size else 1.0)
    if gap > tol * scale:
        raise PreconditionError(
            f"matrix is not in {alg.name} (reconstruction gap {gap:.3e})")
    return AlgebraElement(alg, coords, recon)


def basis_element(alg: AlgebraDescriptor, kind: str, i: int, j: int | None = None) -> AlgebraElement:
    """Unit basis element by kind and 1-based indices.

    so(n) accepts kind "F_skew" (needs i < j); sp(l) accepts "iG", "jG", "kG"
    (diagonal, j omitted or equal to i) and "E", "iF", "jF", "kF" (i < j);
    u(l) accepts "iG", "E", "iF".
    """
    diag_kinds = ("iG", "jG", "kG")
    pair_kinds = {"so": ("F_skew",), "sp": ("E", "iF", "jF", "kF"), "u": ("E", "iF")}
    if alg.family == "su":
        raise PreconditionError("su has no named single-entry diagonal basis; "
                                "use the descriptor basis directly")
    allowed_diag = {"sp": diag_kinds, "u": ("iG",), "so": ()}[alg.family]
    if kind in allowed_diag:
        if not (1 <= i <= alg.n) or (j is not None and j != i):
            raise PreconditionError(f"bad index for {kind}: i={i}, j={j}")
        label = f"{kind}[{i}]"
    elif kind in pair_kinds[alg.family]:
        if j is None or not (1 <= i < j <= alg.n):
            raise PreconditionError(f"{kind} needs 1 <= i < j <= {alg.n}, got ({i}, {j})")
        label = f"F[{i},{j}]" if kind == "F_skew" else f"{kind}[{i},{j}]"
    else:
        raise PreconditionError(f"kind {kind!r} is not defined for {alg.name}")
    idx = alg.labels.index(label)
    coords = np.zeros(alg.dim)
    coords[idx] = 1.0
    return AlgebraElement(alg, coords, alg.basis[idx])


def random_element(alg: AlgebraDescriptor, rng: np.random.Generator,
                   scale: float = 1.0) -> AlgebraElement:
    return element_from_coords(alg, scale * rng.standard_normal(alg.dim))


# ---------------------------------------------------------------------------
# embeddings
# ---------------------------------------------------------------------------

def _u_pair(m) -> tuple[np.ndarray, np.ndarray]:
    """Validated (A, B) real pair of a u(l) matrix A + iB."""
    if isinstance(m, AlgebraElement):
        m = m.matrix
    m = np.asarray(m, dtype=complex)
    a, b = m.real.copy(), m.imag.copy()
    if np.abs(a + a.T).max() > 1e-12 * max(1.0, np.abs(a).max(), 1.0):
        raise PreconditionError("real part must be skew-symmetric")
    if np.abs(b - b.T).max() > 1e-12 * max(1.0, np.abs(b).max(), 1.0):
        raise PreconditionError("imaginary part must be symmetric")
    return a, b


def embed_tau_prime(l: int, m) -> AlgebraElement:
    """u(l) -> so(2l+1): A + iB to diag([[A, B], [-B, A]], 0)."""
    a, b = _u_pair(m)
    if a.shape != (l, l):
        raise PreconditionError(f"expected a u({l}) matrix, got shape {a.shape}")
    out = np.zeros((2 * l + 1, 2 * l + 1))
    out[:l, :l] = a
    out[:l, l:2 * l] = b
    out[l:2 * l, :l] = -b
    out[l:2 * l, l:2 * l] = a
    return element_from_matrix(so(2 * l + 1), out)


def embed_sigma(m: int, l: int, q1, q2) -> AlgebraElement:
    """so(2m+1) x so(2k) -> so(2l+1), k = l - m, by block interleaving.

    Rows of the so(2m+1) operand land in slots [0:m], [m+k:2m+k] and the last
    row; rows of the so(2k) operand land in slots [m:m+k] and [2m+k:2m+2k].
    """
    if not 1 <= m < l:
        raise PreconditionError(f"need 1 <= m < l, got m={m}, l={l}")
    k = l - m
    a1 = q1.matrix if isinstance(q1, AlgebraElement) else np.asarray(q1, dtype=float)
    a2 = q2.matrix if isinstance(q2, AlgebraElement) else np.asarray(q2, dtype=float)
    if a1.shape != (2 * m + 1, 2 * m + 1):
        raise PreconditionError(f"first operand must be so({2 * m + 1})")
    if a2.shape != (2 * k, 2 * k):
        raise PreconditionError(f"second operand must be so({2 * k})")
    idx1 = np.concatenate([np.arange(m), np.arange(m + k, 2 * m + k), [2 * l]])
    idx2 = np.concatenate([np.arange(m, m + k), np.arange(2 * m + k, 2 * m + 2 * k)])
    out = np.zeros((2 * l + 1, 2 * l + 1))
    out[np.ix_(idx1, idx1)] = a1
    out[np.ix_(idx2, idx2)] = a2
    return element_from_matrix(so(2 * l + 1), out)


def embed_dpi(l: int, w) -> np.ndarray:
    """sp(l) -> su(2l): X + jY to [[X, -conj(Y)], [Y, conj(X)]] (complex)."""
    if isinstance(w, AlgebraElement):
        w = w.matrix
    if not isinstance(w, QuaternionMatrix):
        raise PreconditionError("expected a quaternionic matrix")
    if w.shape != (l, l):
        raise PreconditionError(f"expected an sp({l}) matrix, got shape {w.shape}")
    return w.complex_image()


# ---------------------------------------------------------------------------
# adjoint action and group sampling
# ---------------------------------------------------------------------------

def _check_group_member(alg: AlgebraDescriptor, q, tol: float = 1e-10):
    if alg.family == "sp":
        if not isinstance(q, QuaternionMatrix) or q.shape != (alg.n, alg.n):
            raise PreconditionError("group element must be quaternionic of matching size")
        dev = (q @ q.star() - QuaternionMatrix.eye(alg.n)).max_abs()
        if dev > tol:
            raise PreconditionError(f"not quaternion-unitary (deviation {dev:.3e})")
        return
    q = np.asarray(q)
    if q.shape != (alg.n, alg.n):
        raise PreconditionError("group element has wrong shape")
    dev = np.abs(q @ q.conj().T - np.eye(alg.n)).max()
    if dev > tol:
        raise PreconditionError(f"not orthogonal/unitary (deviation {dev:.3e})")
    if alg.family == "so" and np.linalg.det(q) < 0.0:
        raise PreconditionError("orthogonal matrix is not in the identity component")


def adjoint(q, x: AlgebraElement) -> AlgebraElement:
    """Q X Q^{-1}, re-expressed in the canonical basis of X's algebra."""
    alg = x.algebra
    _check_group_member(alg, q)
    if alg.family == "sp":
        conj = q @ x.matrix @ q.star()
    else:
        qa = np.asarray(q)
        conj = qa @ x.matrix @ qa.conj().T
    return element_from_matrix(alg, conj)


def group_from_algebra(elt: AlgebraElement):
    """Cayley retraction of an algebra element into the identity component."""
    alg = elt.algebra
    if alg.family == "sp":
        return QuaternionMatrix.from_complex_image(
            cayley_retract(elt.matrix.complex_image()))
    return cayley_retract(np.asarray(elt.matrix))


def random_group_element(alg: AlgebraDescriptor, rng: np.random.Generator):
    """Seeded element of the identity component of the algebra's group."""
    if alg.family == "so":
        return _haar_from_rng(alg.n, rng)
    if alg.family in ("u", "su"):
        a = rng.standard_normal((alg.n, alg.n)) + 1j * rng.standard_normal((alg.n, alg.n))
        q, r = np.linalg.qr(a)
        d = np.diag(r)
        q = q * (d.conj() / np.abs(d))
        if alg.family == "su":
            q[:, 0] = q[:, 0] / np.linalg.det(q)
        return q
    if alg.family == "sp":
        return group_from_algebra(random_element(alg, rng))
    raise ValueError(f"unknown family {alg.family!r}")
