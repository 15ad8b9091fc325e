"""Reductive decompositions g = h + p1 + p2 for the two flag-manifold
families, the two-parameter invariant metric, geodesic-vector testing, and
the named candidate vectors.

Families:

* "so": SO(2l+1)/U(l), l >= 3.  h is the embedded u(l), p1 the last
  row/column block (dimension 2l), p2 the complement of u(l) inside so(2l).
* "sp": Sp(l)/(U(1) x Sp(l-1)), l >= 2.  h is spanned by iG_1 together with
  the lower sp(l-1) block, p2 by jG_1 and kG_1, p1 by the first-row
  off-diagonal quaternionic entries (dimension 4(l-1)).

The metric on p = p1 + p2 is x1 <.,.> on p1 plus x2 <.,.> on p2; lam denotes
the ratio x2/x1 and is always derived, never passed separately.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import algebras
from .algebras import (
    AlgebraDescriptor,
    AlgebraElement,
    basis_element,
    element_from_coords,
    element_from_matrix,
    matrix_norm,
)
from .errors import DomainError, NormalMetricError, PreconditionError
from .matrices import bracket

SQ2 = math.sqrt(2.0)

SPACE_SO = "so"
SPACE_SP = "sp"


@dataclass(frozen=True)
class MetricParams:
    """Weights (x1, x2) of the invariant metric; both strictly positive."""

    x1: float
    x2: float

    def __post_init__(self):
        if not (self.x1 > 0.0 and self.x2 > 0.0):
            raise DomainError("metric weights must be positive")

    @property
    def lam(self) -> float:
        return self.x2 / self.x1


@dataclass(frozen=True)
class GeodesicCheckResult:
    residual_ZY: float
    residual_mix: float
    tolerance: float = 1e-9

    @property
    def passes(self) -> bool:
        return self.residual_ZY < self.tolerance and self.residual_mix < self.tolerance


@dataclass(frozen=True)
class ReductiveDecomposition:
    space: str
    l: int
    algebra: AlgebraDescriptor
    h_basis: tuple
    p1_basis: tuple
    p2_basis: tuple

    @property
    def name(self) -> str:
        if self.space == SPACE_SO:
            return f"SO({2 * self.l + 1})/U({self.l})"
        return f"Sp({self.l})/U(1)x Sp({self.l - 1})"

    def block_coord_matrix(self, block: str) -> np.ndarray:
        basis = {"h": self.h_basis, "p1": self.p1_basis, "p2": self.p2_basis}[block]
        return np.stack([e.coords for e in basis])

    def split(self, w: AlgebraElement):
        """(X, Y, Z) with X in p1, Y in p2, Z in h; X + Y + Z reassembles w."""
        out = []
        for block in ("p1", "p2", "h"):
            bmat = self.block_coord_matrix(block)
            comp = bmat.T @ (bmat @ w.coords)
            out.append(element_from_coords(self.algebra, comp))
        return tuple(out)


@lru_cache(maxsize=None)
def build_decomposition(space: str, l: int) -> ReductiveDecomposition:
    if space == SPACE_SO:
        return _build_so(l)
    if space == SPACE_SP:
        return _build_sp(l)
    raise PreconditionError(f"unknown space family {space!r}")


def _build_so(l: int) -> ReductiveDecomposition:
    if l < 3:
        raise PreconditionError("the SO family is built for l >= 3")
    alg = algebras.so(2 * l + 1)
    n = 2 * l + 1

    h = []
    for i in range(l):
        for j in range(i + 1, l):
            a = np.zeros((l, l))
            a[i, j] = 1.0
            a[j, i] = -1.0
            m = np.zeros((n, n))
            m[:l, :l] = a
            m[l:2 * l, l:2 * l] = a
            h.append(element_from_matrix(alg, m / SQ2))
    for i in range(l):
        for j in range(i, l):
            b = np.zeros((l, l))
            b[i, j] = 1.0
            b[j, i] = 1.0
            m = np.zeros((n, n))
            m[:l, l:2 * l] = b
            m[l:2 * l, :l] = -b
            h.append(element_from_matrix(alg, m / matrix_norm("so", m)))

    p1 = [basis_element(alg, "F_skew", i, n) for i in range(1, n)]

    p2 = []
    for i in range(l):
        for j in range(i + 1, l):
            lm = np.zeros((l, l))
            lm[i, j] = 1.0
            lm[j, i] = -1.0
            m = np.zeros((n, n))
            m[:l, :l] = lm
            m[l:2 * l, l:2 * l] = -lm
            p2.append(element_from_matrix(alg, m / SQ2))
    for i in range(l):
        for j in range(i + 1, l):
            nm = np.zeros((l, l))
            nm[i, j] = 1.0
            nm[j, i] = -1.0
            m = np.zeros((n, n))
            m[:l, l:2 * l] = nm
            m[l:2 * l, :l] = nm
            p2.append(element_from_matrix(alg, m / SQ2))

    return ReductiveDecomposition(SPACE_SO, l, alg, tuple(h), tuple(p1), tuple(p2))


def _build_sp(l: int) -> ReductiveDecomposition:
    if l < 2:
        raise PreconditionError("the Sp family is built for l >= 2")
    alg = algebras.sp(l)

    h = [basis_element(alg, "iG", 1)]
    for unit in ("iG", "jG", "kG"):
        for q in range(2, l + 1):
            h.append(basis_element(alg, unit, q))
    for kind in ("E", "iF", "jF", "kF"):
        for i in range(2, l + 1):
            for j in range(i + 1, l + 1):
                h.append(basis_element(alg, kind, i, j))

    p2 = [basis_element(alg, "jG", 1), basis_element(alg, "kG", 1)]

    p1 = []
    for kind in ("E", "iF", "jF", "kF"):
        for q in range(2, l + 1):
            p1.append(basis_element(alg, kind, 1, q))

    return ReductiveDecomposition(SPACE_SP, l, alg, tuple(h), tuple(p1), tuple(p2))


# ---------------------------------------------------------------------------
# metric and geodesic machinery
# ---------------------------------------------------------------------------

def metric_inner(params: MetricParams, decomp: ReductiveDecomposition,
                 a: AlgebraElement, b: AlgebraElement) -> float:
    """x1 <A1, B1> + x2 <A2, B2> for A, B in p = p1 + p2."""
    bh = decomp.block_coord_matrix("h")
    scale = max(1.0, float(np.abs(a.coords).max()), float(np.abs(b.coords).max()))
    if max(np.abs(bh @ a.coords).max(), np.abs(bh @ b.coords).max()) > 1e-10 * scale:
        raise PreconditionError("operands must lie in p1 + p2 (h component found)")
    b1 = decomp.block_coord_matrix("p1")
    b2 = decomp.block_coord_matrix("p2")
    return float(params.x1 * np.dot(b1 @ a.coords, b1 @ b.coords)
                 + params.x2 * np.dot(b2 @ a.coords, b2 @ b.coords))


def delta_objective(decomp: ReductiveDecomposition, params: MetricParams,
                    w: AlgebraElement) -> float:
    """Weighted squared norm of the p-projection of w (the orbit objective)."""
    b1 = decomp.block_coord_matrix("p1")
    b2 = decomp.block_coord_matrix("p2")
    c1 = b1 @ w.coords
    c2 = b2 @ w.coords
    return float(params.x1 * np.dot(c1, c1) + params.x2 * np.dot(c2, c2))


def geodesic_check(decomp: ReductiveDecomposition, params: MetricParams,
                   w: AlgebraElement, tolerance: float = 1e-9) -> GeodesicCheckResult:
    """Residuals of [Z, Y] = 0 and [X, Y] = x1/(x2-x1) [X, Z] for w = X+Y+Z."""
    if params.x1 == params.x2:
        raise NormalMetricError(
            "x1 == x2 is the bi-invariant case: every element of p extended by "
            "Z = 0 is geodesic; this check applies only to x1 != x2")
    x, y, z = decomp.split(w)
    fam = decomp.algebra.family
    r_zy = matrix_norm(fam, bracket(z.matrix, y.matrix))
    ratio = params.x1 / (params.x2 - params.x1)
    mix = bracket(x.matrix, y.matrix) - ratio * bracket(x.matrix, z.matrix)
    r_mix = matrix_norm(fam, mix)
    return GeodesicCheckResult(r_zy, r_mix, tolerance)


@dataclass(frozen=True)
class GeodesicCompletion:
    """Solution set of the geodesic conditions in Z over the h-basis."""

    z: AlgebraElement
    residual: float
    nullity: int
    singular_values: tuple


def geodesic_completions(decomp: ReductiveDecomposition, params: MetricParams,
                         x: AlgebraElement, y: AlgebraElement,
                         sv_cutoff: float = 1e-8) -> GeodesicCompletion:
    """Least-squares solve for all Z in h making X + Y + Z a geodesic vector.

    Stacks [Zb, Y] = 0 and x1/(x2-x1) [X, Zb] = [X, Y] over the h-basis.
    nullity == 0 plus a small residual means the completion is unique.
    """
    if params.x1 == params.x2:
        raise NormalMetricError("completion solve requires x1 != x2")
    alg = decomp.algebra
    ratio = params.x1 / (params.x2 - params.x1)
    cols = []
    for zb in decomp.h_basis:
        c_zy = element_from_matrix(alg, bracket(zb.matrix, y.matrix)).coords
        c_xz = element_from_matrix(alg, bracket(x.matrix, zb.matrix)).coords
        cols.append(np.concatenate([c_zy, ratio * c_xz]))
    a = np.stack(cols, axis=1)
    rhs = np.concatenate([np.zeros(alg.dim),
                          element_from_matrix(alg, bracket(x.matrix, y.matrix)).coords])
    sol, _, _, sv = np.linalg.lstsq(a, rhs, rcond=None)
    nullity = int(np.sum(sv < sv_cutoff)) + (len(decomp.h_basis) - len(sv))
    residual = float(np.linalg.norm(a @ sol - rhs))
    zc = np.zeros(alg.dim)
    for c, zb in zip(sol, decomp.h_basis):
        zc += c * zb.coords
    return GeodesicCompletion(element_from_coords(alg, zc), residual, nullity, tuple(sv))


# ---------------------------------------------------------------------------
# named vectors
# ---------------------------------------------------------------------------

def _so7_combination(lam: float, s1: float, q: float, r: float) -> AlgebraElement:
    alg = algebras.so(7)
    f = lambda i, j: basis_element(alg, "F_skew", i, j)
    w = (s1 * f(1, 7) + lam * q * f(1, 6) + lam * r * f(2, 6)
         + (lam - 2.0) * q * f(3, 4) + (lam - 2.0) * r * f(3, 5))
    return w


def so7_vector_params(preset: str, lam: float) -> tuple[float, float, float]:
    """The (s1, q, r) weights of the two named candidate vectors."""
    if not 1.0 < lam < 2.0:
        raise DomainError(f"lam must lie in (1, 2), got {lam}")
    if preset == "vect1":
        s1sq = lam ** 2 * ((2 - lam) ** 2 + lam ** 3 - 1)
        qsq = (lam ** 3 - 1) * (1 - (2 - lam) ** 2) / ((2 - lam) ** 2 + lam ** 3 - 1)
        rsq = lam ** 3 * (2 - lam) ** 2 / ((2 - lam) ** 2 + (lam ** 3 - 1))
    elif preset == "vect2":
        s1sq = (2 - lam) ** 2 + lam ** 4 * (lam - 1)
        qsq = lam ** 2 * (lam - 1) * (lam ** 4 - (2 - lam) ** 2) / ((2 - lam) ** 2 + lam ** 4 * (lam - 1))
        rsq = lam ** 3 * (2 - lam) ** 2 / ((2 - lam) ** 2 + lam ** 4 * (lam - 1))
    else:
        raise DomainError(f"unknown preset {preset!r}")
    if min(s1sq, qsq, rsq) < 0.0:
        raise DomainError("negative radicand; lam is outside the open interval")
    return math.sqrt(s1sq), math.sqrt(qsq), math.sqrt(rsq)


def make_so7_vector(preset: str, lam: float, s1: float | None = None,
                    q: float | None = None, r: float | None = None) -> AlgebraElement:
    """One of the named so(7) vectors.

    "vect1" and "vect2" carry the closed-form weights; "lemma-vspom1" takes
    free (s1, q, r) and builds the same five-term combination.
    """
    if not 1.0 < lam < 2.0:
        raise DomainError(f"lam must lie in (1, 2), got {lam}")
    if preset in ("vect1", "vect2"):
        s1v, qv, rv = so7_vector_params(preset, lam)
    elif preset == "lemma-vspom1":
        if s1 is None or q is None or r is None:
            raise DomainError("preset 'lemma-vspom1' needs explicit s1, q, r")
        s1v, qv, rv = float(s1), float(q), float(r)
    else:
        raise DomainError(f"unknown preset {preset!r}")
    return _so7_combination(lam, s1v, qv, rv)


def make_sp_candidate(l: int, c: float, d: float, params: MetricParams) -> AlgebraElement:
    """c E_12 + d jG_1 - ((x2-x1)/x1) d jG_2 in sp(l)."""
    if l < 2:
        raise PreconditionError("need l >= 2")
    if c < 0.0 or d < 0.0:
        raise DomainError("c and d must be nonnegative")
    alg = algebras.sp(l)
    nu = (params.x2 - params.x1) / params.x1
    return (c * basis_element(alg, "E", 1, 2)
            + d * basis_element(alg, "jG", 1)
            - nu * d * basis_element(alg, "jG", 2))


def pinching_constant(x1, x2):
    """Sectional-curvature pinching ratio (x2 / 4 x1)^2 of the Sp family.

    Valid for 0 < x2 <= 2 x1; exact when the weights are exact rationals.
    The strict regime x1 < x2 < 2 x1 fills the open interval (1/16, 1/4),
    with 1/16 at x2 = x1 and 1/4 at x2 = 2 x1.
    """
    if not (x1 > 0 and 0 < x2 <= 2 * x1):
        raise DomainError("pinching formula needs 0 < x2 <= 2 x1")
    return (x2 / (4 * x1)) ** 2
