"""Adjoint-orbit invariants and the two delta-vector verdict routes.

Numerical search over the orbit can only REFUTE the maximality of a start
vector (by exhibiting a better point); it never certifies it.  Exact
certification is done by closed-form identities: the rational certificate
for the so(7) refutation instance and the three-case coefficient analysis
for the sp(l) candidates.  The characteristic-polynomial variable is called
z throughout; lam is reserved for the metric ratio x2/x1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction

import numpy as np

from . import kernels
from .algebras import AlgebraElement, embed_dpi
from .errors import DomainError, PreconditionError, SearchAbortedError
from .matrices import PolyCoeffs, skew_spectrum_so7
from .quaternions import QuaternionMatrix
from .spaces import (
    SPACE_SO,
    SPACE_SP,
    MetricParams,
    ReductiveDecomposition,
)

REFUTED = "refuted"
NOT_REFUTED = "not-refuted"

#: verdict margin: refuted iff best exceeds start by more than this
VERDICT_TOL = 1e-7


# ---------------------------------------------------------------------------
# orbit membership for so(7)
# ---------------------------------------------------------------------------

def same_orbit_so7(a, b, tol: float = 1e-8) -> bool:
    """Whether two skew 7x7 matrices are conjugate under the rotation group.

    Equivalent to coinciding characteristic polynomials; tested through the
    sorted rotation-rate triples.
    """
    am = a.matrix if isinstance(a, AlgebraElement) else a
    bm = b.matrix if isinstance(b, AlgebraElement) else b
    za = skew_spectrum_so7(am)
    zb = skew_spectrum_so7(bm)
    return all(abs(x - y) <= tol for x, y in zip(za, zb))


# ---------------------------------------------------------------------------
# exact rational certificate for the so(7) refutation instance
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IdentityCheck:
    name: str
    lhs: Fraction
    rhs: Fraction

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


@dataclass(frozen=True)
class RefutationCertificate:
    """Exact-rational witness that the two named so(7) vectors share an orbit
    while their weighted p-norms differ by a strictly positive gap."""

    lam: Fraction
    abc: tuple          # (a, b, c) squared weights of the first vector
    abc_tilde: tuple    # same for the second vector
    identities: tuple   # coefficient identities, degree by degree
    norm_start: Fraction      # a + 2 lam b      (first vector, over x1)
    norm_other: Fraction      # at + 2 lam bt    (second vector, over x1)
    gap: Fraction             # norm_other - norm_start
    gap_factored: Fraction    # 2 (2-lam)(lam^2-1)(lam-1)

    @property
    def exact(self) -> bool:
        return (all(idc.holds for idc in self.identities)
                and self.gap == self.gap_factored and self.gap > 0)


def _coerce_rational(lam) -> Fraction:
    if isinstance(lam, float):
        raise DomainError("lam must be an exact rational (Fraction, int pair, "
                          "or 'p/q' string), not a float")
    return Fraction(lam)


def vect_weight_squares(lam: Fraction):
    """Exact squared weights (a, b, c) and (at, bt, ct) as functions of lam."""
    lam = _coerce_rational(lam)
    a = lam ** 2 * ((2 - lam) ** 2 + lam ** 3 - 1)
    b = Fraction(1)
    c = lam ** 3 * (2 - lam) ** 2 / ((2 - lam) ** 2 + (lam ** 3 - 1))
    at = (2 - lam) ** 2 + lam ** 4 * (lam - 1)
    bt = lam ** 2
    ct = lam ** 3 * (2 - lam) ** 2 / ((2 - lam) ** 2 + lam ** 4 * (lam - 1))
    return (a, b, c), (at, bt, ct)


def charpoly_odd_coeffs(lam: Fraction, a, b, c):
    """Exact z^5, z^3, z^1 coefficients of the degree-7 polynomial attached
    to the five-term skew combination with squared weights (a, b, c)."""
    m2 = lam ** 2
    w2 = (2 - lam) ** 2
    return (a + b * (m2 + w2),
            a * b * w2 + a * c * m2 + b * b * m2 * w2,
            a * b * c * m2 * w2)


def refute_vspom4(lam) -> RefutationCertificate:
    """Exact certificate: coefficient identities plus the positive norm gap."""
    lam = _coerce_rational(lam)
    if not Fraction(1) < lam < Fraction(2):
        raise DomainError(f"lam must lie in (1, 2), got {lam}")
    (a, b, c), (at, bt, ct) = vect_weight_squares(lam)
    lhs = charpoly_odd_coeffs(lam, a, b, c)
    rhs = charpoly_odd_coeffs(lam, at, bt, ct)
    identities = tuple(IdentityCheck(nm, lv, rv)
                       for nm, lv, rv in zip(("z5-coefficient", "z3-coefficient",
                                              "z1-coefficient"), lhs, rhs))
    norm_start = a + 2 * lam * b
    norm_other = at + 2 * lam * bt
    gap = norm_other - norm_start
    gap_factored = 2 * (2 - lam) * (lam ** 2 - 1) * (lam - 1)
    return RefutationCertificate(lam, (a, b, c), (at, bt, ct), identities,
                                 norm_start, norm_other, gap, gap_factored)


# ---------------------------------------------------------------------------
# analytic characteristic polynomials for the sp(l) normal forms
# ---------------------------------------------------------------------------

def _poly_mul(p, q):
    out = [0 * (p[0] * q[0])] * (len(p) + len(q) - 1)
    for i, pv in enumerate(p):
        for j, qv in enumerate(q):
            out[i + j] = out[i + j] + pv * qv
    return out


def _nu_of(params) -> float | Fraction:
    if isinstance(params, MetricParams):
        return (params.x2 - params.x1) / params.x1
    x1, x2 = params
    return (x2 - x1) / x1


def pol_analytic(form: str, l: int, params=None, *, c=None, d=None,
                 ct=None, dt=None, alpha=None, alphas=()) -> PolyCoeffs:
    """Closed-form characteristic polynomial (degree 2l, monic) of the complex
    image of one of the sp(l) normal forms.

    form "W1": dt jG_1 + sum alphas[q] iG_q           (alphas has l-1 entries)
    form "W2": ct E_12 + alpha (iG_1 + iG_2) + tail   (alphas has l-2 entries)
    form "W3": ct E_12 + dt jG_1 - nu dt jG_2 + tail  (alphas has l-2 entries)
    form "W":  the search candidate, c E_12 + d jG_1 - nu d jG_2

    Exact when all inputs (including params as a rational (x1, x2) pair) are
    rationals; floating otherwise.
    """
    alphas = tuple(alphas)
    if form == "W1":
        if dt is None or len(alphas) != l - 1:
            raise PreconditionError("form W1 needs dt and l-1 tail weights")
        head = [1, 2 * dt ** 2]
        tail = alphas
    elif form == "W2":
        if ct is None or alpha is None or len(alphas) != l - 2:
            raise PreconditionError("form W2 needs ct, alpha and l-2 tail weights")
        head = [1, 2 * (ct ** 2 + 2 * alpha ** 2), (ct ** 2 - 2 * alpha ** 2) ** 2]
        tail = alphas
    elif form == "W3":
        if ct is None or dt is None or len(alphas) != l - 2 or params is None:
            raise PreconditionError("form W3 needs ct, dt, params and l-2 tail weights")
        nu = _nu_of(params)
        head = [1, 2 * (ct ** 2 + dt ** 2 + dt ** 2 * nu ** 2),
                (ct ** 2 + 2 * dt ** 2 * nu) ** 2]
        tail = alphas
    elif form == "W":
        if c is None or d is None or params is None:
            raise PreconditionError("form W needs c, d and params")
        nu = _nu_of(params)
        head = [1, 2 * (c ** 2 + d ** 2 + d ** 2 * nu ** 2),
                (c ** 2 + 2 * d ** 2 * nu) ** 2]
        tail = (0,) * (l - 2)
    else:
        raise PreconditionError(f"unknown form {form!r}")

    # head is a polynomial in z^2; tail factors are z^2 + 2 alpha^2
    poly2 = head
    for av in tail:
        poly2 = _poly_mul(poly2, [1, 2 * av ** 2])
    coeffs = []
    for v in poly2:
        coeffs.append(v)
        coeffs.append(0 * v)
    coeffs = coeffs[:-1]
    return PolyCoeffs(degree=2 * l, coeffs=tuple(coeffs))


# ---------------------------------------------------------------------------
# three-case coefficient analysis for the sp(l) candidates
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CaseAnalysisRecord:
    """One normal-form case: the matched coefficients and the slack by which
    the required norm inequality fails (positive means contradiction)."""

    case_id: int
    matched: dict
    contradiction_margin: float


def le_inequality(c: float, d: float, params: MetricParams) -> tuple[float, float]:
    """(lhs, rhs) of (|d|(2x1-x2) + sqrt(c^2 x1^2 + d^2 x2^2))^2 x2
    < 2 x1^2 (x1 c^2 + 2 x2 d^2); strict for c != 0, 0 < x2 < 2 x1."""
    x1, x2 = params.x1, params.x2
    lhs = (abs(d) * (2 * x1 - x2) + math.sqrt(c * c * x1 * x1 + d * d * x2 * x2)) ** 2 * x2
    rhs = 2 * x1 * x1 * (x1 * c * c + 2 * x2 * d * d)
    return lhs, rhs


def prop_main_cases(c: float, d: float, params: MetricParams) -> list[CaseAnalysisRecord]:
    """Match the candidate's polynomial against each normal form and certify
    the contradiction margin for every case; needs c, d > 0, x1 < x2 < 2 x1."""
    x1, x2 = params.x1, params.x2
    if not (c > 0.0 and d > 0.0):
        raise DomainError("c and d must be positive")
    if not (0.0 < x1 < x2 < 2.0 * x1):
        raise DomainError("parameters must satisfy 0 < x1 < x2 < 2 x1")
    nu = (x2 - x1) / x1
    start = x2 * d * d + x1 * c * c
    records = []

    # case 1: one diagonal tail weight survives;
    # dt^2 + aq^2 and 2 dt |aq| are pinned by the candidate's coefficients
    sum_sq = c * c + d * d + d * d * nu * nu
    prod2 = c * c + 2 * d * d * nu
    diff = d * (2 * x1 - x2) / x1          # |dt - |aq||
    tot = math.sqrt(2 * c * c + d * d * (x2 / x1) ** 2)   # dt + |aq|
    dt1 = 0.5 * (tot + diff)               # largest reachable dt
    aq1 = 0.5 * (tot - diff)
    ident_gap = abs((dt1 - aq1) ** 2 - diff * diff)
    lhs_le, rhs_le = le_inequality(c, d, params)
    margin1 = start - x2 * dt1 * dt1
    records.append(CaseAnalysisRecord(
        1,
        {"dt": dt1, "alpha_q": aq1, "sum_sq": sum_sq, "prod2": prod2,
         "identity_residual": ident_gap, "le_lhs": lhs_le, "le_rhs": rhs_le,
         "le_holds": lhs_le < rhs_le},
        margin1))

    # case 2: ct^2 + 2 alpha^2 and |ct^2 - 2 alpha^2| are pinned; the larger
    # root ct^2 = (sum + prod)/2 still loses because x1 (1 + nu^2) < x2
    ct2 = 0.5 * (sum_sq + prod2)
    alpha2 = 0.25 * (sum_sq - prod2)
    margin2 = start - x1 * (ct2 + 2 * alpha2)
    records.append(CaseAnalysisRecord(
        2,
        {"ct": math.sqrt(max(ct2, 0.0)), "alpha": math.sqrt(max(alpha2, 0.0)),
         "bound": x1 * (c * c + d * d * (1 + nu * nu))},
        margin2))

    # case 3: matching forces dt = d and ct = c exactly; the divisor
    # (1 - nu)^2 = ((2 x1 - x2)/x1)^2 is the strictly positive quantity that
    # pins the solution, so it is reported as the margin
    dt3_sq = (sum_sq - prod2) / ((1 - nu) ** 2)
    dt3 = math.sqrt(max(dt3_sq, 0.0))
    ct3 = math.sqrt(max(prod2 - 2 * dt3_sq * nu, 0.0))
    margin3 = (1 - nu) ** 2
    records.append(CaseAnalysisRecord(3, {"dt": dt3, "ct": ct3}, margin3))
    return records


# ---------------------------------------------------------------------------
# numerical orbit search
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SearchConfig:
    restarts: int = 64
    max_iters: int = 500
    step: float = 0.5
    seed: int = 0
    grad_tol: float = 1e-9


@dataclass(frozen=True)
class DeltaSearchReport:
    start_value: float
    best_value: float
    best_group_element: object
    restarts_used: int
    iterations: int
    verdict: str
    certificate: object = None

    def with_certificate(self, certificate) -> "DeltaSearchReport":
        verdict = self.verdict
        if certificate is not None and getattr(certificate, "exact", False):
            verdict = REFUTED
        return replace(self, certificate=certificate, verdict=verdict)


def _restart_rng(seed: int, idx: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(idx,)))


def _random_so_group(n: int, rng) -> np.ndarray:
    from .matrices import _haar_from_rng

    return _haar_from_rng(n, rng)


def _random_sp_group_image(l: int, rng) -> np.ndarray:
    x = rng.standard_normal((l, l)) + 1j * rng.standard_normal((l, l))
    x = 0.5 * (x - x.conj().T)
    y = rng.standard_normal((l, l)) + 1j * rng.standard_normal((l, l))
    y = 0.5 * (y + y.T)
    uimg = np.block([[x, -y.conj()], [y, x.conj()]])
    n = 2 * l
    return np.linalg.solve(np.eye(n) - 0.5 * uimg, np.eye(n) + 0.5 * uimg)


def delta_search(decomp: ReductiveDecomposition, params: MetricParams,
                 w: AlgebraElement, cfg: SearchConfig = SearchConfig()) -> DeltaSearchReport:
    """Multi-start first-order ascent of the weighted p-norm over the orbit.

    Deterministic for a fixed seed: restart k draws its start point from a
    child stream keyed by (seed, k), restart 0 starts at the identity, and
    results are reduced by max, so the report does not depend on execution
    order.  A verdict of "refuted" means a strictly better orbit point was
    found; "not-refuted" is not a certificate of maximality.
    """
    if w.algebra != decomp.algebra:
        raise PreconditionError("vector must live in the decomposition's algebra")
    l = decomp.l
    x1, x2 = params.x1, params.x2
    if decomp.space == SPACE_SO:
        n = 2 * l + 1
        w_mat = np.asarray(w.matrix, dtype=float)
        start = kernels.so_value(w_mat, l, x1, x2)
        ascend, random_group = kernels.so_ascent, _random_so_group
        ident = np.eye(n)
    elif decomp.space == SPACE_SP:
        n = 2 * l
        w_mat = embed_dpi(l, w)
        start = kernels.sp_value(w_mat, l, x1, x2)
        ascend = kernels.sp_ascent
        random_group = _random_sp_group_image
        ident = np.eye(n, dtype=complex)
    else:
        raise PreconditionError(f"unknown space {decomp.space!r}")

    best_f = -math.inf
    best_q = ident
    total_iters = 0
    for idx in range(cfg.restarts):
        if idx == 0:
            q0 = ident
            v0 = w_mat
        else:
            rng = _restart_rng(cfg.seed, idx)
            q0 = random_group(n if decomp.space == SPACE_SO else l, rng)
            v0 = q0 @ w_mat @ q0.conj().T
        f, _, q, iters = ascend(v0, q0, l, x1, x2, cfg.step, cfg.max_iters,
                                cfg.grad_tol)
        total_iters += iters
        if not math.isfinite(f):
            partial = DeltaSearchReport(start, best_f, best_q, idx, total_iters,
                                        NOT_REFUTED)
            raise SearchAbortedError(
                f"restart {idx} produced a non-finite objective", partial)
        if f > best_f:
            best_f = f
            best_q = q

    if decomp.space == SPACE_SP:
        best_group = QuaternionMatrix.from_complex_image(best_q)
    else:
        best_group = best_q
    verdict = REFUTED if best_f > start + VERDICT_TOL else NOT_REFUTED
    return DeltaSearchReport(start_value=float(start), best_value=float(best_f),
                             best_group_element=best_group,
                             restarts_used=cfg.restarts, iterations=total_iters,
                             verdict=verdict)
