"""Pure-numpy ascent kernels for adjoint-orbit maximization.

Reference implementation of the compiled kernels in ``_ascent.pyx``; both
expose the same two entry points and must follow the same step policy so the
backends stay interchangeable.

The objective is f(V) = x1 |V_p1|^2 + x2 |V_p2|^2 in the algebra inner
product, maximized over the conjugation orbit of V.  Its gradient at V along
the orthonormal basis is the commutator [V, Pi(V)] with Pi the weighted
block projection, so one iteration is: project, bracket, Cayley step with
halving on non-increase (step capped at step0, regrown after acceptance).
"""

from __future__ import annotations

import numpy as np

BACKEND = "python"

_HALVING_FLOOR = 2.0 ** -60


# ---------------------------------------------------------------------------
# SO(2l+1)/U(l): V real skew (2l+1) x (2l+1)
# ---------------------------------------------------------------------------

def so_value(v: np.ndarray, l: int, x1: float, x2: float) -> float:
    n = 2 * l + 1
    f1 = float(np.sum(v[: n - 1, n - 1] ** 2))
    p = v[:l, :l]
    q = v[:l, l:2 * l]
    s = v[l:2 * l, l:2 * l]
    lm = 0.5 * (p - s)
    nm = 0.5 * (q - q.T)
    return x1 * f1 + x2 * float(np.sum(lm * lm) + np.sum(nm * nm))


def so_project(v: np.ndarray, l: int, x1: float, x2: float) -> np.ndarray:
    n = 2 * l + 1
    pi = np.zeros_like(v)
    pi[: n - 1, n - 1] = x1 * v[: n - 1, n - 1]
    pi[n - 1, : n - 1] = x1 * v[n - 1, : n - 1]
    p = v[:l, :l]
    q = v[:l, l:2 * l]
    s = v[l:2 * l, l:2 * l]
    lm = 0.5 * (p - s)
    nm = 0.5 * (q - q.T)
    pi[:l, :l] = x2 * lm
    pi[l:2 * l, l:2 * l] = -x2 * lm
    pi[:l, l:2 * l] = x2 * nm
    pi[l:2 * l, :l] = x2 * nm
    return pi


def so_ascent(v0: np.ndarray, q0: np.ndarray, l: int, x1: float, x2: float,
              step0: float, max_iters: int, gtol: float):
    """Returns (f_best, V, Q, iterations)."""
    n = 2 * l + 1
    v = np.array(v0, dtype=float)
    q = np.array(q0, dtype=float)
    eye = np.eye(n)
    f = so_value(v, l, x1, x2)
    t = step0
    iters = 0
    for _ in range(max_iters):
        pi = so_project(v, l, x1, x2)
        u = v @ pi - pi @ v
        g = np.sqrt(0.5 * np.sum(u * u))
        if g < gtol:
            break
        iters += 1
        d = u / g
        improved = False
        while t > step0 * _HALVING_FLOOR:
            try:
                c = np.linalg.solve(eye - 0.5 * t * d, eye + 0.5 * t * d)
            except np.linalg.LinAlgError:
                t *= 0.5
                continue
            vt = c @ v @ c.T
            ft = so_value(vt, l, x1, x2)
            if ft > f:
                v, f = vt, ft
                q = c @ q
                t = min(2.0 * t, step0)
                improved = True
                break
            t *= 0.5
        if not improved:
            break
    return f, v, q, iters


# ---------------------------------------------------------------------------
# Sp(l)/(U(1) x Sp(l-1)): V = complex 2l x 2l image of a quaternionic-skew
# matrix; the algebra inner product is a quarter of the Frobenius one.
# ---------------------------------------------------------------------------

def _sp_masks(l: int):
    s1 = np.concatenate([np.arange(1, l), np.arange(l + 1, 2 * l)])
    return s1


def sp_value(m: np.ndarray, l: int, x1: float, x2: float) -> float:
    s1 = _sp_masks(l)
    f1 = (np.sum(np.abs(m[0, s1]) ** 2) + np.sum(np.abs(m[s1, 0]) ** 2)
          + np.sum(np.abs(m[l, s1]) ** 2) + np.sum(np.abs(m[s1, l]) ** 2))
    f2 = abs(m[0, l]) ** 2 + abs(m[l, 0]) ** 2
    return 0.25 * (x1 * float(f1) + x2 * float(f2))


def sp_project(m: np.ndarray, l: int, x1: float, x2: float) -> np.ndarray:
    s1 = _sp_masks(l)
    pi = np.zeros_like(m)
    pi[0, s1] = x1 * m[0, s1]
    pi[s1, 0] = x1 * m[s1, 0]
    pi[l, s1] = x1 * m[l, s1]
    pi[s1, l] = x1 * m[s1, l]
    pi[0, l] = x2 * m[0, l]
    pi[l, 0] = x2 * m[l, 0]
    return pi


def sp_ascent(m0: np.ndarray, q0: np.ndarray, l: int, x1: float, x2: float,
              step0: float, max_iters: int, gtol: float):
    """Returns (f_best, M, Q, iterations); all matrices are 2l x 2l complex."""
    n = 2 * l
    m = np.array(m0, dtype=complex)
    q = np.array(q0, dtype=complex)
    eye = np.eye(n, dtype=complex)
    f = sp_value(m, l, x1, x2)
    t = step0
    iters = 0
    for _ in range(max_iters):
        pi = sp_project(m, l, x1, x2)
        u = m @ pi - pi @ m
        g = np.sqrt(0.25 * np.sum(np.abs(u) ** 2))
        if g < gtol:
            break
        iters += 1
        d = u / g
        improved = False
        while t > step0 * _HALVING_FLOOR:
            try:
                c = np.linalg.solve(eye - 0.5 * t * d, eye + 0.5 * t * d)
            except np.linalg.LinAlgError:
                t *= 0.5
                continue
            mt = c @ m @ c.conj().T
            ft = sp_value(mt, l, x1, x2)
            if ft > f:
                m, f = mt, ft
                q = c @ q
                t = min(2.0 * t, step0)
                improved = True
                break
            t *= 0.5
        if not improved:
            break
    return f, m, q, iters
