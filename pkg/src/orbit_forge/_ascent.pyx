# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled ascent kernels for adjoint-orbit maximization.

Same contract and step policy as the pure-numpy fallback in ``_ascent_py``:
f(V) = x1 |V_p1|^2 + x2 |V_p2|^2 over the conjugation orbit, gradient
[V, Pi(V)], Cayley steps with halving on non-increase (capped regrowth).
Matrices are small (n <= 16), so plain triple loops beat BLAS dispatch.
"""

from libc.math cimport sqrt

import numpy as np

BACKEND = "cython"

DEF HALVING_FLOOR = 8.673617379884035e-19  # 2^-60


# ---------------------------------------------------------------------------
# real helpers
# ---------------------------------------------------------------------------

cdef void _rmatmul(double[:, ::1] a, double[:, ::1] b, double[:, ::1] out, int n) noexcept nogil:
    cdef int i, j, k
    cdef double acc
    for i in range(n):
        for j in range(n):
            acc = 0.0
            for k in range(n):
                acc += a[i, k] * b[k, j]
            out[i, j] = acc


cdef void _rmatmul_bt(double[:, ::1] a, double[:, ::1] b, double[:, ::1] out, int n) noexcept nogil:
    # out = a @ b.T
    cdef int i, j, k
    cdef double acc
    for i in range(n):
        for j in range(n):
            acc = 0.0
            for k in range(n):
                acc += a[i, k] * b[j, k]
            out[i, j] = acc


cdef int _rsolve(double[:, ::1] a, double[:, ::1] b, int n) noexcept nogil:
    # Gauss-Jordan with partial pivoting; solves A X = B in place of B.
    # Returns 0 on success, -1 on a (numerically) singular pivot.
    cdef int i, j, k, piv
    cdef double best, mag, inv, factor, tmp
    for k in range(n):
        piv = k
        best = a[k, k] if a[k, k] >= 0 else -a[k, k]
        for i in range(k + 1, n):
            mag = a[i, k] if a[i, k] >= 0 else -a[i, k]
            if mag > best:
                best = mag
                piv = i
        if best < 1e-300:
            return -1
        if piv != k:
            for j in range(n):
                tmp = a[k, j]; a[k, j] = a[piv, j]; a[piv, j] = tmp
                tmp = b[k, j]; b[k, j] = b[piv, j]; b[piv, j] = tmp
        inv = 1.0 / a[k, k]
        for j in range(n):
            a[k, j] *= inv
            b[k, j] *= inv
        for i in range(n):
            if i == k:
                continue
            factor = a[i, k]
            if factor != 0.0:
                for j in range(n):
                    a[i, j] -= factor * a[k, j]
                    b[i, j] -= factor * b[k, j]
    return 0


cdef double _so_value(double[:, ::1] v, int l, double x1, double x2) noexcept nogil:
    cdef int n = 2 * l + 1
    cdef int i, j
    cdef double f1 = 0.0, f2 = 0.0, lm, nm
    for i in range(n - 1):
        f1 += v[i, n - 1] * v[i, n - 1]
    for i in range(l):
        for j in range(l):
            lm = 0.5 * (v[i, j] - v[l + i, l + j])
            nm = 0.5 * (v[i, l + j] - v[j, l + i])
            f2 += lm * lm + nm * nm
    return x1 * f1 + x2 * f2


cdef void _so_project(double[:, ::1] v, double[:, ::1] pi, int l,
                      double x1, double x2) noexcept nogil:
    cdef int n = 2 * l + 1
    cdef int i, j
    cdef double lm, nm
    for i in range(n):
        for j in range(n):
            pi[i, j] = 0.0
    for i in range(n - 1):
        pi[i, n - 1] = x1 * v[i, n - 1]
        pi[n - 1, i] = x1 * v[n - 1, i]
    for i in range(l):
        for j in range(l):
            lm = 0.5 * (v[i, j] - v[l + i, l + j])
            nm = 0.5 * (v[i, l + j] - v[j, l + i])
            pi[i, j] = x2 * lm
            pi[l + i, l + j] = -x2 * lm
            pi[i, l + j] = x2 * nm
            pi[l + i, j] = x2 * nm


def so_ascent(v0, q0, int l, double x1, double x2, double step0,
              int max_iters, double gtol):
    """Returns (f_best, V, Q, iterations); mirrors _ascent_py.so_ascent."""
    cdef int n = 2 * l + 1
    v_arr = np.array(v0, dtype=np.float64, order="C")
    q_arr = np.array(q0, dtype=np.float64, order="C")
    pi_arr = np.empty((n, n)); u_arr = np.empty((n, n))
    a_arr = np.empty((n, n)); c_arr = np.empty((n, n))
    t1_arr = np.empty((n, n)); vt_arr = np.empty((n, n)); qt_arr = np.empty((n, n))
    cdef double[:, ::1] v = v_arr, q = q_arr, pi = pi_arr, u = u_arr
    cdef double[:, ::1] a = a_arr, c = c_arr, t1 = t1_arr, vt = vt_arr, qt = qt_arr
    cdef double f, g, t, ft, half
    cdef int it, i, j, iters = 0
    cdef bint improved
    with nogil:
        f = _so_value(v, l, x1, x2)
        t = step0
        for it in range(max_iters):
            _so_project(v, pi, l, x1, x2)
            _rmatmul(v, pi, t1, n)
            _rmatmul(pi, v, u, n)
            g = 0.0
            for i in range(n):
                for j in range(n):
                    u[i, j] = t1[i, j] - u[i, j]
                    g += u[i, j] * u[i, j]
            g = sqrt(0.5 * g)
            if g < gtol:
                break
            iters += 1
            improved = False
            while t > step0 * HALVING_FLOOR:
                half = 0.5 * t / g
                for i in range(n):
                    for j in range(n):
                        a[i, j] = -half * u[i, j]
                        c[i, j] = half * u[i, j]
                    a[i, i] += 1.0
                    c[i, i] += 1.0
                if _rsolve(a, c, n) != 0:
                    t *= 0.5
                    continue
                _rmatmul(c, v, t1, n)
                _rmatmul_bt(t1, c, vt, n)
                ft = _so_value(vt, l, x1, x2)
                if ft > f:
                    for i in range(n):
                        for j in range(n):
                            v[i, j] = vt[i, j]
                    _rmatmul(c, q, qt, n)
                    for i in range(n):
                        for j in range(n):
                            q[i, j] = qt[i, j]
                    f = ft
                    t = 2.0 * t if 2.0 * t < step0 else step0
                    improved = True
                    break
                t *= 0.5
            if not improved:
                break
    return f, v_arr, q_arr, iters


# ---------------------------------------------------------------------------
# complex helpers
# ---------------------------------------------------------------------------

cdef void _cmatmul(double complex[:, ::1] a, double complex[:, ::1] b,
                   double complex[:, ::1] out, int n) noexcept nogil:
    cdef int i, j, k
    cdef double complex acc
    for i in range(n):
        for j in range(n):
            acc = 0.0
            for k in range(n):
                acc += a[i, k] * b[k, j]
            out[i, j] = acc


cdef void _cmatmul_bh(double complex[:, ::1] a, double complex[:, ::1] b,
                      double complex[:, ::1] out, int n) noexcept nogil:
    # out = a @ b.conj().T
    cdef int i, j, k
    cdef double complex acc
    for i in range(n):
        for j in range(n):
            acc = 0.0
            for k in range(n):
                acc += a[i, k] * b[j, k].conjugate()
            out[i, j] = acc


cdef inline double _cmag2(double complex z) noexcept nogil:
    return z.real * z.real + z.imag * z.imag


cdef int _csolve(double complex[:, ::1] a, double complex[:, ::1] b, int n) noexcept nogil:
    cdef int i, j, k, piv
    cdef double best, mag
    cdef double complex inv, factor, tmp
    for k in range(n):
        piv = k
        best = _cmag2(a[k, k])
        for i in range(k + 1, n):
            mag = _cmag2(a[i, k])
            if mag > best:
                best = mag
                piv = i
        if best < 1e-300:
            return -1
        if piv != k:
            for j in range(n):
                tmp = a[k, j]; a[k, j] = a[piv, j]; a[piv, j] = tmp
                tmp = b[k, j]; b[k, j] = b[piv, j]; b[piv, j] = tmp
        inv = 1.0 / a[k, k]
        for j in range(n):
            a[k, j] = a[k, j] * inv
            b[k, j] = b[k, j] * inv
        for i in range(n):
            if i == k:
                continue
            factor = a[i, k]
            if factor != 0.0:
                for j in range(n):
                    a[i, j] = a[i, j] - factor * a[k, j]
                    b[i, j] = b[i, j] - factor * b[k, j]
    return 0


cdef double _sp_value(double complex[:, ::1] m, int l, double x1, double x2) noexcept nogil:
    cdef int b
    cdef double f1 = 0.0, f2
    for b in range(1, 2 * l):
        if b == l:
            continue
        f1 += _cmag2(m[0, b]) + _cmag2(m[b, 0]) + _cmag2(m[l, b]) + _cmag2(m[b, l])
    f2 = _cmag2(m[0, l]) + _cmag2(m[l, 0])
    return 0.25 * (x1 * f1 + x2 * f2)


cdef void _sp_project(double complex[:, ::1] m, double complex[:, ::1] pi,
                      int l, double x1, double x2) noexcept nogil:
    cdef int n = 2 * l
    cdef int i, j, b
    for i in range(n):
        for j in range(n):
            pi[i, j] = 0.0
    for b in range(1, n):
        if b == l:
            continue
        pi[0, b] = x1 * m[0, b]
        pi[b, 0] = x1 * m[b, 0]
        pi[l, b] = x1 * m[l, b]
        pi[b, l] = x1 * m[b, l]
    pi[0, l] = x2 * m[0, l]
    pi[l, 0] = x2 * m[l, 0]


def sp_ascent(m0, q0, int l, double x1, double x2, double step0,
              int max_iters, double gtol):
    """Returns (f_best, M, Q, iterations); mirrors _ascent_py.sp_ascent."""
    cdef int n = 2 * l
    m_arr = np.array(m0, dtype=np.complex128, order="C")
    q_arr = np.array(q0, dtype=np.complex128, order="C")
    pi_arr = np.empty((n, n), dtype=np.complex128)
    u_arr = np.empty((n, n), dtype=np.complex128)
    a_arr = np.empty((n, n), dtype=np.complex128)
    c_arr = np.empty((n, n), dtype=np.complex128)
    t1_arr = np.empty((n, n), dtype=np.complex128)
    mt_arr = np.empty((n, n), dtype=np.complex128)
    qt_arr = np.empty((n, n), dtype=np.complex128)
    cdef double complex[:, ::1] m = m_arr, q = q_arr, pi = pi_arr, u = u_arr
    cdef double complex[:, ::1] a = a_arr, c = c_arr, t1 = t1_arr, mt = mt_arr, qt = qt_arr
    cdef double f, g, t, ft, half
    cdef int it, i, j, iters = 0
    cdef bint improved
    with nogil:
        f = _sp_value(m, l, x1, x2)
        t = step0
        for it in range(max_iters):
            _sp_project(m, pi, l, x1, x2)
            _cmatmul(m, pi, t1, n)
            _cmatmul(pi, m, u, n)
            g = 0.0
            for i in range(n):
                for j in range(n):
                    u[i, j] = t1[i, j] - u[i, j]
                    g += _cmag2(u[i, j])
            g = sqrt(0.25 * g)
            if g < gtol:
                break
            iters += 1
            improved = False
            while t > step0 * HALVING_FLOOR:
                half = 0.5 * t / g
                for i in range(n):
                    for j in range(n):
                        a[i, j] = -half * u[i, j]
                        c[i, j] = half * u[i, j]
                    a[i, i] = a[i, i] + 1.0
                    c[i, i] = c[i, i] + 1.0
                if _csolve(a, c, n) != 0:
                    t *= 0.5
                    continue
                _cmatmul(c, m, t1, n)
                _cmatmul_bh(t1, c, mt, n)
                ft = _sp_value(mt, l, x1, x2)
                if ft > f:
                    for i in range(n):
                        for j in range(n):
                            m[i, j] = mt[i, j]
                    _cmatmul(c, q, qt, n)
                    for i in range(n):
                        for j in range(n):
                            q[i, j] = qt[i, j]
                    f = ft
                    t = 2.0 * t if 2.0 * t < step0 else step0
                    improved = True
                    break
                t *= 0.5
            if not improved:
                break
    return f, m_arr, q_arr, iters
