import numpy as np
import pytest

from orbit_forge import _ascent_py, kernels
from orbit_forge.algebras import embed_dpi, random_element
from orbit_forge.matrices import haar_orthogonal
from orbit_forge.spaces import (
    SPACE_SO,
    SPACE_SP,
    MetricParams,
    build_decomposition,
    delta_objective,
    make_so7_vector,
    make_sp_candidate,
)

cython_kernel = kernels.available_backends().get("cython")
needs_cython = pytest.mark.skipif(cython_kernel is None,
                                  reason="compiled kernel not built")


def test_backend_selected():
    assert kernels.BACKEND in ("cython", "python")


# ---------------------------------------------------------------------------
# the mask-based kernel objective must agree with the basis-projection route
# ---------------------------------------------------------------------------

def test_so_value_matches_basis_projection():
    dec = build_decomposition(SPACE_SO, 3)
    params = MetricParams(1.0, 1.7)
    rng = np.random.default_rng(0)
    for _ in range(20):
        w = random_element(dec.algebra, rng)
        fast = _ascent_py.so_value(np.asarray(w.matrix), 3, params.x1, params.x2)
        slow = delta_objective(dec, params, w)
        assert abs(fast - slow) < 1e-12 * max(1.0, slow)


def test_sp_value_matches_basis_projection():
    for l in (2, 4):
        dec = build_decomposition(SPACE_SP, l)
        params = MetricParams(0.8, 1.3)
        rng = np.random.default_rng(1)
        for _ in range(20):
            w = random_element(dec.algebra, rng)
            fast = _ascent_py.sp_value(embed_dpi(l, w), l, params.x1, params.x2)
            slow = delta_objective(dec, params, w)
            assert abs(fast - slow) < 1e-12 * max(1.0, slow)


def test_so_projection_matches_block_split():
    dec = build_decomposition(SPACE_SO, 3)
    params = MetricParams(1.0, 1.7)
    rng = np.random.default_rng(2)
    for _ in range(10):
        w = random_element(dec.algebra, rng)
        x, y, _ = dec.split(w)
        expect = params.x1 * np.asarray(x.matrix) + params.x2 * np.asarray(y.matrix)
        fast = _ascent_py.so_project(np.asarray(w.matrix), 3, params.x1, params.x2)
        assert np.abs(fast - expect).max() < 1e-12


def test_sp_projection_matches_block_split():
    l = 3
    dec = build_decomposition(SPACE_SP, l)
    params = MetricParams(1.0, 1.7)
    rng = np.random.default_rng(3)
    for _ in range(10):
        w = random_element(dec.algebra, rng)
        x, y, _ = dec.split(w)
        expect = params.x1 * embed_dpi(l, x) + params.x2 * embed_dpi(l, y)
        fast = _ascent_py.sp_project(embed_dpi(l, w), l, params.x1, params.x2)
        assert np.abs(fast - expect).max() < 1e-12


# ---------------------------------------------------------------------------
# backend parity
# ---------------------------------------------------------------------------

@needs_cython
def test_backends_agree_so():
    w = np.asarray(make_so7_vector("vect1", 1.5).matrix)
    q0 = haar_orthogonal(7, 11)
    v0 = q0 @ w @ q0.T
    f_py, v_py, q_py, it_py = _ascent_py.so_ascent(v0, q0, 3, 1.0, 1.5, 0.5, 500, 1e-9)
    f_cy, v_cy, q_cy, it_cy = cython_kernel.so_ascent(v0, q0, 3, 1.0, 1.5, 0.5, 500, 1e-9)
    assert abs(f_py - f_cy) < 1e-7
    assert it_py > 0 and it_cy > 0


@needs_cython
def test_backends_agree_sp():
    params = MetricParams(1.0, 1.5)
    w = embed_dpi(2, make_sp_candidate(2, 1.0, 1.0, params))
    rng = np.random.default_rng(4)
    x = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    x = 0.5 * (x - x.conj().T)
    y = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    y = 0.5 * (y + y.T)
    u = np.block([[x, -y.conj()], [y, x.conj()]])
    q0 = np.linalg.solve(np.eye(4) - 0.5 * u, np.eye(4) + 0.5 * u)
    v0 = q0 @ w @ q0.conj().T
    f_py, _, _, _ = _ascent_py.sp_ascent(v0, q0, 2, 1.0, 1.5, 0.5, 500, 1e-9)
    f_cy, _, _, _ = cython_kernel.sp_ascent(v0, q0, 2, 1.0, 1.5, 0.5, 500, 1e-9)
    assert abs(f_py - f_cy) < 1e-7
    # neither backend may exceed the known orbit maximum
    assert max(f_py, f_cy) <= 2.5 + 1e-9


@needs_cython
def test_backends_preserve_group_element_consistency():
    w = np.asarray(make_so7_vector("vect1", 1.5).matrix)
    q0 = haar_orthogonal(7, 23)
    v0 = q0 @ w @ q0.T
    for kern in (_ascent_py, cython_kernel):
        f, v, q, _ = kern.so_ascent(v0, q0, 3, 1.0, 1.5, 0.5, 500, 1e-9)
        # V == Q W Q^T and Q orthogonal throughout
        assert np.abs(q @ w @ q.T - v).max() < 1e-9
        assert np.abs(q @ q.T - np.eye(7)).max() < 1e-9
        assert abs(_ascent_py.so_value(v, 3, 1.0, 1.5) - f) < 1e-12


def test_ascent_stops_at_critical_point():
    # geodesic vectors are critical points; the identity start must not move
    w = np.asarray(make_so7_vector("vect1", 1.5).matrix)
    f, v, q, iters = kernels.so_ascent(w, np.eye(7), 3, 1.0, 1.5, 0.5, 500, 1e-9)
    assert iters == 0
    assert abs(f - 285 / 32) < 1e-12
