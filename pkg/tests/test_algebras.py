import math

import numpy as np
import pytest

from orbit_forge import algebras
from orbit_forge.algebras import (
    adjoint,
    basis_element,
    element_from_coords,
    element_from_matrix,
    embed_dpi,
    embed_sigma,
    embed_tau_prime,
    invariant_inner,
    random_element,
    random_group_element,
    trace_form,
)
from orbit_forge.errors import PreconditionError
from orbit_forge.matrices import bracket, haar_orthogonal
from orbit_forge.quaternions import QuaternionMatrix

SQ2 = math.sqrt(2.0)


def test_dimensions():
    assert algebras.so(7).dim == 21
    assert algebras.so(11).dim == 55
    assert algebras.sp(2).dim == 10
    assert algebras.sp(4).dim == 36
    assert algebras.u(3).dim == 9
    assert algebras.su(6).dim == 35


@pytest.mark.parametrize("alg", [algebras.so(5), algebras.sp(2), algebras.sp(3),
                                 algebras.u(3), algebras.su(4)])
def test_basis_gram_is_identity(alg):
    gram = np.array([[trace_form(alg.family, a, b) for b in alg.basis]
                     for a in alg.basis])
    assert np.abs(gram - np.eye(alg.dim)).max() < 1e-12


@pytest.mark.parametrize("alg", [algebras.so(5), algebras.sp(2), algebras.u(3),
                                 algebras.su(3)])
def test_bracket_closure(alg):
    rng = np.random.default_rng(1)
    for _ in range(5):
        a = random_element(alg, rng)
        b = random_element(alg, rng)
        el = element_from_matrix(alg, bracket(a.matrix, b.matrix))
        dev = el.matrix - bracket(a.matrix, b.matrix)
        gap = dev.max_abs() if isinstance(dev, QuaternionMatrix) else np.abs(dev).max()
        assert gap < 1e-10


def test_basis_element_so7():
    alg = algebras.so(7)
    el = basis_element(alg, "F_skew", 1, 2)
    expect = np.zeros((7, 7))
    expect[0, 1] = 1.0
    expect[1, 0] = -1.0
    assert np.array_equal(el.matrix, expect)


def test_basis_element_sp_diag():
    alg = algebras.sp(2)
    el = basis_element(alg, "jG", 1)
    assert el.matrix.entry(0, 0).allclose(SQ2 * __import__("orbit_forge").quaternions.J)
    assert el.matrix.entry(1, 1).norm() == 0.0
    assert invariant_inner(basis_element(alg, "iG", 1),
                           basis_element(alg, "iG", 1)) == 1.0


def test_basis_element_errors():
    with pytest.raises(PreconditionError):
        basis_element(algebras.so(7), "iG", 1)
    with pytest.raises(PreconditionError):
        basis_element(algebras.sp(2), "F_skew", 1, 2)
    with pytest.raises(PreconditionError):
        basis_element(algebras.sp(2), "E", 2, 1)
    with pytest.raises(PreconditionError):
        basis_element(algebras.sp(2), "E", 1, 3)


def test_element_from_matrix_rejects_outsiders():
    with pytest.raises(PreconditionError):
        element_from_matrix(algebras.so(3), np.eye(3))


def test_inner_product_mismatch_raises():
    a = random_element(algebras.so(5), np.random.default_rng(0))
    b = random_element(algebras.so(7), np.random.default_rng(0))
    with pytest.raises(TypeError):
        invariant_inner(a, b)


def test_ad_invariance_so():
    alg = algebras.so(7)
    rng = np.random.default_rng(2)
    for seed in range(20):
        q = haar_orthogonal(7, seed)
        a = random_element(alg, rng)
        b = random_element(alg, rng)
        assert abs(invariant_inner(adjoint(q, a), adjoint(q, b))
                   - invariant_inner(a, b)) < 1e-10


def test_ad_invariance_sp():
    alg = algebras.sp(3)
    rng = np.random.default_rng(3)
    for _ in range(20):
        q = random_group_element(alg, rng)
        a = random_element(alg, rng)
        b = random_element(alg, rng)
        assert abs(invariant_inner(adjoint(q, a), adjoint(q, b))
                   - invariant_inner(a, b)) < 1e-10


def test_adjoint_identity_and_permutation():
    alg = algebras.so(7)
    x = basis_element(alg, "F_skew", 1, 2)
    assert np.abs(adjoint(np.eye(7), x).coords - x.coords).max() < 1e-14
    # rotation exchanging axes 1 and 3 sends F[1,2] to -F[3,2] = F[2,3]
    perm = np.eye(7)
    perm[0, 0] = perm[2, 2] = 0.0
    perm[0, 2] = perm[2, 0] = 1.0
    perm[6, 6] = -1.0  # keep determinant +1
    img = adjoint(perm, x)
    expect = basis_element(alg, "F_skew", 2, 3)
    assert np.abs(np.abs(img.coords) - expect.coords).max() < 1e-14


def test_adjoint_rejects_non_group():
    alg = algebras.so(5)
    x = random_element(alg, np.random.default_rng(1))
    with pytest.raises(PreconditionError):
        adjoint(2.0 * np.eye(5), x)
    refl = np.eye(5)
    refl[0, 0] = -1.0
    with pytest.raises(PreconditionError):
        adjoint(refl, x)


# ---------------------------------------------------------------------------
# embeddings
# ---------------------------------------------------------------------------

def test_tau_prime_smallest_case():
    m = np.array([[1j * 0.7]])
    img = embed_tau_prime(1, m)
    expect = np.array([[0.0, 0.7, 0.0], [-0.7, 0.0, 0.0], [0.0, 0.0, 0.0]])
    assert np.abs(img.matrix - expect).max() < 1e-14


def test_tau_prime_u3_display_pattern():
    vals = dict(a=1.0, b=2.0, c=3.0, d=4.0, e=5.0, f=6.0, g=7.0, h=8.0, k=9.0)
    a = np.array([[0, vals["a"], vals["b"]],
                  [-vals["a"], 0, vals["c"]],
                  [-vals["b"], -vals["c"], 0]])
    b = np.array([[vals["d"], vals["e"], vals["f"]],
                  [vals["e"], vals["g"], vals["h"]],
                  [vals["f"], vals["h"], vals["k"]]])
    img = embed_tau_prime(3, a + 1j * b).matrix
    expect = np.zeros((7, 7))
    expect[:3, :3] = a
    expect[:3, 3:6] = b
    expect[3:6, :3] = -b
    expect[3:6, 3:6] = a
    assert np.array_equal(img, expect)
    # spot entries against the displayed pattern
    assert img[0, 5] == vals["f"] and img[2, 3] == vals["f"]
    assert img[1, 5] == vals["h"] and img[2, 4] == vals["h"]


def test_tau_prime_is_homomorphism():
    rng = np.random.default_rng(4)
    ul = algebras.u(3)
    for _ in range(50):
        a = random_element(ul, rng)
        b = random_element(ul, rng)
        lhs = embed_tau_prime(3, a.bracket(b)).matrix
        rhs = bracket(embed_tau_prime(3, a).matrix, embed_tau_prime(3, b).matrix)
        assert np.abs(lhs - rhs).max() < 1e-11


def test_tau_prime_rejects_malformed():
    with pytest.raises(PreconditionError):
        embed_tau_prime(2, np.eye(2, dtype=complex))


def test_sigma_block_layout():
    m, l = 1, 3
    k = l - m
    som, sok = algebras.so(2 * m + 1), algebras.so(2 * k)
    rng = np.random.default_rng(5)
    q1 = random_element(som, rng)
    q2 = random_element(sok, rng)
    img = embed_sigma(m, l, q1, q2).matrix
    idx1 = [0, 3, 6]
    idx2 = [1, 2, 4, 5]
    assert np.abs(img[np.ix_(idx1, idx1)] - q1.matrix).max() < 1e-14
    assert np.abs(img[np.ix_(idx2, idx2)] - q2.matrix).max() < 1e-14
    mask = np.ones((7, 7), dtype=bool)
    mask[np.ix_(idx1, idx1)] = False
    mask[np.ix_(idx2, idx2)] = False
    assert np.abs(img[mask]).max() == 0.0


def test_sigma_zero_second_factor_commutes_with_torus_block():
    m, l = 1, 3
    k = l - m
    som, sok = algebras.so(2 * m + 1), algebras.so(2 * k)
    rng = np.random.default_rng(6)
    zero2 = element_from_matrix(sok, np.zeros((2 * k, 2 * k)))
    q1 = random_element(som, rng)
    img = embed_sigma(m, l, q1, zero2).matrix
    # the image must commute with every element supported on the second slots
    for q2 in (random_element(sok, rng) for _ in range(5)):
        other = embed_sigma(m, l, element_from_matrix(
            som, np.zeros((2 * m + 1, 2 * m + 1))), q2).matrix
        assert np.abs(bracket(img, other)).max() < 1e-12


def test_sigma_is_homomorphism():
    m, l = 2, 4
    k = l - m
    som, sok = algebras.so(2 * m + 1), algebras.so(2 * k)
    rng = np.random.default_rng(7)
    for _ in range(50):
        a1, b1 = random_element(som, rng), random_element(som, rng)
        a2, b2 = random_element(sok, rng), random_element(sok, rng)
        lhs = embed_sigma(m, l, a1.bracket(b1), a2.bracket(b2)).matrix
        rhs = bracket(embed_sigma(m, l, a1, a2).matrix,
                      embed_sigma(m, l, b1, b2).matrix)
        assert np.abs(lhs - rhs).max() < 1e-11


def test_sigma_complement_alignment():
    # the image of the complement of so(2m) inside so(2m+1) is exactly the
    # intersection of the image with the complement of so(2l)
    m, l = 1, 3
    k = l - m
    som, sok = algebras.so(2 * m + 1), algebras.so(2 * k)
    rng = np.random.default_rng(8)
    zero2 = element_from_matrix(sok, np.zeros((2 * k, 2 * k)))
    for _ in range(50):
        q1 = random_element(som, rng)
        img = embed_sigma(m, l, q1, zero2).matrix
        tail = np.zeros_like(img)
        tail[:, -1] = img[:, -1]
        tail[-1, :] = img[-1, :]
        small = np.zeros((2 * m + 1, 2 * m + 1))
        small[:, -1] = q1.matrix[:, -1]
        small[-1, :] = q1.matrix[-1, :]
        other = embed_sigma(m, l, element_from_matrix(som, small), zero2).matrix
        assert np.abs(tail - other).max() < 1e-13


def test_sigma_rejects_bad_ranks():
    with pytest.raises(PreconditionError):
        embed_sigma(3, 3, np.zeros((7, 7)), np.zeros((0, 0)))


def test_dpi_basis_images():
    l = 3
    alg = algebras.sp(l)
    img = embed_dpi(l, basis_element(alg, "iG", 1))
    expect = np.zeros((2 * l, 2 * l), dtype=complex)
    expect[0, 0] = 1j * SQ2
    expect[l, l] = -1j * SQ2
    assert np.abs(img - expect).max() < 1e-14

    img = embed_dpi(l, basis_element(alg, "jG", 1))
    expect = np.zeros((2 * l, 2 * l), dtype=complex)
    expect[0, l] = -SQ2
    expect[l, 0] = SQ2
    assert np.abs(img - expect).max() < 1e-14

    img = embed_dpi(l, basis_element(alg, "kG", 2))
    expect = np.zeros((2 * l, 2 * l), dtype=complex)
    expect[1, l + 1] = -1j * SQ2
    expect[l + 1, 1] = -1j * SQ2
    assert np.abs(img - expect).max() < 1e-14

    img = embed_dpi(l, basis_element(alg, "E", 1, 2))
    expect = np.zeros((2 * l, 2 * l), dtype=complex)
    expect[0, 1] = 1.0
    expect[1, 0] = -1.0
    expect[l, l + 1] = 1.0
    expect[l + 1, l] = -1.0
    assert np.abs(img - expect).max() < 1e-14

    img = embed_dpi(l, basis_element(alg, "jF", 1, 2))
    expect = np.zeros((2 * l, 2 * l), dtype=complex)
    expect[l, 1] = 1.0
    expect[1, l] = -1.0
    expect[l + 1, 0] = 1.0
    expect[0, l + 1] = -1.0
    assert np.abs(img - expect).max() < 1e-14


def test_dpi_image_is_skew_hermitian_traceless():
    rng = np.random.default_rng(9)
    for l in (2, 3, 4):
        w = random_element(algebras.sp(l), rng)
        img = embed_dpi(l, w)
        assert np.abs(img + img.conj().T).max() < 1e-12
        assert abs(np.trace(img)) < 1e-12


def test_dpi_is_homomorphism_sp3():
    rng = np.random.default_rng(10)
    alg = algebras.sp(3)
    for _ in range(100):
        a = random_element(alg, rng)
        b = random_element(alg, rng)
        lhs = embed_dpi(3, a.bracket(b))
        rhs = bracket(embed_dpi(3, a), embed_dpi(3, b))
        assert np.abs(lhs - rhs).max() < 1e-11


def test_dpi_isometry_constant():
    rng = np.random.default_rng(11)
    alg = algebras.sp(3)
    ratios = []
    for _ in range(100):
        a = random_element(alg, rng)
        b = random_element(alg, rng)
        den = invariant_inner(a, b)
        if abs(den) < 1e-6:
            continue
        num = float(-0.5 * np.trace(embed_dpi(3, a) @ embed_dpi(3, b)).real)
        ratios.append(num / den)
    spread = (max(ratios) - min(ratios)) / abs(np.mean(ratios))
    assert spread < 1e-9
    assert abs(np.mean(ratios) - 2.0) < 1e-12


def test_embeddings_are_injective():
    # coordinate-rank checks: the embedded basis stays linearly independent
    ul = algebras.u(3)
    imgs = np.stack([embed_tau_prime(3, element_from_coords(ul, row)).coords
                     for row in np.eye(ul.dim)])
    assert np.linalg.matrix_rank(imgs, tol=1e-10) == ul.dim
    spl = algebras.sp(2)
    imgs = np.stack([embed_dpi(2, element_from_coords(spl, row)).flatten()
                     for row in np.eye(spl.dim)])
    assert np.linalg.matrix_rank(np.concatenate([imgs.real, imgs.imag], axis=1),
                                 tol=1e-10) == spl.dim
