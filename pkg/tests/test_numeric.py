import numpy as np
import pytest

from schwinger_su3 import numeric
from schwinger_su3.basis import traceless_project
from schwinger_su3.poly import Polynomial, bargmann_inner, monomials_of_bidegree


def test_haar_sampler_is_deterministic():
    a = numeric.haar_random_su3(42)
    b = numeric.haar_random_su3(42)
    assert np.array_equal(a, b)
    assert not np.array_equal(a, numeric.haar_random_su3(43))


def test_haar_sampler_is_special_unitary():
    for seed in range(20):
        a = numeric.haar_random_su3(seed)
        assert np.max(np.abs(a.conj().T @ a - np.eye(3))) < 1e-12
        assert abs(np.linalg.det(a) - 1) < 1e-12


def test_haar_first_entry_moment():
    total = 0.0
    n = 10_000
    for seed in range(n):
        a = numeric.haar_random_su3(seed)
        total += abs(a[0, 0]) ** 2
    assert abs(total / n - 1 / 3) < 0.02


def test_identity_acts_trivially():
    f = {(2, 1, 0, 0, 1, 1): 1.5 + 0.5j}
    out = numeric.act_bargmann(np.eye(3, dtype=complex), f)
    assert numeric.n_max_abs(numeric.n_add(out, f, -1.0)) < 1e-14


def test_zw_is_invariant():
    zw = {
        (1, 0, 0, 1, 0, 0): 1.0 + 0j,
        (0, 1, 0, 0, 1, 0): 1.0 + 0j,
        (0, 0, 1, 0, 0, 1): 1.0 + 0j,
    }
    for seed in range(10):
        a = numeric.haar_random_su3(seed)
        out = numeric.act_bargmann(a, zw)
        assert numeric.n_max_abs(numeric.n_add(out, zw, -1.0)) < 1e-10


def test_action_preserves_inner_product_and_bidegree():
    f = {(2, 0, 0, 1, 0, 0): 1.0 + 0j, (1, 1, 0, 0, 1, 0): -0.5 + 0.25j}
    g = {(2, 0, 0, 0, 1, 0): 0.75 + 0j, (0, 2, 0, 1, 0, 0): 1.0 - 1.0j}
    for seed in range(10):
        a = numeric.haar_random_su3(seed)
        uf, ug = numeric.act_bargmann(a, f), numeric.act_bargmann(a, g)
        assert abs(numeric.n_inner(uf, ug) - numeric.n_inner(f, g)) < 1e-10
        assert all(m[0] + m[1] + m[2] == 2 and m[3] + m[4] + m[5] == 1 for m in uf)


def test_representation_property():
    worst = 0.0
    for seed in range(10):
        a = numeric.haar_random_su3(seed)
        b = numeric.haar_random_su3(1000 + seed)
        for m in ((1, 0, 0, 0, 0, 0), (1, 1, 0, 0, 1, 0), (2, 0, 1, 1, 1, 1)):
            f = {m: 1.0 + 0j}
            lhs = numeric.act_bargmann(a, numeric.act_bargmann(b, f))
            rhs = numeric.act_bargmann(a @ b, f)
            worst = max(worst, numeric.n_max_abs(numeric.n_add(lhs, rhs, -1.0)))
    assert worst < 1e-9


def test_tensor_transform_vector_channel():
    for seed in range(5):
        a = numeric.haar_random_su3(seed)
        f = {(1, 0, 0, 0, 0, 0): 1.0 + 0j}
        out = numeric.tensor_transform(a, f)
        coeffs = np.zeros(3, dtype=complex)
        for m, c in out.items():
            coeffs[m.index(1)] = c
        want = a @ np.array([1.0, 0.0, 0.0], dtype=complex)
        assert np.max(np.abs(coeffs - want)) < 1e-12


def test_tensor_transform_matches_point_action():
    # for unitary A, conj(A) equals transpose of the inverse, which converts
    # the coefficient (tensor) rule into the point-substitution rule
    f = {
        (2, 0, 0, 1, 1, 0): 1.0 + 0j,
        (1, 1, 0, 0, 2, 0): -0.5 + 0.5j,
        (0, 0, 2, 1, 0, 1): 0.25 + 0j,
    }
    for seed in range(10):
        a = numeric.haar_random_su3(seed)
        lhs = numeric.tensor_transform(a, f)
        rhs = numeric.act_bargmann(a.conj(), f)
        assert numeric.n_max_abs(numeric.n_add(lhs, rhs, -1.0)) < 1e-10


def test_tensor_transform_requires_bihomogeneous():
    with pytest.raises(ValueError):
        numeric.tensor_transform(
            np.eye(3, dtype=complex),
            {(1, 0, 0, 0, 0, 0): 1.0, (1, 1, 0, 0, 0, 0): 1.0},
        )


def test_traceless_shadow_and_invariance():
    exact = traceless_project(
        Polynomial.monomial((1, 1, 0, 1, 0, 1)) + Polynomial.monomial((2, 0, 0, 0, 1, 1))
    )
    shadow = numeric.from_exact(exact)
    assert numeric.n_max_abs(numeric.n_kminus(shadow)) < 1e-12
    for seed in range(10):
        a = numeric.haar_random_su3(seed)
        moved = numeric.tensor_transform(a, shadow)
        assert numeric.n_max_abs(numeric.n_kminus(moved)) < 1e-10


def test_numeric_projector_matches_exact():
    f_exact = Polynomial.monomial((1, 0, 1, 0, 1, 1)) + Polynomial.monomial(
        (0, 2, 0, 1, 1, 0)
    )
    got = numeric.n_traceless_project(numeric.from_exact(f_exact), 2, 2)
    want = numeric.from_exact(traceless_project(f_exact))
    assert numeric.n_max_abs(numeric.n_add(got, want, -1.0)) < 1e-12


def test_equivariance_defect():
    assert numeric.equivariance_defect(np.eye(3, dtype=complex), (1, 1)) == 0.0
    for seed in range(5):
        a = numeric.haar_random_su3(seed)
        assert numeric.equivariance_defect(a, (1, 1)) < 1e-10
        assert numeric.equivariance_defect(a, (2, 2)) < 1e-10


def test_sphere_action_matches_bargmann_on_traceless():
    # the induced-picture action commutes with the channelwise equivalence
    # scaling, so on trace-free inputs both pictures move coefficients alike
    exact = traceless_project(Polynomial.monomial((1, 1, 0, 0, 1, 1)))
    shadow = numeric.from_exact(exact)
    for seed in range(10):
        a = numeric.haar_random_su3(seed)
        lhs = numeric.act_sphere(a, shadow)
        rhs = numeric.act_bargmann(a, shadow)
        assert numeric.n_max_abs(numeric.n_add(lhs, rhs, -1.0)) < 1e-9
        assert numeric.n_max_abs(numeric.n_kminus(lhs)) < 1e-9


def test_inner_product_shadow_matches_exact():
    f = Polynomial.monomial((2, 0, 0, 1, 0, 0), 3) + Polynomial.monomial(
        (1, 1, 0, 0, 1, 0)
    )
    exact = float(bargmann_inner(f, f))
    got = numeric.n_inner(numeric.from_exact(f), numeric.from_exact(f))
    assert abs(got - exact) < 1e-12
    assert len(list(monomials_of_bidegree(2, 1))) == 18
