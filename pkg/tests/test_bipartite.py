import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from entdetect.bipartite import (
    BipartiteDims,
    partial_trace,
    partial_transpose,
    realign,
    reduced_from_spectral,
    vec_row,
)
from entdetect.matcore import hs_norm, kron, trace_norm
from entdetect.states import max_entangled, random_density

dims_st = st.tuples(st.integers(2, 4), st.integers(2, 4))


def rand_complex(rng, m, n=None):
    n = m if n is None else n
    return rng.standard_normal((m, n)) + 1j * rng.standard_normal((m, n))


# Loop oracles written straight from the index formulas.
def loop_partial_trace(rho, da, db, keep):
    if keep == "A":
        out = np.zeros((da, da), dtype=complex)
        for m in range(da):
            for n in range(da):
                out[m, n] = sum(rho[m * db + mu, n * db + mu] for mu in range(db))
    else:
        out = np.zeros((db, db), dtype=complex)
        for mu in range(db):
            for nu in range(db):
                out[mu, nu] = sum(rho[m * db + mu, m * db + nu] for m in range(da))
    return out


def loop_partial_transpose(rho, da, db, side):
    out = np.zeros_like(rho)
    for m in range(da):
        for mu in range(db):
            for n in range(da):
                for nu in range(db):
                    if side == "B":
                        out[m * db + mu, n * db + nu] = rho[m * db + nu, n * db + mu]
                    else:
                        out[m * db + mu, n * db + nu] = rho[n * db + mu, m * db + nu]
    return out


def loop_realign(rho, da, db):
    out = np.zeros((da * da, db * db), dtype=complex)
    for m in range(da):
        for mu in range(db):
            for n in range(da):
                for nu in range(db):
                    out[m * da + n, mu * db + nu] = rho[m * db + mu, n * db + nu]
    return out


def test_dims_validation():
    with pytest.raises(ValueError):
        BipartiteDims(1, 3)
    with pytest.raises(ValueError):
        partial_trace(np.eye(5), (2, 2))


def test_partial_trace_bell():
    np.testing.assert_allclose(partial_trace(max_entangled(2).mat, (2, 2), "A"), np.eye(2) / 2, atol=1e-15)


def test_partial_trace_product():
    rng = np.random.default_rng(0)
    a, b = rand_complex(rng, 3), rand_complex(rng, 2)
    np.testing.assert_allclose(partial_trace(kron(a, b), (3, 2), "A"), a * np.trace(b), atol=1e-12)
    np.testing.assert_allclose(partial_trace(kron(a, b), (3, 2), "B"), b * np.trace(a), atol=1e-12)


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), dims=dims_st)
def test_partial_trace_matches_loop_and_keeps_trace(seed, dims):
    da, db = dims
    rho = rand_complex(np.random.default_rng(seed), da * db)
    for keep in "AB":
        out = partial_trace(rho, dims, keep)
        np.testing.assert_allclose(out, loop_partial_trace(rho, da, db, keep), atol=1e-12)
        assert abs(np.trace(out) - np.trace(rho)) <= 1e-12 * max(1, abs(np.trace(rho)))


def test_reduced_from_spectral_trivial():
    prod = np.zeros((4, 4))
    prod[0, 0] = 1
    ra, rb = reduced_from_spectral(prod, (2, 2))
    np.testing.assert_allclose(ra, np.diag([1, 0]), atol=1e-14)
    np.testing.assert_allclose(rb, np.diag([1, 0]), atol=1e-14)
    ra, rb = reduced_from_spectral(max_entangled(2).mat, (2, 2))
    np.testing.assert_allclose(ra, np.eye(2) / 2, atol=1e-14)
    np.testing.assert_allclose(rb, np.eye(2) / 2, atol=1e-14)


@pytest.mark.parametrize("dims", [(3, 2), (3, 3), (2, 4)])
def test_reduced_from_spectral_matches_partial_trace(dims):
    rho = random_density(dims, seed=11).mat
    ra, rb = reduced_from_spectral(rho, dims)
    assert trace_norm(ra - partial_trace(rho, dims, "A")) <= 1e-10
    assert trace_norm(rb - partial_trace(rho, dims, "B")) <= 1e-10


def test_partial_transpose_product():
    rng = np.random.default_rng(3)
    a, b = rand_complex(rng, 2), rand_complex(rng, 3)
    np.testing.assert_array_equal(partial_transpose(kron(a, b), (2, 3), "B"), kron(a, b.T))
    np.testing.assert_array_equal(partial_transpose(kron(a, b), (2, 3), "A"), kron(a.T, b))


def test_partial_transpose_bell_is_half_swap():
    swap = np.zeros((4, 4))
    for i in range(2):
        for j in range(2):
            swap[i * 2 + j, j * 2 + i] = 1
    pt = partial_transpose(max_entangled(2).mat, (2, 2), "B")
    np.testing.assert_allclose(pt, swap / 2, atol=1e-15)
    assert np.linalg.eigvalsh(pt)[0] == pytest.approx(-0.5)


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), dims=dims_st)
def test_partial_transpose_matches_loop(seed, dims):
    da, db = dims
    rng = np.random.default_rng(seed)
    g = rand_complex(rng, da * db)
    h = g + g.conj().T
    for side in "AB":
        out = partial_transpose(h, dims, side)
        np.testing.assert_array_equal(out, loop_partial_transpose(h, da, db, side))
        np.testing.assert_array_equal(out, out.conj().T)
        assert np.trace(out) == np.trace(h)
        np.testing.assert_array_equal(partial_transpose(out, dims, side), h)


def test_realign_product_is_rank_one():
    rng = np.random.default_rng(4)
    a = random_density((3, 2), seed=1)
    ra, rb = partial_trace(a.mat, (3, 2), "A"), partial_trace(a.mat, (3, 2), "B")
    r = realign(kron(ra, rb), (3, 2))
    np.testing.assert_allclose(r, vec_row(ra) @ vec_row(rb).T, atol=1e-15)
    assert np.linalg.matrix_rank(r, tol=1e-12) == 1
    assert trace_norm(r) == pytest.approx(hs_norm(ra) * hs_norm(rb), abs=1e-12)
    del rng


@pytest.mark.parametrize("d", [2, 3, 4])
def test_realign_max_entangled(d):
    r = realign(max_entangled(d).mat, (d, d))
    np.testing.assert_allclose(r, np.eye(d * d) / d, atol=1e-15)
    assert trace_norm(r) == pytest.approx(d)


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), dims=dims_st)
def test_realign_matches_loop_and_keeps_hs_norm(seed, dims):
    da, db = dims
    rho = rand_complex(np.random.default_rng(seed), da * db)
    out = realign(rho, dims)
    assert out.shape == (da * da, db * db)
    np.testing.assert_array_equal(out, loop_realign(rho, da, db))
    assert abs(hs_norm(out) - hs_norm(rho)) <= 1e-12 * hs_norm(rho)


@settings(max_examples=50, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), dims=dims_st, k=st.integers(1, 4))
def test_realign_of_sum_of_products(seed, dims, k):
    da, db = dims
    rng = np.random.default_rng(seed)
    terms = [(rand_complex(rng, da), rand_complex(rng, db)) for _ in range(k)]
    c = sum(kron(a, b) for a, b in terms)
    oracle = sum(vec_row(a) @ vec_row(b).T for a, b in terms)
    assert hs_norm(realign(c, dims) - oracle) <= 1e-12 * max(1.0, hs_norm(oracle))


def test_vec_row():
    np.testing.assert_array_equal(vec_row(np.eye(2)), np.array([[1], [0], [0], [1]]))
    np.testing.assert_array_equal(vec_row([[1, 2], [3, 4]]), np.array([[1], [2], [3], [4]]))


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), m=st.integers(1, 4), n=st.integers(1, 4))
def test_vec_inner_product_is_trace_product(seed, m, n):
    rng = np.random.default_rng(seed)
    a, b = rand_complex(rng, m, n), rand_complex(rng, m, n)
    lhs = (vec_row(a).conj().T @ vec_row(b))[0, 0]
    assert abs(lhs - np.trace(a.conj().T @ b)) <= 1e-12 * max(1.0, abs(lhs))


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), dims=dims_st)
def test_partial_trace_contracts_trace_distance(seed, dims):
    rho = random_density(dims, seed).mat
    sigma = random_density(dims, seed + 1).mat
    dist = trace_norm(rho - sigma)
    for keep in "AB":
        assert trace_norm(partial_trace(rho, dims, keep) - partial_trace(sigma, dims, keep)) <= dist + 1e-10


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), dims=dims_st)
def test_partial_transpose_bounded_in_trace_norm(seed, dims):
    rho = random_density(dims, seed).mat
    sigma = random_density(dims, seed + 1).mat
    delta = rho - sigma
    pt = partial_transpose(delta, dims, "B")
    assert trace_norm(pt) <= min(dims) * trace_norm(delta) + 1e-10
    assert np.max(np.abs(pt)) == np.max(np.abs(delta))


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), dims=dims_st)
def test_purity_is_squared_hs_norm(seed, dims):
    rho = random_density(dims, seed).mat
    ra = partial_trace(rho, dims, "A")
    assert abs(np.trace(ra @ ra).real - hs_norm(ra) ** 2) <= 1e-12
