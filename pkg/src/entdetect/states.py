"""State constructors: generic random states, separable mixtures and the
3x3 PPT-entangled family with its noisy and tail-extended variants.

The tail extension lives on ``(3 + n_tail) ⊗ (3 + n_tail)``: the 3x3 state
sits in the top-left corner (local levels 0, 1, 2) and the separable tail
occupies the diagonal product levels ``|i i'>`` for ``i >= 3``.
"""

from dataclasses import dataclass, field

import numpy as np

from .bipartite import BipartiteDims
from .matcore import eig_hermitian
from .validation import check_density_array

DEFAULT_TAIL_RATIO = 0.5


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """A validated density matrix together with its bipartite dimensions.

    Construction fails with :class:`~entdetect.validation.InvalidStateError`
    if the matrix is not Hermitian (1e-10), PSD (-1e-9) and of unit trace (1e-9).
    The stored array is the Hermitian part of the input and is read-only.
    """

    mat: np.ndarray
    dims: BipartiteDims = field(default=None)

    def __post_init__(self):
        dims = BipartiteDims.coerce(self.dims)
        arr = check_density_array(self.mat, dims)
        arr.setflags(write=False)
        object.__setattr__(self, "mat", arr)
        object.__setattr__(self, "dims", dims)

    def __array__(self, dtype=None, copy=None):
        return self.mat if dtype is None else self.mat.astype(dtype)

    def __repr__(self):
        return f"DensityMatrix(dims=({self.dims.d_a}, {self.dims.d_b}))"


@dataclass(frozen=True)
class ExampleParams:
    """Parameters of the tail-extended example state.

    ``n_tail = 0`` means the bare 3x3 state, which only makes sense with ``c = 1``.
    """

    a: float
    epsilon: float = 1.0
    c: float = 1.0
    n_tail: int = 0
    tail_ratio: float = DEFAULT_TAIL_RATIO

    def __post_init__(self):
        if not 0 < self.a < 1:
            raise ValueError(f"a must lie in (0, 1), got {self.a}")
        if not 0 <= self.epsilon <= 1:
            raise ValueError(f"epsilon must lie in [0, 1], got {self.epsilon}")
        if not 0 <= self.c <= 1:
            raise ValueError(f"c must lie in [0, 1], got {self.c}")
        if int(self.n_tail) != self.n_tail or self.n_tail < 0:
            raise ValueError(f"n_tail must be a non-negative integer, got {self.n_tail}")
        if self.n_tail == 0 and self.c != 1:
            raise ValueError(f"c = {self.c} < 1 needs a tail (n_tail >= 1)")
        if not 0 < self.tail_ratio < 1:
            raise ValueError(f"tail_ratio must lie in (0, 1), got {self.tail_ratio}")


def horodecki(a):
    """The 3x3 PPT entangled state with parameter ``0 < a < 1``.

    Basis order is ``|00'>, |01'>, ..., |22'>``. The state is ``M / (8a + 1)``
    where ``M`` has ``a`` on the diagonal except ``(1 + a) / 2`` at
    ``|20'>`` and ``|22'>``, ``a`` on the couplings between ``|00'>``,
    ``|11'>``, ``|22'>``, and ``sqrt(1 - a^2) / 2`` between ``|20'>`` and ``|22'>``.
    """
    if not 0 < a < 1:
        raise ValueError(f"a must lie in (0, 1), got {a}")
    m = np.diag(np.full(9, a, dtype=np.complex128))
    m[6, 6] = m[8, 8] = (1 + a) / 2
    for i, j in ((0, 4), (0, 8), (4, 8)):
        m[i, j] = m[j, i] = a
    m[6, 8] = m[8, 6] = np.sqrt(1 - a * a) / 2
    return DensityMatrix(m / (8 * a + 1), BipartiteDims(3, 3))


def rho_eps(a, epsilon):
    """Mix :func:`horodecki` with white noise: ``eps * rho + (1 - eps) * I/9``."""
    if not 0 <= epsilon <= 1:
        raise ValueError(f"epsilon must lie in [0, 1], got {epsilon}")
    mat = epsilon * horodecki(a).mat + (1 - epsilon) * np.eye(9) / 9
    return DensityMatrix(mat, BipartiteDims(3, 3))


def tail_weights(n_tail, tail_ratio=DEFAULT_TAIL_RATIO):
    """Geometric weights ``p_i ∝ tail_ratio**i`` over ``n_tail`` levels, summing to one."""
    if int(n_tail) != n_tail or n_tail < 1:
        raise ValueError(f"n_tail must be a positive integer, got {n_tail}")
    if not 0 < tail_ratio < 1:
        raise ValueError(f"tail_ratio must lie in (0, 1), got {tail_ratio}")
    p = tail_ratio ** np.arange(int(n_tail), dtype=float)
    return p / p.sum()


def _tail_array(n_tail, tail_ratio):
    p = tail_weights(n_tail, tail_ratio)
    d = 3 + int(n_tail)
    mat = np.zeros((d * d, d * d), dtype=np.complex128)
    for k, w in enumerate(p):
        i = 3 + k
        mat[i * d + i, i * d + i] = w
    return mat, BipartiteDims(d, d)


def tail_sigma(n_tail, tail_ratio=DEFAULT_TAIL_RATIO):
    """Separable diagonal state ``sum_i p_i |i i'><i i'|`` on levels ``3 .. 2 + n_tail``."""
    return DensityMatrix(*_tail_array(n_tail, tail_ratio))


def _embed_array(mat, small, dims):
    t = np.zeros((dims.d_a, dims.d_b, dims.d_a, dims.d_b), dtype=np.complex128)
    t[: small.d_a, : small.d_b, : small.d_a, : small.d_b] = mat.reshape(
        small.d_a, small.d_b, small.d_a, small.d_b
    )
    return t.reshape(dims.total, dims.total)


def embed(rho, dims):
    """Place ``rho`` in the low-index corner of a larger bipartite space ``dims``.

    Local level ``m`` of each factor keeps its label, so the padded
    levels are simply unused.
    """
    dims = BipartiteDims.coerce(dims)
    if dims.d_a < rho.dims.d_a or dims.d_b < rho.dims.d_b:
        raise ValueError(f"cannot embed {rho.dims} into smaller {dims}")
    return DensityMatrix(_embed_array(rho.mat, rho.dims, dims), dims)


def rho_eps_c(params):
    """``c * rho_eps + (1 - c) * sigma`` on ``(3 + n_tail) ⊗ (3 + n_tail)``."""
    if params.n_tail < 1:
        raise ValueError("rho_eps_c needs n_tail >= 1")
    sigma, dims = _tail_array(params.n_tail, params.tail_ratio)
    core = _embed_array(rho_eps(params.a, params.epsilon).mat, BipartiteDims(3, 3), dims)
    return DensityMatrix(params.c * core + (1 - params.c) * sigma, dims)


def example_state(params):
    """The example state for ``params``: bare 3x3 when ``n_tail == 0``, tail-extended otherwise."""
    if params.n_tail == 0:
        return rho_eps(params.a, params.epsilon)
    return rho_eps_c(params)


def _ginibre(rng, rows, cols):
    return rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))


def random_density(dims, seed, rank=None):
    """Seeded Ginibre density ``G G^dagger / Tr(G G^dagger)``.

    ``G`` is ``D x rank`` with ``D = d_a * d_b``; the default ``rank = D``
    gives a full-rank state with probability one.
    """
    dims = BipartiteDims.coerce(dims)
    rng = np.random.default_rng(seed)
    g = _ginibre(rng, dims.total, dims.total if rank is None else int(rank))
    gg = g @ g.conj().T
    return DensityMatrix(gg / np.trace(gg).real, dims)


def _random_pure(rng, d):
    psi = _ginibre(rng, d, 1)[:, 0]
    psi /= np.linalg.norm(psi)
    return np.outer(psi, psi.conj())


def random_separable(dims, k_terms, seed):
    """Seeded mixture ``sum_i p_i rho_i^A ⊗ rho_i^B`` of ``k_terms`` pure product states.

    Weights are drawn from a flat Dirichlet distribution.
    """
    dims = BipartiteDims.coerce(dims)
    if int(k_terms) != k_terms or k_terms < 1:
        raise ValueError(f"k_terms must be a positive integer, got {k_terms}")
    rng = np.random.default_rng(seed)
    weights = rng.dirichlet(np.ones(int(k_terms)))
    mat = np.zeros((dims.total, dims.total), dtype=np.complex128)
    for w in weights:
        mat += w * np.kron(_random_pure(rng, dims.d_a), _random_pure(rng, dims.d_b))
    return DensityMatrix(mat, dims)


def max_entangled(d):
    """``|Phi><Phi|`` with ``|Phi> = sum_i |ii> / sqrt(d)``."""
    if int(d) != d or d < 2:
        raise ValueError(f"d must be an integer >= 2, got {d}")
    d = int(d)
    phi = np.eye(d, dtype=np.complex128).reshape(-1) / np.sqrt(d)
    return DensityMatrix(np.outer(phi, phi.conj()), BipartiteDims(d, d))


def random_unitary(d, seed):
    """Eigenvector matrix of a seeded random Hermitian matrix."""
    rng = np.random.default_rng(seed)
    g = _ginibre(rng, d, d)
    _, v = eig_hermitian((g + g.conj().T) / 2)
    return v


def local_unitary(rho, u, v):
    """``(U ⊗ V) rho (U ⊗ V)^dagger``."""
    w = np.kron(u, v)
    return DensityMatrix(w @ rho.mat @ w.conj().T, rho.dims)
