"""Structural maps on operators of a bipartite space H_A ⊗ H_B.

A bipartite operator of side ``d_a * d_b`` is addressed as
``rho[(m, mu), (n, nu)]`` with row index ``m * d_b + mu``. Viewing it as a
4-index tensor ``T[m, mu, n, nu]`` every map below is either a sum over a
pair of indices (partial trace) or a pure permutation of indices
(partial transpose, realignment); the permutations copy entries unchanged.
"""

from dataclasses import dataclass

import numpy as np

from .matcore import as_matrix, eig_hermitian

SPECTRAL_CUTOFF = 1e-14


@dataclass(frozen=True)
class BipartiteDims:
    d_a: int
    d_b: int

    def __post_init__(self):
        for name in ("d_a", "d_b"):
            value = getattr(self, name)
            if int(value) != value or value < 2:
                raise ValueError(f"{name} must be an integer >= 2, got {value!r}")
            object.__setattr__(self, name, int(value))

    @property
    def total(self):
        return self.d_a * self.d_b

    @classmethod
    def coerce(cls, dims):
        if isinstance(dims, cls):
            return dims
        d_a, d_b = dims
        return cls(d_a, d_b)

    def check(self, rho, name="rho"):
        """Return ``rho`` as a complex square matrix whose side is ``d_a * d_b``."""
        rho = as_matrix(rho, name)
        if rho.shape != (self.total, self.total):
            raise ValueError(
                f"{name} has shape {rho.shape}, expected ({self.total}, {self.total}) for dims "
                f"{self.d_a}x{self.d_b}"
            )
        return rho


def _tensor(rho, dims):
    dims = BipartiteDims.coerce(dims)
    return dims, dims.check(rho).reshape(dims.d_a, dims.d_b, dims.d_a, dims.d_b)


def _side(tag):
    tag = str(tag).upper()
    if tag not in ("A", "B"):
        raise ValueError(f"subsystem tag must be 'A' or 'B', got {tag!r}")
    return tag


def partial_trace(rho, dims, keep="A"):
    """Reduced operator on the kept subsystem.

    ``keep="A"`` sums over the B index: ``out[m, n] = sum_mu rho[(m, mu), (n, mu)]``.
    ``keep="B"`` sums over the A index: ``out[mu, nu] = sum_m rho[(m, mu), (m, nu)]``.
    """
    _, t = _tensor(rho, dims)
    if _side(keep) == "A":
        return np.einsum("ajbj->ab", t)
    return np.einsum("iaib->ab", t)


def reduced_from_spectral(rho, dims):
    """Both reduced states from the spectral decomposition of ``rho``.

    Each eigenvector ``psi_i`` is folded row-major into a ``d_a x d_b``
    coefficient matrix ``D_i``; then ``rho_A = sum p_i D_i D_i^dagger`` and
    ``rho_B = sum p_i D_i^T conj(D_i)``. The latter is the transpose of
    ``D_i^dagger D_i``: same spectrum, but only the transpose matches
    ``Tr_A`` entrywise in the product basis. Eigenvalues below ``1e-14`` are
    dropped. This is an independent route to :func:`partial_trace`.
    """
    dims = BipartiteDims.coerce(dims)
    w, v = eig_hermitian(dims.check(rho))
    rho_a = np.zeros((dims.d_a, dims.d_a), dtype=np.complex128)
    rho_b = np.zeros((dims.d_b, dims.d_b), dtype=np.complex128)
    for p, psi in zip(w, v.T):
        if p < SPECTRAL_CUTOFF:
            continue
        coeffs = psi.reshape(dims.d_a, dims.d_b)
        rho_a += p * coeffs @ coeffs.conj().T
        rho_b += p * coeffs.T @ coeffs.conj()
    return rho_a, rho_b


def partial_transpose(rho, dims, side="B"):
    """Transpose one tensor factor in the fixed product basis.

    ``side="B"``: ``out[(m, mu), (n, nu)] = rho[(m, nu), (n, mu)]``.
    ``side="A"``: ``out[(m, mu), (n, nu)] = rho[(n, mu), (m, nu)]``.
    """
    dims, t = _tensor(rho, dims)
    if _side(side) == "B":
        out = t.transpose(0, 3, 2, 1)
    else:
        out = t.transpose(2, 1, 0, 3)
    return out.reshape(dims.total, dims.total).copy()


def realign(rho, dims):
    """Realignment ``out[(m, n), (mu, nu)] = rho[(m, mu), (n, nu)]``.

    The result has ``d_a**2`` rows (index ``m * d_a + n``) and ``d_b**2``
    columns (index ``mu * d_b + nu``). For a product ``A ⊗ B`` it equals
    ``vec_row(A) @ vec_row(B).T`` with no conjugation on the second factor.
    """
    dims, t = _tensor(rho, dims)
    return t.transpose(0, 2, 1, 3).reshape(dims.d_a**2, dims.d_b**2).copy()


def vec_row(a):
    """Row-major flattening of ``a`` into a column vector."""
    a = as_matrix(a)
    return a.reshape(-1, 1).copy()
