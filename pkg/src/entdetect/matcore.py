"""Dense complex matrix helpers: Kronecker product, Schatten norms, Hermitian eigensolver.

Every matrix is a 2-D ``numpy.ndarray`` of dtype ``complex128``. The tensor
index convention used throughout the package is row-major with subsystem A
outer and subsystem B inner, i.e. the composite index of ``(m, mu)`` is
``m * d_b + mu``. ``numpy.kron`` already follows it.
"""

import sys

import numpy as np

HERMITIAN_TOL = 1e-10


def as_matrix(a, name="matrix"):
    """Coerce ``a`` into a finite 2-D complex array, raising ``ValueError`` otherwise."""
    arr = np.asarray(a, dtype=np.complex128)
    if arr.ndim != 2:
        raise ValueError(f"{name} must be 2-D, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} has non-finite entries")
    return arr


def dagger(a):
    """Conjugate transpose."""
    return as_matrix(a).conj().T


def kron(a, b):
    """Kronecker product ``a ⊗ b`` with A as the outer (block) index."""
    a = as_matrix(a, "a")
    b = as_matrix(b, "b")
    rows = a.shape[0] * b.shape[0]
    cols = a.shape[1] * b.shape[1]
    if rows * cols > sys.maxsize:
        raise OverflowError(f"kron result of shape ({rows}, {cols}) exceeds platform limits")
    return np.kron(a, b)


def real_if_exact(a):
    """Drop an identically zero imaginary part so LAPACK can use the real routines."""
    return a.real if not np.any(a.imag) else a


def singular_values(a):
    return np.linalg.svd(real_if_exact(as_matrix(a)), compute_uv=False)


def schatten_norm(a, p=1.0):
    r"""Schatten ``p``-norm :math:`(\sum_i s_i^p)^{1/p}` of ``a``.

    ``p=1`` is the trace norm and ``p=2`` the Hilbert-Schmidt norm. The
    singular values always come from an SVD, so non-Hermitian inputs (such
    as realigned matrices) take the same code path as Hermitian ones.

    :param a: Any 2-D matrix with finite entries.
    :param p: Real order, ``p >= 1``. ``numpy.inf`` gives the operator norm.
    :return: The norm as a Python float.
    """
    if not p >= 1:
        raise ValueError(f"Schatten order must satisfy p >= 1, got {p}")
    s = singular_values(a)
    if s.size == 0:
        return 0.0
    if np.isinf(p):
        return float(s.max())
    if p == 1:
        return float(s.sum())
    # scale by the largest singular value so large p cannot overflow
    top = s.max()
    if top == 0:
        return 0.0
    return float(top * np.sum((s / top) ** p) ** (1.0 / p))


def trace_norm(a):
    return schatten_norm(a, 1)


def hs_norm(a):
    return schatten_norm(a, 2)


def hermitian_deviation(a):
    """Largest entrywise deviation ``max |a - a^dagger|``."""
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        return np.inf
    return float(np.max(np.abs(a - a.conj().T))) if a.size else 0.0


def eig_hermitian(a, tol=HERMITIAN_TOL):
    """Eigendecomposition of a Hermitian matrix.

    Inputs within ``tol`` of Hermitian are symmetrized before
    diagonalization. Returns ``(eigenvalues, eigenvectors)`` with
    eigenvalues ascending and eigenvectors as orthonormal columns.
    """
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise ValueError(f"eig_hermitian needs a square matrix, got shape {a.shape}")
    dev = hermitian_deviation(a)
    if dev > tol:
        raise ValueError(f"matrix is not Hermitian: max |a - a^dagger| = {dev:.3e} > {tol:.1e}")
    w, v = np.linalg.eigh(real_if_exact((a + a.conj().T) / 2))
    return w, v.astype(np.complex128, copy=False)
