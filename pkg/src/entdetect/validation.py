"""Input validation for density matrices and batches of them."""

import numpy as np

from .bipartite import BipartiteDims
from .matcore import HERMITIAN_TOL, as_matrix, hermitian_deviation, real_if_exact

PSD_TOL = 1e-9
TRACE_TOL = 1e-9


class InvalidStateError(ValueError):
    """A matrix failed one of the density-matrix invariants.

    ``invariant`` names the first violated check: one of ``"shape"``,
    ``"finite"``, ``"hermitian"``, ``"psd"`` or ``"trace"``.
    """

    def __init__(self, invariant, message):
        super().__init__(f"{invariant}: {message}")
        self.invariant = invariant


def check_density_array(mat, dims):
    """Validate ``mat`` as a density matrix on ``dims`` and return it as a complex array.

    Checks run in order (shape, finiteness, Hermiticity, positivity, trace)
    and the first failure raises :class:`InvalidStateError`.
    """
    dims = BipartiteDims.coerce(dims)
    try:
        arr = np.asarray(mat, dtype=np.complex128)
    except (TypeError, ValueError) as exc:
        raise InvalidStateError("shape", f"cannot read matrix entries ({exc})") from exc
    if arr.shape != (dims.total, dims.total):
        raise InvalidStateError(
            "shape", f"matrix shape {arr.shape} does not match dims {dims.d_a}x{dims.d_b}"
        )
    try:
        arr = as_matrix(arr)
    except ValueError as exc:
        raise InvalidStateError("finite", str(exc)) from exc
    dev = hermitian_deviation(arr)
    if dev > HERMITIAN_TOL:
        raise InvalidStateError("hermitian", f"max |rho - rho^dagger| = {dev:.3e} exceeds {HERMITIAN_TOL:.0e}")
    arr = (arr + arr.conj().T) / 2
    low = float(np.linalg.eigvalsh(real_if_exact(arr))[0])
    if low < -PSD_TOL:
        raise InvalidStateError("psd", f"minimum eigenvalue {low:.3e} below -{PSD_TOL:.0e}")
    tr = np.trace(arr).real
    if abs(tr - 1) > TRACE_TOL:
        raise InvalidStateError("trace", f"trace {tr:.12g} differs from 1 by more than {TRACE_TOL:.0e}")
    return arr


def infer_dims(side):
    """Split a side length into ``(d, d)`` when it is a perfect square."""
    d = int(round(np.sqrt(side)))
    if d * d != side or d < 2:
        raise ValueError(f"cannot infer bipartite dims from side {side}; pass dims explicitly")
    return BipartiteDims(d, d)


def check_states(X, dims=None):
    """Turn ``X`` into a list of :class:`~entdetect.states.DensityMatrix`.

    ``X`` may be a sequence of ``DensityMatrix`` objects, a 3-D array of
    shape ``(n_samples, D, D)``, or a 2-D array of shape ``(n_samples, D*D)``
    holding row-major flattened matrices. Raw arrays need ``dims`` unless
    ``D`` is a perfect square, in which case equal local dimensions are assumed.
    """
    from .states import DensityMatrix

    if isinstance(X, DensityMatrix):
        X = [X]
    if len(X) and all(isinstance(x, DensityMatrix) for x in X):
        if dims is not None:
            want = BipartiteDims.coerce(dims)
            for x in X:
                if x.dims != want:
                    raise ValueError(f"state dims {x.dims} differ from requested {want}")
        return list(X)
    arr = np.asarray(X, dtype=np.complex128)
    if arr.ndim == 2:
        side = int(round(np.sqrt(arr.shape[1])))
        if side * side != arr.shape[1]:
            raise ValueError(f"flattened rows of length {arr.shape[1]} are not square matrices")
        arr = arr.reshape(arr.shape[0], side, side)
    if arr.ndim != 3 or arr.shape[1] != arr.shape[2]:
        raise ValueError(f"expected shape (n_samples, D, D), got {arr.shape}")
    dims = infer_dims(arr.shape[1]) if dims is None else BipartiteDims.coerce(dims)
    return [DensityMatrix(m, dims) for m in arr]
