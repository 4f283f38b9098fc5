"""scikit-learn wrapper so the criteria can sit inside pipelines and model-selection tools."""

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .bipartite import BipartiteDims
from .criteria import CRITERIA, DETECTED, TOL_DETECT, VALUE_FIELDS, evaluate
from .validation import check_states


class EntanglementDetector(TransformerMixin, BaseEstimator):
    """Stateless detector over batches of bipartite density matrices.

    ``transform`` maps each state to the eight criterion values in
    :data:`~entdetect.criteria.VALUE_FIELDS` order. ``predict`` returns
    ``True`` where any of the selected ``criteria`` certifies entanglement.
    Nothing is learned; ``fit`` only validates the input and fixes ``dims_``.

    Parameters
    ----------
    dims : tuple of int, optional
        Local dimensions ``(d_a, d_b)``. Inferred as ``(d, d)`` from square
        sides when omitted.
    criteria : tuple of str
        Subset of ``("ccnr", "ppt", "realign_corr", "pt_corr")`` used by ``predict``.
    tol : float
        Detection margin above each bound.
    """

    def __init__(self, dims=None, criteria=CRITERIA, tol=TOL_DETECT):
        self.dims = dims
        self.criteria = criteria
        self.tol = tol

    def _validate_params(self):
        unknown = set(self.criteria) - set(CRITERIA)
        if unknown or not self.criteria:
            raise ValueError(f"criteria must be a non-empty subset of {CRITERIA}, got {self.criteria!r}")
        if not self.tol >= 0:
            raise ValueError(f"tol must be non-negative, got {self.tol}")

    def fit(self, X, y=None):
        self._validate_params()
        states = check_states(X, self.dims)
        self.dims_ = states[0].dims if states else BipartiteDims.coerce(self.dims)
        self.n_features_in_ = self.dims_.total**2
        return self

    def _reports(self, X):
        check_is_fitted(self, "dims_")
        return [evaluate(s, self.tol) for s in check_states(X, self.dims_)]

    def transform(self, X):
        return np.array([r.values() for r in self._reports(X)], dtype=float).reshape(-1, len(VALUE_FIELDS))

    def predict(self, X):
        return np.array(
            [any(r.verdicts[c] == DETECTED for c in self.criteria) for r in self._reports(X)], dtype=bool
        )

    def report(self, X):
        """Full :class:`~entdetect.criteria.CriterionReport` per state."""
        return self._reports(X)

    def get_feature_names_out(self, input_features=None):
        return np.array(VALUE_FIELDS, dtype=object)
