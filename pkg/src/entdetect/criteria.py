"""Separability-necessary criteria for bipartite density matrices.

Four tests are evaluated, each a necessary condition for separability:

* ``ccnr``: the trace norm of the realigned state is at most 1.
* ``ppt``: the partial transpose on B has no negative eigenvalue.
* ``realign_corr``: with ``C = rho - rho_A ⊗ rho_B`` the correlation part,
  ``||C^R||_Tr <= sqrt((1 - Tr rho_A^2)(1 - Tr rho_B^2))``.
* ``pt_corr``: ``||C^{T_B}||_Tr <= 2 sqrt((1 - Tr rho_A^2)(1 - Tr rho_B^2))``.

``realign_corr`` detects every state ``ccnr`` detects and strictly more.
A criterion fires (certifies entanglement) only when it is violated by
more than ``TOL_DETECT``.
"""

from dataclasses import asdict, dataclass

import numpy as np

from .bipartite import partial_trace, partial_transpose, realign
from .matcore import eig_hermitian, kron, trace_norm

TOL_DETECT = 1e-10

DETECTED = "entangled-detected"
NOT_DETECTED = "not-detected"

CRITERIA = ("ccnr", "ppt", "realign_corr", "pt_corr")

# Column order of the CSV schema and of EntanglementDetector.transform.
VALUE_FIELDS = (
    "ccnr_trace_norm",
    "ppt_min_eig",
    "eq6_lhs",
    "eq6_rhs",
    "eq7_lhs",
    "eq7_rhs",
    "purity_a",
    "purity_b",
)


@dataclass(frozen=True)
class CriterionReport:
    """Values and verdicts of all four criteria for one state.

    ``eq6_*`` hold both sides of the realigned-correlation bound and
    ``eq7_*`` both sides of the partially-transposed one; the names match
    the CSV columns.
    """

    ccnr_trace_norm: float
    ppt_min_eig: float
    eq6_lhs: float
    eq6_rhs: float
    eq7_lhs: float
    eq7_rhs: float
    purity_a: float
    purity_b: float
    verdicts: dict

    @property
    def entangled(self):
        return any(v == DETECTED for v in self.verdicts.values())

    @property
    def verdict(self):
        return DETECTED if self.entangled else NOT_DETECTED

    def values(self):
        return tuple(getattr(self, f) for f in VALUE_FIELDS)

    def as_dict(self):
        out = asdict(self)
        out["verdict"] = self.verdict
        return out


def _verdict(fired):
    return DETECTED if fired else NOT_DETECTED


def _purity(r):
    return float(np.real(np.vdot(r, r)))


def _bound(purity_a, purity_b):
    return float(np.sqrt(max(0.0, 1 - purity_a) * max(0.0, 1 - purity_b)))


def _correlation(rho, rho_a, rho_b):
    return rho.mat - kron(rho_a, rho_b)


def ccnr_value(rho):
    """Trace norm of the realigned state."""
    return trace_norm(realign(rho.mat, rho.dims))


def ppt_min_eig(rho):
    """Smallest eigenvalue of the partial transpose on subsystem B."""
    w, _ = eig_hermitian(partial_transpose(rho.mat, rho.dims, "B"))
    return float(w[0])


def _reductions(rho):
    return partial_trace(rho.mat, rho.dims, "A"), partial_trace(rho.mat, rho.dims, "B")


def realign_corr(rho, reductions=None):
    """Both sides ``(lhs, rhs)`` of the realigned-correlation bound."""
    rho_a, rho_b = reductions or _reductions(rho)
    lhs = trace_norm(realign(_correlation(rho, rho_a, rho_b), rho.dims))
    return lhs, _bound(_purity(rho_a), _purity(rho_b))


def pt_corr(rho, reductions=None):
    """Both sides ``(lhs, rhs)`` of the partially-transposed correlation bound."""
    rho_a, rho_b = reductions or _reductions(rho)
    lhs = trace_norm(partial_transpose(_correlation(rho, rho_a, rho_b), rho.dims, "B"))
    return lhs, 2 * _bound(_purity(rho_a), _purity(rho_b))


def evaluate(rho, tol=TOL_DETECT):
    """Compute every criterion for ``rho`` and return a :class:`CriterionReport`."""
    rho_a, rho_b = _reductions(rho)
    purity_a, purity_b = _purity(rho_a), _purity(rho_b)
    rhs = _bound(purity_a, purity_b)
    corr = _correlation(rho, rho_a, rho_b)
    ccnr = ccnr_value(rho)
    ppt = ppt_min_eig(rho)
    eq6_lhs = trace_norm(realign(corr, rho.dims))
    eq7_lhs = trace_norm(partial_transpose(corr, rho.dims, "B"))
    verdicts = {
        "ccnr": _verdict(ccnr > 1 + tol),
        "ppt": _verdict(ppt < -tol),
        "realign_corr": _verdict(eq6_lhs > rhs + tol),
        "pt_corr": _verdict(eq7_lhs > 2 * rhs + tol),
    }
    return CriterionReport(ccnr, ppt, eq6_lhs, rhs, eq7_lhs, 2 * rhs, purity_a, purity_b, verdicts)
