"""Parameter sweeps, threshold search and truncation studies over the example family."""

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .criteria import DETECTED, VALUE_FIELDS, evaluate
from .states import DEFAULT_TAIL_RATIO, ExampleParams, example_state, rho_eps


def parse_range(text):
    """Parse ``"lo:hi:step"`` (inclusive of ``hi``) or a single value ``"v"`` into a tuple of floats.

    Grid points are rounded to 12 decimals so ``0.99:1:0.001`` yields
    ``0.993`` rather than ``0.99299999999999999``.
    """
    parts = text.split(":")
    try:
        nums = [float(p) for p in parts]
    except ValueError:
        raise ValueError(f"range {text!r} is not 'v' or 'lo:hi:step'") from None
    if len(nums) == 1:
        return (nums[0],)
    if len(nums) != 3:
        raise ValueError(f"range {text!r} is not 'v' or 'lo:hi:step'")
    lo, hi, step = nums
    if step < 1e-10:
        raise ValueError(f"step must be >= 1e-10, got {step}")
    if hi < lo:
        raise ValueError(f"range {text!r} has hi < lo")
    n = int(round((hi - lo) / step))
    if lo + n * step > hi + 1e-12:
        n -= 1
    return tuple(round(lo + i * step, 12) for i in range(n + 1))


def make_grid(a_values, eps_values, c_values, n_tail, tail_ratio=DEFAULT_TAIL_RATIO):
    """All grid points in lexicographic ``(a, epsilon, c)`` order, validated up front."""
    return [
        ExampleParams(a, eps, c, n_tail, tail_ratio)
        for a, eps, c in itertools.product(a_values, eps_values, c_values)
    ]


def evaluate_params(params):
    return evaluate(example_state(params))


def run_grid(grid, jobs=1):
    """Evaluate every grid point; output order is grid order whatever ``jobs`` is."""
    if jobs <= 1:
        return [evaluate_params(p) for p in grid]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(evaluate_params, grid))


def is_witness(report):
    """The realigned-correlation bound fires while CCNR and PPT both stay silent."""
    v = report.verdicts
    return v["realign_corr"] == DETECTED and v["ccnr"] != DETECTED and v["ppt"] != DETECTED


def bisect_threshold(fires, lo, hi, tol=1e-6):
    """Smallest ``x`` in ``[lo, hi]`` with ``fires(x)``, assuming monotone ``fires`` and ``fires(hi)``.

    Returns the upper end of the final bracket, so ``fires`` holds at the
    returned value and ``hi - lo <= tol`` on exit.
    """
    if fires(lo):
        return lo
    if not fires(hi):
        return None
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if fires(mid):
            hi = mid
        else:
            lo = mid
    return hi


def epsilon_threshold(a, criterion="ccnr", lo=0.9, hi=1.0, c=1.0, n_tail=0,
                      tail_ratio=DEFAULT_TAIL_RATIO, tol=1e-6):
    """Smallest noise parameter epsilon at which ``criterion`` fires, to within ``tol``."""

    def fires(eps):
        report = evaluate_params(ExampleParams(a, eps, c, n_tail, tail_ratio))
        return report.verdicts[criterion] == DETECTED

    return bisect_threshold(fires, lo, hi, tol)


@dataclass(frozen=True)
class Threshold:
    a: float
    c: float
    criterion: str
    grid_value: float
    refined: float


def scan_thresholds(grid, reports, criteria=("ccnr", "realign_corr"), tol=1e-6):
    """For each ``(a, c)`` line of the grid, locate where each criterion first fires along epsilon.

    The first epsilon grid point that fires is refined by bisection
    against its silent predecessor. Lines without such a transition are
    skipped.
    """
    lines = {}
    for p, r in zip(grid, reports):
        lines.setdefault((p.a, p.c), []).append((p, r))
    found = []
    for (a, c), pts in lines.items():
        pts.sort(key=lambda pr: pr[0].epsilon)
        for crit in criteria:
            prev = None
            for p, r in pts:
                if r.verdicts[crit] == DETECTED:
                    if prev is not None:
                        refined = epsilon_threshold(a, crit, prev.epsilon, p.epsilon, c,
                                                    p.n_tail, p.tail_ratio, tol)
                        found.append(Threshold(a, c, crit, p.epsilon, refined))
                    break
                prev = p
    return found


@dataclass
class ConvergenceStudy:
    levels: list
    reports: list
    base: object
    additivity_residuals: list
    max_changes: dict

    @property
    def max_change(self):
        return max(self.max_changes.values(), default=0.0)


def converge(a, epsilon, c, n_tails, tail_ratio=DEFAULT_TAIL_RATIO):
    """Evaluate the tail-extended state at each truncation level in ``n_tails``.

    Also returns the bare 3x3 report, the CCNR additivity residual
    ``|ccnr - (c * ccnr_3x3 + 1 - c)|`` per level, and for every criterion
    value the largest change between consecutive levels.
    """
    levels = [int(n) for n in n_tails]
    if not levels or any(n < 1 for n in levels) or levels != sorted(set(levels)):
        raise ValueError(f"n_tail levels must be a non-empty strictly ascending list of positive integers, got {n_tails}")
    base = evaluate(rho_eps(a, epsilon))
    reports = [evaluate_params(ExampleParams(a, epsilon, c, n, tail_ratio)) for n in levels]
    expected = c * base.ccnr_trace_norm + 1 - c
    residuals = [abs(r.ccnr_trace_norm - expected) for r in reports]
    changes = {
        f: max((abs(getattr(r1, f) - getattr(r0, f)) for r0, r1 in zip(reports, reports[1:])), default=0.0)
        for f in VALUE_FIELDS
    }
    return ConvergenceStudy(levels, reports, base, residuals, changes)
