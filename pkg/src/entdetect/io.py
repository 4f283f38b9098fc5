"""State-file and CSV serialization.

State files are JSON objects::

    {"dims": [d_a, d_b], "matrix": [[[re, im], ...], ...]}

with the matrix stored row-major as ``[re, im]`` pairs. Sweep CSVs use a
fixed header, 17 significant digits and ``\\n`` line endings so that
identical runs give byte-identical files.
"""

import csv
import json

import numpy as np

from .criteria import VALUE_FIELDS
from .states import DensityMatrix
from .validation import InvalidStateError

PARAM_FIELDS = ("a", "epsilon", "c", "n_tail")
SWEEP_HEADER = PARAM_FIELDS + VALUE_FIELDS + ("verdict",)


def state_to_dict(rho):
    return {
        "dims": [rho.dims.d_a, rho.dims.d_b],
        "matrix": [[[float(z.real), float(z.imag)] for z in row] for row in rho.mat],
    }


def write_state(rho, path):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(state_to_dict(rho), fh, indent=1)
        fh.write("\n")


def state_from_dict(obj):
    """Build a :class:`DensityMatrix` from a parsed state-file object.

    Structural problems raise :class:`InvalidStateError` with invariant
    ``"format"``; matrix problems carry the name of the failed invariant.
    """
    if not isinstance(obj, dict) or "dims" not in obj or "matrix" not in obj:
        raise InvalidStateError("format", "state file needs top-level keys 'dims' and 'matrix'")
    dims = obj["dims"]
    if (
        not isinstance(dims, list)
        or len(dims) != 2
        or not all(isinstance(d, int) and not isinstance(d, bool) and d >= 2 for d in dims)
    ):
        raise InvalidStateError("format", f"'dims' must be two integers >= 2, got {dims!r}")
    rows = obj["matrix"]
    try:
        arr = np.array(rows, dtype=float)
    except (TypeError, ValueError) as exc:
        raise InvalidStateError("format", f"'matrix' is not a rectangular array of numbers ({exc})") from exc
    if arr.ndim != 3 or arr.shape[2] != 2:
        raise InvalidStateError("format", f"'matrix' entries must be [re, im] pairs, got array shape {arr.shape}")
    return DensityMatrix(arr[..., 0] + 1j * arr[..., 1], tuple(dims))


def read_state(path):
    with open(path, encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InvalidStateError("format", f"not valid JSON ({exc})") from exc
    return state_from_dict(obj)


def fmt(x):
    if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
        return str(int(x))
    if isinstance(x, str):
        return x
    return format(float(x), ".17g")


def sweep_row(params, report):
    """Flatten one grid point into the CSV field order."""
    return [params.a, params.epsilon, params.c, int(params.n_tail), *report.values(), report.verdict]


def write_csv(path, header, rows):
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([fmt(x) for x in row])


def read_csv(path):
    with open(path, encoding="utf-8", newline="") as fh:
        return list(csv.DictReader(fh))
