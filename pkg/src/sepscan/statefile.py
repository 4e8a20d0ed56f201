"""JSON (de)serialization of bipartite density matrices.

Schema: ``{"dims": [dim_a, dim_b], "matrix": [[re, im], ...]}`` with the
(dim_a*dim_b)^2 entries flattened row-major. Floats are written at full
repr precision, so a save/load round trip reproduces the matrix
bit-for-bit; loading validates every density-matrix invariant and names
the first one that fails.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from .errors import InvalidStateError
from .states import BipartiteDensity


def density_to_dict(rho: BipartiteDensity) -> dict:
    """JSON-ready form of a density matrix."""
    flat = rho.matrix.reshape(-1)
    return {
        "dims": [rho.dim_a, rho.dim_b],
        "matrix": [[float(z.real), float(z.imag)] for z in flat],
    }


def _require_int(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _require_real(value) -> bool:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        return False
    return math.isfinite(value)


def density_from_dict(data) -> BipartiteDensity:
    """Parse the JSON form back into a validated density matrix."""
    if not isinstance(data, dict):
        raise InvalidStateError("state file must be a JSON object")
    dims = data.get("dims")
    if (
        not isinstance(dims, list)
        or len(dims) != 2
        or not all(_require_int(d) and d >= 1 for d in dims)
    ):
        raise InvalidStateError('"dims" must be a pair of positive integers')
    entries = data.get("matrix")
    d = dims[0] * dims[1]
    if not isinstance(entries, list) or len(entries) != d * d:
        raise InvalidStateError(
            f'"matrix" must list {d * d} [re, im] pairs for dims '
            f"{dims[0]}x{dims[1]}"
        )
    flat = np.empty(d * d, dtype=np.complex128)
    for idx, pair in enumerate(entries):
        if not isinstance(pair, list) or len(pair) != 2:
            raise InvalidStateError(f"matrix entry {idx} is not an [re, im] pair")
        re_part, im_part = pair
        if not (_require_real(re_part) and _require_real(im_part)):
            raise InvalidStateError(
                f"matrix entry {idx} has non-numeric or non-finite components"
            )
        flat[idx] = complex(re_part, im_part)
    return BipartiteDensity(dims[0], dims[1], flat.reshape(d, d))


def save_density(rho: BipartiteDensity, path) -> None:
    """Write a density matrix to ``path`` as a JSON state file."""
    Path(path).write_text(json.dumps(density_to_dict(rho)) + "\n")


def load_density(path) -> BipartiteDensity:
    """Read and validate a density matrix from a JSON state file."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InvalidStateError(f"cannot read state file {path}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidStateError(f"state file {path} is not valid JSON: {exc}") from exc
    return density_from_dict(data)
