"""Exact symbolic two-parameter Hecke algebra, quantum-group representations,
R-matrices, Hopf pairing and Schur-Weyl decomposition.

Values are exact rational functions in (v, t), exchanged as canonical strings;
matrices are sparse (row, col, value) triples.
"""

import json

from ._uvtsw import (
    decompose,
    dual_basis,
    idempotent,
    jm,
    pair,
    r_matrix,
    r_matrix_commutant,
    relations,
    rtilde,
    rtilde_braided,
    rtilde_from_theta,
    run_json,
)

__all__ = [
    "decompose",
    "dual_basis",
    "idempotent",
    "jm",
    "pair",
    "r_matrix",
    "r_matrix_commutant",
    "relations",
    "rtilde",
    "rtilde_braided",
    "rtilde_from_theta",
    "run",
    "run_json",
]


def run(command, **config):
    """Run a verification suite and return the report as a dict.

    Accepted config keys: n, k, mode, height, cap, seed.
    """
    return json.loads(run_json(command, **config))
