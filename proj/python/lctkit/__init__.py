"""Exact arithmetic for two-dimensional log canonical thresholds.

All rational inputs and outputs are ``fractions.Fraction`` (ints are accepted).
"""

import json as _json
import os as _os

from ._core import (
    DomainError,
    StructuralError,
    UsageError,
    accumulation_report,
    adjunction_holds,
    hilbert_basis,
    hj_expand,
    lemma_p1_scan,
    lemma_p1_verify,
    mld_axes,
    pair_discr_check,
    pair_discr_sample,
    solve_for_c,
    solve_for_gamma,
    t2_all_witnesses,
    t2_enumerate,
    t2_form_check,
    t2_member,
    t2_witness_search,
    theta_value,
    toric_discrepancy,
    xi_transform,
)
from . import _core

__version__ = "0.1.0"


def _graph_text(graph):
    if isinstance(graph, dict):
        return _json.dumps(graph)
    if isinstance(graph, (str, _os.PathLike)) and _os.path.exists(graph):
        with open(graph, encoding="utf-8") as fh:
            return fh.read()
    if isinstance(graph, str):
        return graph
    raise TypeError("graph must be a dict, JSON text or a path to a JSON file")


def crepant_pullback(graph, c):
    """[(curve id, b_i)] solving the crepant pullback at c."""
    return _core._crepant_pullback(_graph_text(graph), c)


def lct_from_graph(graph, component_multiplicities=()):
    """lct of a resolution graph given as a dict, JSON text or file path."""
    return _core._lct_from_graph(_graph_text(graph), list(component_multiplicities))


__all__ = [name for name in dir() if not name.startswith("_")]
