"""Generic position of point sets, tangent cones and conductor checks."""

import json as _json

from . import _core
from ._core import ResourceError, nu, run_cli, semigroup

__version__ = _core.__version__

__all__ = [
    "ResourceError",
    "conductor",
    "hilbert_function",
    "nu",
    "points_check",
    "random_points",
    "run_cli",
    "semigroup",
    "tangent_cone",
]


def _doc(obj):
    return obj if isinstance(obj, str) else _json.dumps(obj)


def hilbert_function(points, max_degree, field=None):
    """H(0..max_degree) of a point-set document (dict or JSON text)."""
    return _core.hilbert_function(_doc(points), max_degree, field)


def points_check(points, t=None, subset_budget=20000, jobs=1, field=None):
    return _json.loads(_core.points_check(_doc(points), t, subset_budget, jobs, field))


def conductor(model, box=0, subset_budget=20000, field=None):
    """Certificate dict with "comparison" and "verdict" keys."""
    return _json.loads(_core.conductor(_doc(model), box, subset_budget, field))


def tangent_cone(document, e_guess=1, degree_bound=0, field=None):
    return _json.loads(_core.tangent_cone(_doc(document), e_guess, degree_bound, field))


def random_points(e, r, seed=1, field=None):
    return _json.loads(_core.random_points(e, r, seed, field))
