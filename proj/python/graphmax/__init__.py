"""Hardy-Littlewood maximal operators on finite graphs."""

import json

from ._graphmax import (
    DEFAULT_SEED,
    Graph,
    ZeroVariation,
    __version__,
    boundedness_constant,
    complete,
    cycle,
    graph_from_json,
    lp_norm,
    majorizes,
    maximal,
    norm_ratio,
    p_variation,
    path,
    star,
    variation_ratio,
)
from . import _graphmax


def sharp_variation_constant(family, n, p):
    """Tabulated sup Var_p(Mf)/Var_p(f) for "complete" or "star" graphs."""
    return json.loads(_graphmax._sharp_variation_constant(family, n, float(p)))


def l2_norm(family, n):
    """Operator l^2 norm of the centered maximal operator on K_n or S_n."""
    return json.loads(_graphmax._l2_norm(family, n))


def estimate_ratio(graph, target="variation", p=2.0, alpha=0.0, centered=True,
                   restarts=64, seed=DEFAULT_SEED, threads=0):
    """Multi-start search for the supremum ratio; returns the report as a dict."""
    return json.loads(_graphmax._estimate_ratio(graph, target, float(p), float(alpha),
                                                centered, restarts, seed, threads))


def verify(suite="all", seed=DEFAULT_SEED, restarts=64):
    return json.loads(_graphmax._verify(suite, seed, restarts))


__all__ = [
    "DEFAULT_SEED",
    "Graph",
    "ZeroVariation",
    "boundedness_constant",
    "complete",
    "cycle",
    "estimate_ratio",
    "graph_from_json",
    "l2_norm",
    "lp_norm",
    "majorizes",
    "maximal",
    "norm_ratio",
    "p_variation",
    "path",
    "sharp_variation_constant",
    "star",
    "variation_ratio",
    "verify",
]
