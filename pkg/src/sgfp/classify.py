"""Exact pro-/anti-SGFP classification and the failing-correlation threshold.

A connected non-regular graph admits no positively-correlated failing
attribute sample exactly when its reciprocal-degree sums are an affine
function of its degrees with non-negative slope. The fit is checked in
exact rational arithmetic, so there is no tolerance anywhere in the
decision path.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .errors import (
    DegenerateGraphError,
    PreconditionViolatedError,
    UnknownNodeError,
)
from .graph import Graph, build_graph, degrees, delta, is_connected, is_regular
from .lp import max_failing_correlation, refine_correlation
from .metrics import correlation, r_d_delta, singular_gap

PRO = "ProSGFP"
ANTI = "AntiSGFP"
DEGENERATE = "RegularOrDegenerate"


@dataclass
class Classification:
    kind: str
    witness: Optional[tuple[Fraction, Fraction]]  # (x, z) with delta = x*d + z
    reason: str
    r_ddelta: Optional[float] = None

    def to_json(self) -> str:
        x, z = (str(self.witness[0]), str(self.witness[1])) if self.witness else (None, None)
        return json.dumps({
            "kind": self.kind, "x": x, "z": z,
            "r_ddelta": self.r_ddelta, "reason": self.reason,
        })


def classify(g: Graph) -> Classification:
    """Exact classification of a graph's topology.

    Regular or disconnected graphs are degenerate. Otherwise the graph is
    pro-SGFP iff delta_i = x*d_i + z holds exactly for all nodes with some
    x >= 0 (the fitted x is then necessarily positive).
    """
    if g.n == 0:
        return Classification(DEGENERATE, None, "empty graph")
    if not is_connected(g):
        return Classification(DEGENERATE, None, "graph is disconnected")
    if is_regular(g):
        return Classification(DEGENERATE, None, "graph is regular")
    deg = degrees(g)
    dl = delta(g)
    r_dd = r_d_delta(g)
    # Fit (x, z) from two nodes of distinct degree, then verify all nodes.
    i = 0
    j = next(k for k in range(g.n) if deg[k] != deg[0])
    x = Fraction(dl[i] - dl[j], deg[i] - deg[j])
    z = dl[i] - x * deg[i]
    if x <= 0:
        return Classification(ANTI, None, "affine fit has non-positive slope", r_dd)
    for k in range(g.n):
        if dl[k] != x * deg[k] + z:
            return Classification(
                ANTI, None,
                "reciprocal-degree sums are not an affine function of degree",
                r_dd)
    return Classification(PRO, (x, z), "delta = x*d + z exactly with x > 0", r_dd)


def attach_pendant_path(g: Graph, at) -> Graph:
    """Attach a 4-edge pendant path at the given node label.

    The two interior degree-2 nodes of the new path get unequal
    reciprocal-degree sums, which forces the result to be anti-SGFP.
    """
    g.index_of(at)  # raises UnknownNodeError for unknown labels
    fresh = []
    counter = 0
    existing = set(g.labels)
    while len(fresh) < 4:
        cand = f"_pp{counter}"
        counter += 1
        if cand not in existing:
            fresh.append(cand)
    q, r, s, t = fresh
    edges = [(g.labels[i], g.labels[j]) for i, j in g.edges()]
    edges += [(at, q), (q, r), (r, s), (s, t)]
    return build_graph(edges, nodes=list(g.labels) + fresh)


def perturb_to_positive_correlation(g: Graph, a: Sequence) -> list:
    """Turn a zero-correlation failing sample into a positive-correlation one.

    Raises the attribute of a maximum-degree node and lowers that of a
    minimum-degree node by the same amount, small enough to keep the gap
    negative (half the strict bound, for float robustness).
    """
    if not is_connected(g) or is_regular(g):
        raise PreconditionViolatedError("graph must be connected and non-regular")
    n = g.n
    mean = sum(a) / n
    if abs(mean) > 1e-12:
        raise PreconditionViolatedError("attribute mean must be 0")
    deg = degrees(g)
    r = correlation(list(deg), list(a))
    if r is None or abs(r) > 1e-12:
        raise PreconditionViolatedError("degree-attribute correlation must be 0")
    gap = singular_gap(g, a)
    if gap >= 0:
        raise PreconditionViolatedError("gap must be negative")
    dl = delta(g)
    i = min(range(n), key=lambda k: (-deg[k], k))
    j = min(range(n), key=lambda k: (deg[k], k))
    if dl[i] > dl[j]:
        # Half the strict bound n|gap| / (delta_i - delta_j): keeps the
        # perturbed gap strictly negative even in float mode.
        eps = min(1, (n * abs(gap)) / (2 * (dl[i] - dl[j])))
    else:
        eps = 1
    out = list(a)
    out[i] = out[i] + eps
    out[j] = out[j] - eps
    return out


@dataclass
class ThresholdEstimate:
    """Conjectured supremum of failing correlations, with oracle validation."""

    candidate_sup: float
    validated: bool
    oracle_max: float

    def to_json(self) -> str:
        return json.dumps({
            "candidate_sup": self.candidate_sup,
            "validated": self.validated,
            "oracle_max": self.oracle_max,
        })


def threshold_estimate(g: Graph, grid: int = 256) -> ThresholdEstimate:
    """Estimate the per-graph correlation threshold above which SGFP holds.

    The analytic candidate is sqrt(1 - r_{d,delta}^2). It is validated by an
    independent search for the best failing correlation: boundary points of
    the projected degree direction refined on a geometric grid, plus LP
    sweeps with decreasing slack, each followed by successive-LP ascent.
    """
    if not is_connected(g) or is_regular(g):
        raise DegenerateGraphError("graph must be connected and non-regular")
    cls = classify(g)
    deg = np.array(degrees(g), dtype=float)
    dl = np.array([float(v) for v in delta(g)])
    n = g.n

    if cls.kind == PRO:
        candidate = 0.0
    else:
        r_dd = r_d_delta(g)
        candidate = math.sqrt(max(0.0, 1.0 - r_dd * r_dd))

    oracle_max = -math.inf

    # LP sweep with decreasing slack; refine each witness by successive LP.
    for eps in (1e-3, 1e-4, 1e-5, 1e-6, 1e-7, 1e-8):
        try:
            res = refine_correlation(g, eps)
        except Exception:
            continue
        if res.gap <= -1e-9:
            oracle_max = max(oracle_max, res.r_high)

    if cls.kind == ANTI:
        # Projected search: project the centered degree direction onto the
        # non-positive-gap half-space and walk the boundary inward on a
        # geometric grid of `grid` points.
        tau = deg - deg.mean()
        tau /= np.linalg.norm(tau)
        dc = dl - dl.mean()
        dc_norm = np.linalg.norm(dc)
        proj = tau - (float(dc @ tau) / (dc_norm ** 2)) * dc
        pnorm = np.linalg.norm(proj)
        if pnorm > 1e-14:
            a_star = proj / pnorm
            v = -dc / dc_norm  # orthogonal to a_star, pushes the gap negative
            thetas = np.geomspace(1e-8, math.pi / 2, num=max(2, grid))
            for theta in thetas:
                a = math.cos(theta) * a_star + math.sin(theta) * v
                gap = float(dl @ a) / n
                if gap > -1e-9:
                    continue
                r = correlation(list(deg), list(a))
                if r is not None:
                    oracle_max = max(oracle_max, r)

    validated = (candidate - 1e-3 - 1e-12) <= oracle_max <= (candidate + 1e-12)
    return ThresholdEstimate(candidate_sup=candidate, validated=validated,
                             oracle_max=oracle_max)
