"""Experiment harness: random-graph census, growth curve, rewiring study."""

from __future__ import annotations

import csv
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence, TextIO

from .classify import PRO
from .classify import classify as classify_graph
from .construct import initial_growth_state, grow_step
from .errors import InfeasibleAtEpsilonError
from .graph import Graph, degrees, delta
from .lp import LpProblem, max_failing_correlation, solve
from .metrics import correlation, r_d_delta, singular_gap
from .randgen import configuration_rewire, mix, sample_connected_nonregular


@dataclass
class CensusRecord:
    n: int
    samples: int
    pro_count: int
    pro_proportion: float
    mean_r_high_pro: Optional[float]
    mean_r_high_anti: Optional[float]
    mean_r_ddelta_pro: Optional[float]
    mean_r_ddelta_anti: Optional[float]
    base_seed: int

    CSV_HEADER = ["n", "samples", "pro_count", "pro_proportion",
                  "mean_r_high_pro", "mean_r_high_anti",
                  "mean_r_ddelta_pro", "mean_r_ddelta_anti", "base_seed"]

    def csv_row(self) -> list:
        return [self.n, self.samples, self.pro_count, self.pro_proportion,
                self.mean_r_high_pro, self.mean_r_high_anti,
                self.mean_r_ddelta_pro, self.mean_r_ddelta_anti, self.base_seed]


def _census_sample(args: tuple[int, float, int, float]) -> tuple[bool, float, float]:
    """One census draw: (is_pro, r_high, r_ddelta)."""
    n, p, sample_seed, epsilon = args
    g = sample_connected_nonregular(n, p, sample_seed)
    cls = classify_graph(g)
    r_dd = r_d_delta(g)
    try:
        r_high = max_failing_correlation(g, epsilon).r_high
    except InfeasibleAtEpsilonError:
        r_high = float("nan")
    return cls.kind == PRO, r_high, r_dd


def census(n: int, samples: int, seed: int, p: float = 0.5,
           epsilon: float = 0.001, jobs: int = 1) -> CensusRecord:
    """Classify and optimize `samples` connected non-regular G(n, p) draws.

    Deterministic for a fixed seed regardless of `jobs`: every sample uses
    its own derived seed and results reduce in sample order.
    """
    tasks = [(n, p, mix(mix(seed, n), i), epsilon) for i in range(samples)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_census_sample, tasks, chunksize=256))
    else:
        results = [_census_sample(t) for t in tasks]

    pro_rh, anti_rh, pro_rdd, anti_rdd = [], [], [], []
    for is_pro, r_high, r_dd in results:
        if is_pro:
            pro_rh.append(r_high)
            pro_rdd.append(r_dd)
        else:
            anti_rh.append(r_high)
            anti_rdd.append(r_dd)

    def _mean(xs):
        xs = [x for x in xs if x == x]  # drop NaN
        return sum(xs) / len(xs) if xs else None

    return CensusRecord(
        n=n, samples=samples, pro_count=len(pro_rdd),
        pro_proportion=len(pro_rdd) / samples,
        mean_r_high_pro=_mean(pro_rh), mean_r_high_anti=_mean(anti_rh),
        mean_r_ddelta_pro=_mean(pro_rdd), mean_r_ddelta_anti=_mean(anti_rdd),
        base_seed=seed,
    )


def write_census_csv(records: Sequence[CensusRecord], fh: TextIO) -> None:
    writer = csv.writer(fh)
    writer.writerow(CensusRecord.CSV_HEADER)
    for rec in records:
        writer.writerow(rec.csv_row())


GROW_CSV_HEADER = ["k", "n", "gap", "r"]


def grow_table(steps: int) -> list[tuple[int, int, float, float]]:
    """Rows (k, n, gap, r) for the fig1 seed growth, k = 0..steps."""
    state = initial_growth_state()
    rows = []
    for _ in range(steps + 1):
        g, attrs = state.graph, list(state.attrs)
        gap = float(singular_gap(g, attrs))
        r = correlation(list(degrees(g)), attrs)
        rows.append((state.k, g.n, gap, r))
        if state.k < steps:
            state = grow_step(state)
    return rows


def write_grow_csv(rows, fh: TextIO) -> None:
    writer = csv.writer(fh)
    writer.writerow(GROW_CSV_HEADER)
    for row in rows:
        writer.writerow(row)


@dataclass
class RewireRecord:
    network_id: str
    r_high_original: float
    r_ddelta_original: float
    r_high_rewired: Optional[float]
    r_ddelta_rewired: Optional[float]
    seed: int

    CSV_HEADER = ["network_id", "r_high_original", "r_ddelta_original",
                  "r_high_rewired", "r_ddelta_rewired", "seed"]

    def csv_row(self) -> list:
        return [self.network_id, self.r_high_original, self.r_ddelta_original,
                self.r_high_rewired, self.r_ddelta_rewired, self.seed]


def strip_isolates(g: Graph) -> Graph:
    """Drop degree-0 nodes, keeping canonical order of the remainder."""
    keep = [i for i in range(g.n) if len(g.adj[i]) > 0]
    remap = {old: new for new, old in enumerate(keep)}
    adj = [[remap[v] for v in g.adj[i]] for i in keep]
    return Graph(adj, [g.labels[i] for i in keep])


def r_high_loose(g: Graph, epsilon: float) -> Optional[float]:
    """Failing-correlation LP without the connectivity requirement.

    Isolates must already be stripped. Returns None for regular graphs or
    when the LP is infeasible at the given slack.
    """
    deg = degrees(g)
    if len(set(deg)) <= 1 or 0 in deg:
        return None
    dl = [float(v) for v in delta(g)]
    n = g.n
    problem = LpProblem(
        c=[float(d) for d in deg],
        constraints=[([1.0] * n, "=", 0.0), (dl, "<=", -epsilon)],
        lo=[-1.0] * n,
        hi=[1.0] * n,
    )
    sol = solve(problem)
    if sol.status != "optimal":
        return None
    return correlation(list(deg), list(sol.x))


def rewire_experiment(graphs: Sequence[tuple[str, Graph]], seed: int,
                      epsilon: float = 0.001) -> list[RewireRecord]:
    """Compare failing-correlation bounds before and after rewiring.

    Each input graph is rewired once with the configuration model; isolates
    produced by dropped collisions are disregarded in the rewired metrics.
    """
    records = []
    for index, (name, g) in enumerate(graphs):
        g0 = strip_isolates(g)
        rh0 = r_high_loose(g0, epsilon)
        rdd0 = r_d_delta(g0)
        rw_seed = mix(seed, index)
        rew = strip_isolates(configuration_rewire(g, rw_seed))
        rh1 = r_high_loose(rew, epsilon) if rew.n >= 2 else None
        rdd1 = r_d_delta(rew) if rew.n >= 2 else None
        records.append(RewireRecord(
            network_id=name,
            r_high_original=rh0, r_ddelta_original=rdd0,
            r_high_rewired=rh1, r_ddelta_rewired=rdd1,
            seed=rw_seed,
        ))
    return records


def write_rewire_csv(records: Sequence[RewireRecord], fh: TextIO) -> None:
    writer = csv.writer(fh)
    writer.writerow(RewireRecord.CSV_HEADER)
    for rec in records:
        writer.writerow(rec.csv_row())
