"""Clairvoyant scheduling on the looped complete graph.

Two walkers take iid uniform values in {1..M}; vertex (i, j) of the quadrant
is open when X_i != Y_j, and the scheduler survives to depth n when a
monotone lattice path from the origin reaches the antidiagonal i + j = n
through open vertices.  The origin itself is declared open.

Index 0 of each walk is its starting point, so the axis vertices (i, 0) and
(0, j) compare against Y_0 and X_0 respectively.  The open field is 3-wise
but not 4-wise independent; `kwise_joint` computes exact joint laws by
enumeration so that can be checked rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from itertools import product

import numpy as np

from .environment import JointPmf
from .errors import BudgetError, PropertyViolation
from .rng import RngSpec
from .runner import run_chunked
from .stats import Estimate
from .words import IntSequence


@dataclass(frozen=True)
class ScheduleGrid:
    """Openness field of a pair of walks; open(i, j) iff x[i] != y[j]."""

    x: IntSequence
    y: IntSequence

    def __post_init__(self):
        if self.x.M != self.y.M:
            raise ValueError("walks must share one alphabet")

    @property
    def M(self) -> int:
        return self.x.M

    @property
    def depth(self) -> int:
        return min(len(self.x), len(self.y)) - 1

    def in_bounds(self, i: int, j: int) -> bool:
        return 0 <= i < len(self.x) and 0 <= j < len(self.y)

    def is_open(self, i: int, j: int) -> bool:
        if (i, j) == (0, 0):
            return True
        return self.x[i] != self.y[j]


def sample_grid(M: int, depth: int, rng: RngSpec) -> ScheduleGrid:
    """Grid of two fresh uniform walks, each with depth+1 values."""
    if depth < 0:
        raise ValueError("depth must be >= 0")
    g = rng.generator()
    xv = tuple(int(v) for v in g.integers(1, M + 1, size=depth + 1))
    yv = tuple(int(v) for v in g.integers(1, M + 1, size=depth + 1))
    return ScheduleGrid(IntSequence(xv, M), IntSequence(yv, M))


@dataclass(frozen=True)
class PathWitness:
    """Monotone path from the origin; one coordinate grows per step."""

    steps: tuple[tuple[int, int], ...]


def validate_path(witness: PathWitness, grid: ScheduleGrid) -> bool:
    steps = witness.steps
    if not steps or steps[0] != (0, 0):
        return False
    for (a, b), (c, d) in zip(steps, steps[1:]):
        if (c - a, d - b) not in ((0, 1), (1, 0)):
            return False
    for i, j in steps[1:]:
        if not grid.in_bounds(i, j) or not grid.is_open(i, j):
            return False
    return True


def _frontier_sweep(grid: ScheduleGrid, depth: int, keep: bool):
    """Run the antidiagonal frontier DP; optionally keep every frontier."""
    xv = np.asarray(grid.x.values)
    yv = np.asarray(grid.y.values)
    nx = len(xv) - 1
    ny = len(yv) - 1
    open_uv = xv[:, None] != yv[None, :]
    f = np.zeros(nx + 1, dtype=bool)
    f[0] = True
    frontiers = [f]
    d = 0
    while d < depth:
        d += 1
        nf = f.copy()
        nf[1:] |= f[:-1]
        u0 = max(0, d - ny)
        u1 = min(nx, d)
        ok = np.zeros(nx + 1, dtype=bool)
        us = np.arange(u0, u1 + 1)
        ok[us] = open_uv[us, d - us]
        nf &= ok
        if not nf.any():
            return d - 1, frontiers
        if keep:
            frontiers.append(nf)
        else:
            frontiers = [nf]
        f = nf
    return depth, frontiers


def survival_depth(grid: ScheduleGrid, max_depth: int | None = None) -> int:
    """Largest d <= max_depth reachable by a monotone open path."""
    limit = grid.depth if max_depth is None else min(max_depth, grid.depth)
    reached, _ = _frontier_sweep(grid, limit, keep=False)
    return reached


def directed_survival(grid: ScheduleGrid, depth: int) -> PathWitness | None:
    """A monotone open path to antidiagonal depth, or None."""
    if depth < 0:
        raise ValueError("depth must be >= 0")
    if depth > grid.depth:
        raise ValueError("grid has only %d levels" % grid.depth)
    reached, frontiers = _frontier_sweep(grid, depth, keep=True)
    if reached < depth:
        return None
    u = int(np.flatnonzero(frontiers[depth])[0])
    steps = [(u, depth - u)]
    for d in range(depth - 1, -1, -1):
        if not frontiers[d][u]:
            u -= 1
        steps.append((u, d - u))
    steps.reverse()
    witness = PathWitness(tuple(steps))
    if not validate_path(witness, grid):
        raise PropertyViolation("directed_survival produced an invalid path")
    return witness


def _curve_chunk(lo: int, hi: int, M: int, max_depth: int,
                 rng: RngSpec) -> np.ndarray:
    out = np.empty(hi - lo, dtype=np.int64)
    for k in range(lo, hi):
        grid = sample_grid(M, max_depth, rng.stream(k))
        out[k - lo] = survival_depth(grid)
    return out


def survival_curve_mc(M: int, depths: list[int], replicas: int, rng: RngSpec,
                      workers: int = 1) -> list[Estimate]:
    """P(directed survival to depth d) for each requested d, shared samples.

    One survival depth is computed per replica, so the estimates are
    monotone non-increasing in d sample by sample, not just on average.
    """
    if not depths or any(d < 0 for d in depths):
        raise ValueError("depths must be non-negative")
    fn = partial(_curve_chunk, M=M, max_depth=max(depths), rng=rng)
    reached = run_chunked(fn, replicas, workers)
    return [Estimate.from_samples(reached >= d, rng) for d in depths]


def reduce_value(v: int, M: int) -> int:
    """Collapse {1..kM} onto {1..M} by value -> ((value-1) mod M) + 1."""
    return (v - 1) % M + 1


@dataclass(frozen=True)
class CouplingReport:
    M: int
    k: int
    depth: int
    samples: int
    reduced_survivals: int
    big_survivals: int


def _coupling_chunk(lo: int, hi: int, M: int, k: int, depth: int,
                    rng: RngSpec) -> np.ndarray:
    out = np.empty((hi - lo, 3), dtype=np.uint8)
    big_m = k * M
    for r in range(lo, hi):
        g = rng.stream(r).generator()
        xb = g.integers(1, big_m + 1, size=depth + 1)
        yb = g.integers(1, big_m + 1, size=depth + 1)
        xr = (xb - 1) % M + 1
        yr = (yb - 1) % M + 1
        # reduced-open at (i,j) must imply big-open there
        bad = (xr[:, None] != yr[None, :]) & ~(xb[:, None] != yb[None, :])
        big = ScheduleGrid(
            IntSequence(tuple(int(v) for v in xb), big_m),
            IntSequence(tuple(int(v) for v in yb), big_m),
        )
        red = ScheduleGrid(
            IntSequence(tuple(int(v) for v in xr), M),
            IntSequence(tuple(int(v) for v in yr), M),
        )
        out[r - lo, 0] = bool(bad.any())
        out[r - lo, 1] = survival_depth(red) >= depth
        out[r - lo, 2] = survival_depth(big) >= depth
    return out


def coupling_check(M: int, k: int, depth: int, samples: int, rng: RngSpec,
                   workers: int = 1) -> CouplingReport:
    """Sample paired walks on {1..kM} and their mod-M reductions.

    Raises PropertyViolation if any vertex open in the reduced grid is
    closed in the big grid, or if a reduced grid survives while its big
    grid does not; either would contradict the coupling.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    fn = partial(_coupling_chunk, M=M, k=k, depth=depth, rng=rng)
    res = run_chunked(fn, samples, workers)
    superset_bad = int(res[:, 0].sum())
    ordering_bad = int((res[:, 1] & ~res[:, 2]).sum())
    if superset_bad or ordering_bad:
        raise PropertyViolation(
            "coupling violated on %d/%d samples (superset %d, ordering %d)"
            % (superset_bad + ordering_bad, samples, superset_bad, ordering_bad)
        )
    return CouplingReport(
        M=M,
        k=k,
        depth=depth,
        samples=samples,
        reduced_survivals=int(res[:, 1].sum()),
        big_survivals=int(res[:, 2].sum()),
    )


def undirected_escape(grid: ScheduleGrid, box: int) -> bool:
    """Whether the origin's open cluster reaches the boundary of [0, box]^2.

    Adjacency is the undirected 4-neighbor one, restricted to the quadrant.
    """
    if box < 0:
        raise ValueError("box must be >= 0")
    if box > grid.depth:
        raise ValueError("grid has only %d levels" % grid.depth)
    if box == 0:
        return True
    xv = np.asarray(grid.x.values[:box + 1])
    yv = np.asarray(grid.y.values[:box + 1])
    open_uv = xv[:, None] != yv[None, :]
    open_uv[0, 0] = True
    seen = np.zeros_like(open_uv, dtype=bool)
    seen[0, 0] = True
    stack = [(0, 0)]
    while stack:
        i, j = stack.pop()
        if i == box or j == box:
            return True
        for a, b in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
            if 0 <= a <= box and 0 <= b <= box and not seen[a, b] \
                    and open_uv[a, b]:
                seen[a, b] = True
                stack.append((a, b))
    return False


def _undirected_chunk(lo: int, hi: int, M: int, box: int,
                      rng: RngSpec) -> np.ndarray:
    out = np.empty(hi - lo, dtype=np.uint8)
    for k in range(lo, hi):
        grid = sample_grid(M, box, rng.stream(k))
        out[k - lo] = undirected_escape(grid, box)
    return out


def undirected_mc(M: int, box: int, replicas: int, rng: RngSpec,
                  workers: int = 1) -> Estimate:
    """Escape frequency of the undirected open cluster from the origin."""
    fn = partial(_undirected_chunk, M=M, box=box, rng=rng)
    samples = run_chunked(fn, replicas, workers)
    return Estimate.from_samples(samples, rng)


def kwise_joint(vertices, M: int, max_terms: int = 10_000_000) -> JointPmf:
    """Exact joint law of the open indicators at the given grid vertices.

    Enumerates all value assignments of the distinct walk indices involved,
    so the cost is M**(a+b) for a distinct X-indices and b distinct
    Y-indices.  Vertices must have i, j >= 1 (the axis rows involve the
    declared-open origin and the starting values).
    """
    verts = tuple((int(i), int(j)) for i, j in vertices)
    if not verts:
        raise ValueError("need at least one vertex")
    if any(i < 1 or j < 1 for i, j in verts):
        raise ValueError("vertices must have i, j >= 1")
    if len(set(verts)) != len(verts):
        raise ValueError("duplicate vertex")
    is_ = sorted({i for i, _ in verts})
    js = sorted({j for _, j in verts})
    terms = M ** (len(is_) + len(js))
    if terms > max_terms:
        raise BudgetError(
            "joint law needs %d assignments, over the budget of %d"
            % (terms, max_terms)
        )
    counts: dict[tuple[int, ...], int] = {}
    for xs in product(range(M), repeat=len(is_)):
        xmap = dict(zip(is_, xs))
        for ys in product(range(M), repeat=len(js)):
            ymap = dict(zip(js, ys))
            o = tuple(int(xmap[i] != ymap[j]) for i, j in verts)
            counts[o] = counts.get(o, 0) + 1
    probs = {o: Fraction(c, terms) for o, c in counts.items()}
    labels = tuple("%d,%d" % v for v in verts)
    return JointPmf(labels=labels, probs=probs)
