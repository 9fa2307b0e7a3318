"""Column random environments and exact k-wise independence testing.

The column model ties percolation to a random environment: column i of the
box receives a density X_i drawn from a finite distribution mu, and every
vertex (i, j) is then open with probability X_i independently.  Dependence
runs along columns (the vertical direction), so the horizontal crossing of
a box is the statistic that feels the environment.

`JointPmf` and `kwise_test` are the generic exact machinery: a joint law of
binary variables as rationals, and a subset-by-subset product-form check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from itertools import combinations, product
from typing import Mapping

import numpy as np
from scipy import ndimage

from .rng import RngSpec
from .runner import run_chunked
from .stats import Estimate

_CROSS_STRUCTURE = np.array([[0, 1, 0], [1, 1, 1], [0, 1, 0]], dtype=bool)


@dataclass(frozen=True)
class JointPmf:
    """Exact joint law of k binary variables."""

    labels: tuple[str, ...]
    probs: Mapping[tuple[int, ...], Fraction]

    def __post_init__(self):
        k = len(self.labels)
        for o in self.probs:
            if len(o) != k or any(b not in (0, 1) for b in o):
                raise ValueError("outcomes must be {0,1} vectors of width %d" % k)
        if sum(self.probs.values(), Fraction(0)) != 1:
            raise ValueError("probabilities must sum to 1")

    @property
    def k(self) -> int:
        return len(self.labels)

    def marginal(self, indices: tuple[int, ...]) -> "JointPmf":
        probs: dict[tuple[int, ...], Fraction] = {}
        for o, pr in self.probs.items():
            sub = tuple(o[i] for i in indices)
            probs[sub] = probs.get(sub, Fraction(0)) + pr
        return JointPmf(tuple(self.labels[i] for i in indices), probs)

    def prob_one(self, index: int) -> Fraction:
        return sum(
            (pr for o, pr in self.probs.items() if o[index] == 1), Fraction(0)
        )


def product_pmf(ps: list[Fraction]) -> JointPmf:
    """The independent joint law with P(var_i = 1) = ps[i]."""
    probs: dict[tuple[int, ...], Fraction] = {}
    for o in product((0, 1), repeat=len(ps)):
        pr = Fraction(1)
        for b, p in zip(o, ps):
            pr *= p if b else 1 - p
        probs[o] = pr
    return JointPmf(tuple("v%d" % i for i in range(len(ps))), probs)


@dataclass(frozen=True)
class KwiseViolation:
    subset: tuple[int, ...]
    outcome: tuple[int, ...]
    joint: Fraction
    expected: Fraction


@dataclass(frozen=True)
class KwiseReport:
    k: int
    independent: bool
    worst: KwiseViolation | None


def kwise_test(pmf: JointPmf, k: int) -> KwiseReport:
    """Check every subset of at most k variables for exact product form.

    Returns the worst violation (largest |joint - expected|), if any.
    """
    if not 1 <= k <= pmf.k:
        raise ValueError("k must lie in 1..%d" % pmf.k)
    singles = [pmf.prob_one(i) for i in range(pmf.k)]
    worst: KwiseViolation | None = None
    worst_gap = Fraction(0)
    for size in range(1, k + 1):
        for subset in combinations(range(pmf.k), size):
            marg = pmf.marginal(subset)
            for o in product((0, 1), repeat=size):
                expected = Fraction(1)
                for i, b in zip(subset, o):
                    expected *= singles[i] if b else 1 - singles[i]
                joint = marg.probs.get(o, Fraction(0))
                gap = abs(joint - expected)
                if gap > worst_gap:
                    worst_gap = gap
                    worst = KwiseViolation(subset, o, joint, expected)
    return KwiseReport(k=k, independent=worst is None, worst=worst)


@dataclass(frozen=True)
class FiniteDistribution:
    """A finite distribution on [0, 1]: support points with exact weights."""

    points: tuple[Fraction, ...]
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.points) != len(self.weights) or not self.points:
            raise ValueError("need matching, nonempty points and weights")
        if any(not 0 <= p <= 1 for p in self.points):
            raise ValueError("support points must lie in [0, 1]")
        if any(w < 0 for w in self.weights):
            raise ValueError("weights must be >= 0")
        if sum(self.weights, Fraction(0)) != 1:
            raise ValueError("weights must sum to 1 exactly")

    @classmethod
    def point_mass(cls, p) -> "FiniteDistribution":
        return cls((Fraction(p),), (Fraction(1),))

    @classmethod
    def parse(cls, text: str) -> "FiniteDistribution":
        """Parse 'v1:w1,v2:w2,...' with rational or decimal entries."""
        points = []
        weights = []
        for part in text.split(","):
            v, _, w = part.partition(":")
            if not w:
                raise ValueError("mu entries look like value:weight")
            points.append(Fraction(v.strip()))
            weights.append(Fraction(w.strip()))
        return cls(tuple(points), tuple(weights))

    def __str__(self) -> str:
        return ",".join(
            "%s:%s" % (p, w) for p, w in zip(self.points, self.weights)
        )


@dataclass(frozen=True)
class ColumnEnvironment:
    """A sampled environment: per-column densities and the open field."""

    mu: FiniteDistribution
    densities: np.ndarray
    config: np.ndarray  # config[i, j]: column i, row j


def sample_environment(mu: FiniteDistribution, n: int,
                       rng: RngSpec) -> ColumnEnvironment:
    if n < 1:
        raise ValueError("box size must be >= 1")
    g = rng.generator()
    cum = np.cumsum([float(w) for w in mu.weights])
    idx = np.searchsorted(cum, g.random(n), side="right")
    idx = np.minimum(idx, len(mu.points) - 1)
    dens = np.array([float(mu.points[i]) for i in idx])
    config = g.random((n, n)) < dens[:, None]
    return ColumnEnvironment(mu=mu, densities=dens, config=config)


def crosses_horizontally(config: np.ndarray) -> bool:
    """Whether an open 4-connected cluster joins column 0 to column n-1."""
    labels, count = ndimage.label(config, structure=_CROSS_STRUCTURE)
    if count == 0:
        return False
    left = set(labels[0, :][config[0, :]].tolist())
    right = set(labels[-1, :][config[-1, :]].tolist())
    return bool(left & right)


def _column_chunk(lo: int, hi: int, mu: FiniteDistribution, n: int,
                  rng: RngSpec) -> np.ndarray:
    out = np.empty(hi - lo, dtype=np.uint8)
    for k in range(lo, hi):
        env = sample_environment(mu, n, rng.stream(k))
        out[k - lo] = crosses_horizontally(env.config)
    return out


def column_percolation_mc(mu: FiniteDistribution, n: int, replicas: int,
                          rng: RngSpec, workers: int = 1) -> Estimate:
    """P(horizontal crossing of the n x n box under environment mu)."""
    fn = partial(_column_chunk, mu=mu, n=n, rng=rng)
    samples = run_chunked(fn, replicas, workers)
    return Estimate.from_samples(samples, rng)
