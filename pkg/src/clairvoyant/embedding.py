"""M-embeddings of binary words into binary sequences.

A word ``v`` of length n M-embeds into ``y`` when there are positions
``m_1 < ... < m_n`` with ``m_0 = 0``, each step ``m_i - m_{i-1}`` between 1
and M, and ``y[m_i] = v[i]`` (positions are 1-based here, matching the gap
convention).  Since ``m_n <= M*n``, the event only looks at the first M*n
letters of ``y``, which is what makes exact enumeration possible at desk
scale.

For the alternating word against uniform random ``y`` the probability
``v_n`` obeys a two-term linear recursion whose coefficients depend only on
M; both the recursion and a direct enumeration are implemented so each can
check the other.  First and second moments of the number of embeddings of a
random word are exact as well, via a constraint-graph count.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from itertools import product

import numpy as np

from .errors import BudgetError, PropertyViolation
from .rng import RngSpec
from .runner import run_chunked
from .stats import Estimate
from .words import Word, alternating_word

_ENUM_CHUNK_BITS = 22


@dataclass(frozen=True)
class EmbeddingWitness:
    """1-based positions m_1 < ... < m_n realizing an M-embedding."""

    positions: tuple[int, ...]
    gap_bound: int


def validate_embedding(witness: EmbeddingWitness, v: Word, y: Word) -> bool:
    """Check a witness against the definition, independently of any solver."""
    m = witness.positions
    M = witness.gap_bound
    if M < 1 or len(m) != len(v):
        return False
    prev = 0
    for i, pos in enumerate(m):
        if not 1 <= pos - prev <= M:
            return False
        if pos > len(y) or y[pos - 1] != v[i]:
            return False
        prev = pos
    return True


def _letter_masks(y: Word) -> tuple[int, int]:
    # bit m (1-based position) set iff y_m is a 1 (resp. 0)
    ones = y.bits << 1
    zeros = ~ones & ((1 << (len(y) + 1)) - 2)
    return ones, zeros


def _spread(frontier: int, M: int) -> int:
    s = 0
    for d in range(1, M + 1):
        s |= frontier << d
    return s


def embed_decide(v: Word, y: Word, M: int) -> EmbeddingWitness | None:
    """A witness that v M-embeds into y, or None if there is none."""
    if M < 1:
        raise ValueError("gap bound M must be >= 1")
    if len(v) == 0:
        return EmbeddingWitness((), M)
    ones, zeros = _letter_masks(y)
    frontiers = [1]  # bit 0 is the virtual start m_0 = 0
    r = 1
    for a in v:
        r = _spread(r, M) & (ones if a else zeros)
        if r == 0:
            return None
        frontiers.append(r)
    # walk the frontiers backwards, taking the lowest admissible position
    m = (frontiers[-1] & -frontiers[-1]).bit_length() - 1
    positions = [m]
    for i in range(len(v) - 1, 0, -1):
        window = ((1 << M) - 1) << max(m - M, 0)
        cand = frontiers[i] & window & ((1 << m) - 1)
        m = (cand & -cand).bit_length() - 1
        positions.append(m)
    positions.reverse()
    witness = EmbeddingWitness(tuple(positions), M)
    if not validate_embedding(witness, v, y):
        raise PropertyViolation("embed_decide produced an invalid witness")
    return witness


def embed_count(v: Word, y: Word, M: int) -> int:
    """The number of distinct M-embedding position sequences of v into y."""
    if M < 1:
        raise ValueError("gap bound M must be >= 1")
    ones, zeros = _letter_masks(y)
    L = len(y)
    counts = [1] + [0] * L
    for a in v:
        mask = ones if a else zeros
        nxt = [0] * (L + 1)
        for pos in range(L + 1):
            c = counts[pos]
            if not c:
                continue
            for d in range(1, M + 1):
                q = pos + d
                if q > L:
                    break
                if (mask >> q) & 1:
                    nxt[q] += c
        counts = nxt
    return sum(counts)


def embed_prob_exact(v: Word, M: int, budget: int = 24) -> Fraction:
    """P(v M-embeds into uniform random y), exactly, by enumeration.

    Enumerates all 2**(M*n) targets; refuses when M*len(v) exceeds budget.
    """
    if M < 1:
        raise ValueError("gap bound M must be >= 1")
    L = M * len(v)
    if L > budget:
        raise BudgetError(
            "enumeration needs 2**%d targets, over the budget of 2**%d"
            % (L, budget)
        )
    count = _enum_embed_counts([v.bits], len(v), M)[0]
    return Fraction(count, 1 << L)


def _enum_embed_counts(words_bits: list[int], n: int, M: int) -> list[int]:
    """For each word, how many y in {0,1}^(M*n) it M-embeds into."""
    L = M * n
    total = 1 << L
    posmask = np.uint64(((1 << (L + 1)) - 1) & ~1)
    counts = [0] * len(words_bits)
    step = 1 << _ENUM_CHUNK_BITS
    for start in range(0, total, step):
        stop = min(start + step, total)
        y = np.arange(start, stop, dtype=np.uint64)
        ones = y << np.uint64(1)
        zeros = (~ones) & posmask
        for wi, wbits in enumerate(words_bits):
            r = np.ones(stop - start, dtype=np.uint64)
            for i in range(n):
                s = r << np.uint64(1)
                for d in range(2, M + 1):
                    s |= r << np.uint64(d)
                r = s & (ones if (wbits >> i) & 1 else zeros)
            counts[wi] += int(np.count_nonzero(r))
    return counts


@dataclass(frozen=True)
class RecursionParams:
    """Coefficients of v_{n+1} = b v_n - c v_{n-1} for the alternating word."""

    M: int
    alpha: Fraction
    beta: Fraction
    b: Fraction
    c: Fraction


def recursion_params(M: int) -> RecursionParams:
    if M < 2:
        raise ValueError("M must be >= 2")
    beta = Fraction(1, 2**M)
    alpha = 1 - beta
    b = alpha + (M - 1) * beta
    c = beta * (M - 2 * alpha)
    return RecursionParams(M, alpha, beta, b, c)


def vn_recursion(M: int, n: int) -> list[Fraction]:
    """v_0..v_n for the alternating word, exact rationals."""
    if n < 0:
        raise ValueError("n must be >= 0")
    par = recursion_params(M)
    vals = [Fraction(1)]
    if n >= 1:
        vals.append(par.alpha)
    for _ in range(2, n + 1):
        vals.append(par.b * vals[-1] - par.c * vals[-2])
    return vals


@dataclass(frozen=True)
class CharRoots:
    """Roots of x**2 - b x + c and the rescaled gap-to-1 diagnostic."""

    M: int
    r_small: float
    r_large: float
    health: float


def char_roots(M: int) -> CharRoots:
    par = recursion_params(M)
    disc = par.b * par.b - 4 * par.c
    if disc <= 0:
        raise PropertyViolation("characteristic roots are not real for M=%d" % M)
    sqrt_d = math.sqrt(disc)
    s = float(2 - par.b)
    # 1 - r_large == 4 beta^2 / (s + sqrt_d); the direct quadratic formula
    # cancels catastrophically because r_large -> 1 at rate 4**-M
    one_minus_large = 4.0 * float(par.beta) ** 2 / (s + sqrt_d)
    r_large = 1.0 - one_minus_large
    r_small = float(par.c) / r_large
    health = 2.0 / (s + sqrt_d)
    return CharRoots(M, r_small, r_large, health)


@dataclass(frozen=True)
class ScanReport:
    """Exact embedding probabilities for every word of one length."""

    n: int
    M: int
    table: tuple[tuple[Word, Fraction], ...]
    best_words: tuple[Word, ...]
    worst_words: tuple[Word, ...]
    best_probability: Fraction
    worst_probability: Fraction


def extremal_scan(n: int, M: int, budget_bits: int = 36,
                  word_budget: int = 24) -> ScanReport:
    """Rank all 2**n words of length n by exact M-embedding probability.

    Total enumeration touches 2**(n*(M+1)) (word, target) pairs; both that
    exponent and the per-word target budget are enforced up front.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if M < 1:
        raise ValueError("gap bound M must be >= 1")
    if n * (M + 1) > budget_bits:
        raise BudgetError(
            "scan touches 2**%d pairs, over the budget of 2**%d"
            % (n * (M + 1), budget_bits)
        )
    if n * M > word_budget:
        raise BudgetError(
            "per-word enumeration needs 2**%d targets, over the budget of 2**%d"
            % (n * M, word_budget)
        )
    words = [Word(bits, n) for bits in range(1 << n)]
    counts = _enum_embed_counts([w.bits for w in words], n, M)
    denom = 1 << (M * n)
    table = tuple((w, Fraction(c, denom)) for w, c in zip(words, counts))
    best = max(c for _, c in table)
    worst = min(c for _, c in table)
    return ScanReport(
        n=n,
        M=M,
        table=table,
        best_words=tuple(w for w, c in table if c == best),
        worst_words=tuple(w for w, c in table if c == worst),
        best_probability=best,
        worst_probability=worst,
    )


def mean_embeddings(n: int, M: int) -> Fraction:
    """E(number of M-embeddings of a random n-word into a random target).

    Computed by counting admissible position sequences with a line DP and
    weighting each by 2**-n, then asserted against the closed form (M/2)**n.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if M < 1:
        raise ValueError("gap bound M must be >= 1")
    counts = {0: 1}
    for _ in range(n):
        nxt: dict[int, int] = {}
        for pos, c in counts.items():
            for d in range(1, M + 1):
                q = pos + d
                nxt[q] = nxt.get(q, 0) + c
        counts = nxt
    mean = Fraction(sum(counts.values()), 2**n)
    assert mean == Fraction(M, 2) ** n
    return mean


def second_moment_ratio(n: int, M: int, max_pairs: int = 1 << 16) -> Fraction:
    """E(N^2) / (M/2)**(2n) for N = number of M-embeddings, both words random.

    Sums over all pairs of position sequences; each pair contributes
    2**-(vars - components) of its equality-constraint graph.  Refuses when
    M**(2n) exceeds max_pairs (the default covers n <= 8 at M = 2).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if M < 1:
        raise ValueError("gap bound M must be >= 1")
    if M ** (2 * n) > max_pairs:
        raise BudgetError(
            "second moment touches %d pairs, over the budget of %d"
            % (M ** (2 * n), max_pairs)
        )
    seqs = []
    for gaps in product(range(1, M + 1), repeat=n):
        pos = []
        m = 0
        for d in gaps:
            m += d
            pos.append(m)
        seqs.append(tuple(pos))

    def find(parent: list[int], a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    total = Fraction(0)
    for m1 in seqs:
        for m2 in seqs:
            ys = sorted(set(m1) | set(m2))
            yidx = {p: n + k for k, p in enumerate(ys)}
            nvars = n + len(ys)
            parent = list(range(nvars))
            comps = nvars
            for i in range(n):
                for p in (m1[i], m2[i]):
                    ra, rb = find(parent, i), find(parent, yidx[p])
                    if ra != rb:
                        parent[ra] = rb
                        comps -= 1
            total += Fraction(1, 2 ** (nvars - comps))
    return total / Fraction(M, 2) ** (2 * n)


@dataclass(frozen=True)
class MomentReport:
    n: int
    M: int
    mean: Fraction
    second_moment_ratio: Fraction
    growth_estimate: float | None


def moment_report(n: int, M: int, max_pairs: int = 1 << 16) -> MomentReport:
    """Mean, normalized second moment, and a one-step growth-rate estimate."""
    ratio = second_moment_ratio(n, M, max_pairs=max_pairs)
    growth = None
    if n >= 1:
        prev = second_moment_ratio(n - 1, M, max_pairs=max_pairs)
        growth = float(ratio / prev)
    return MomentReport(
        n=n,
        M=M,
        mean=mean_embeddings(n, M),
        second_moment_ratio=ratio,
        growth_estimate=growth,
    )


def _decide_bits(vbits: int, n: int, ybits: int, L: int, M: int) -> bool:
    ones = ybits << 1
    zeros = ~ones & ((1 << (L + 1)) - 2)
    r = 1
    for i in range(n):
        r = _spread(r, M) & (ones if (vbits >> i) & 1 else zeros)
        if r == 0:
            return False
    return True


def _pack_bits(arr: np.ndarray) -> int:
    if arr.size == 0:
        return 0
    packed = np.packbits(arr.astype(np.uint8), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def _fixed_word_chunk(lo: int, hi: int, vbits: int, n: int, M: int,
                      p_y: float, rng: RngSpec) -> np.ndarray:
    out = np.empty(hi - lo, dtype=np.uint8)
    L = M * n
    for k in range(lo, hi):
        g = rng.stream(k).generator()
        ybits = _pack_bits(g.random(L) < p_y)
        out[k - lo] = _decide_bits(vbits, n, ybits, L, M)
    return out


def _survival_chunk(lo: int, hi: int, n: int, M: int, p_x: float, p_y: float,
                    rng: RngSpec) -> np.ndarray:
    out = np.empty(hi - lo, dtype=np.uint8)
    L = M * n
    for k in range(lo, hi):
        g = rng.stream(k).generator()
        draws = g.random(n + L)
        vbits = _pack_bits(draws[:n] < p_x)
        ybits = _pack_bits(draws[n:] < p_y)
        out[k - lo] = _decide_bits(vbits, n, ybits, L, M)
    return out


def embed_prob_mc(v: Word, M: int, replicas: int, rng: RngSpec,
                  p_y: float = 0.5, workers: int = 1) -> Estimate:
    """Monte Carlo estimate of P(v M-embeds into an iid Bernoulli target)."""
    if not 0.0 <= p_y <= 1.0:
        raise ValueError("p_y must lie in [0, 1]")
    fn = partial(_fixed_word_chunk, vbits=v.bits, n=len(v), M=M, p_y=p_y,
                 rng=rng)
    samples = run_chunked(fn, replicas, workers)
    return Estimate.from_samples(samples, rng)


def embed_survival_mc(M: int, n: int, p_x: float, p_y: float, replicas: int,
                      rng: RngSpec, workers: int = 1) -> Estimate:
    """Monte Carlo estimate of P(X_{1..n} M-embeds into Y_{1..Mn}).

    X has iid Bernoulli(p_x) letters and Y iid Bernoulli(p_y) letters.
    """
    for p in (p_x, p_y):
        if not 0.0 <= p <= 1.0:
            raise ValueError("letter densities must lie in [0, 1]")
    fn = partial(_survival_chunk, n=n, M=M, p_x=p_x, p_y=p_y, rng=rng)
    samples = run_chunked(fn, replicas, workers)
    return Estimate.from_samples(samples, rng)


def alternating_reference(n: int, M: int) -> Fraction:
    """v_n for the alternating word via the recursion (convenience)."""
    return vn_recursion(M, n)[n]


__all__ = [
    "EmbeddingWitness",
    "validate_embedding",
    "embed_decide",
    "embed_count",
    "embed_prob_exact",
    "RecursionParams",
    "recursion_params",
    "vn_recursion",
    "CharRoots",
    "char_roots",
    "ScanReport",
    "extremal_scan",
    "mean_embeddings",
    "second_moment_ratio",
    "MomentReport",
    "moment_report",
    "embed_prob_mc",
    "embed_survival_mc",
    "alternating_reference",
    "alternating_word",
]
