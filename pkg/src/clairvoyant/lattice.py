"""Two-dimensional embedding via good blocks, and visible-word probes.

The block construction coarse-grains a random binary field into R x R
blocks; a block is good when it contains both letters.  Good blocks form a
directed relation (i, j) -> (i+1, j+1) or (i+1, j+2) that is a copy of
directed N^2, and any directed path of good blocks lets every word embed
two-dimensionally with L1 gaps at most 5R.

Visible words are read along self-avoiding walks on a site configuration
over one of three planar lattices (square, triangular, close-packed).  The
search is exact DFS; a node-expansion budget turns long searches into an
explicit third outcome instead of a silent wrong answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache, partial

import numpy as np
from scipy import ndimage

from .errors import PropertyViolation
from .rng import RngSpec
from .runner import run_chunked
from .stats import Estimate
from .words import Word, alternating_word, constant_word


class LatticeKind(Enum):
    SQUARE = "square"
    TRIANGULAR = "triangular"
    CLOSE_PACKED = "close-packed"

    @property
    def offsets(self) -> tuple[tuple[int, int], ...]:
        return _OFFSETS[self]

    @property
    def structure(self) -> np.ndarray:
        s = np.zeros((3, 3), dtype=bool)
        s[1, 1] = True
        for di, dj in self.offsets:
            s[1 + di, 1 + dj] = True
        return s

    @classmethod
    def parse(cls, name: str) -> "LatticeKind":
        for kind in cls:
            if kind.value == name:
                return kind
        raise ValueError("unknown lattice %r" % name)


_OFFSETS = {
    # triangular = square plus one fixed diagonal per face; close-packed both
    LatticeKind.SQUARE: ((1, 0), (-1, 0), (0, 1), (0, -1)),
    LatticeKind.TRIANGULAR: ((1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1)),
    LatticeKind.CLOSE_PACKED: (
        (1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1), (1, -1), (-1, 1),
    ),
}


@dataclass(frozen=True)
class Field2D:
    """Binary array Y[i, j], 1 <= i <= W, 1 <= j <= H, at cells[i-1, j-1]."""

    cells: np.ndarray
    p: float | None

    def __post_init__(self):
        if self.cells.ndim != 2:
            raise ValueError("field must be two-dimensional")
        if not np.isin(self.cells, (0, 1)).all():
            raise ValueError("field entries must be 0 or 1")

    @property
    def width(self) -> int:
        return self.cells.shape[0]

    @property
    def height(self) -> int:
        return self.cells.shape[1]


def sample_field(p: float, width: int, height: int, rng: RngSpec) -> Field2D:
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    g = rng.generator()
    cells = (g.random((width, height)) < p).astype(np.uint8)
    return Field2D(cells=cells, p=p)


def field_to_text(field: Field2D) -> str:
    """Line i holds Y_{i, 1..H} as 0/1 characters."""
    return "\n".join("".join(str(int(c)) for c in row) for row in field.cells)


def field_from_text(text: str) -> Field2D:
    rows = [line.strip() for line in text.splitlines() if line.strip()]
    if not rows or len({len(r) for r in rows}) != 1:
        raise ValueError("field text needs equal-length rows of 0/1")
    cells = np.array([[int(ch) for ch in row] for row in rows], dtype=np.uint8)
    return Field2D(cells=cells, p=None)


# Directed site percolation threshold on Z^2 (numerical value from the
# percolation literature).  Diagnostic only: a block-goodness density above
# this suggests the directed block process percolates, it proves nothing.
DIRECTED_SITE_THRESHOLD = 0.705489


def block_good_prob(p, R: int):
    """P(an R x R block contains both letters) = 1 - p^(R^2) - (1-p)^(R^2).

    Exact when p is a Fraction, float when p is a float.
    """
    if R < 1:
        raise ValueError("R must be >= 1")
    if not 0 <= p <= 1:
        raise ValueError("p must lie in [0, 1]")
    area = R * R
    return 1 - p**area - (1 - p) ** area


@dataclass(frozen=True)
class BlockGrid:
    """Goodness of R x R blocks; block (I, J) is good[I-1, J-1]."""

    R: int
    good: np.ndarray


def block_grid(field: Field2D, R: int) -> BlockGrid:
    if R < 1:
        raise ValueError("R must be >= 1")
    nbi = field.width // R
    nbj = field.height // R
    if nbi == 0 or nbj == 0:
        raise ValueError("field smaller than one block")
    view = field.cells[: nbi * R, : nbj * R].reshape(nbi, R, nbj, R)
    has1 = view.any(axis=(1, 3))
    has0 = (view == 0).any(axis=(1, 3))
    return BlockGrid(R=R, good=has1 & has0)


def block_relation_targets(block: tuple[int, int]) -> tuple[tuple[int, int], tuple[int, int]]:
    i, j = block
    return ((i + 1, j + 1), (i + 1, j + 2))


def block_percolation(field: Field2D, R: int,
                      depth: int) -> tuple[tuple[int, int], ...] | None:
    """A depth-step directed path of good blocks from block (1,1), or None."""
    if depth < 0:
        raise ValueError("depth must be >= 0")
    bg = block_grid(field, R)
    nbi, nbj = bg.good.shape
    if nbi < depth + 1 or nbj < 2 * depth + 1:
        raise ValueError(
            "field holds %dx%d blocks, too small for depth %d"
            % (nbi, nbj, depth)
        )
    if not bg.good[0, 0]:
        return None
    masks = [0] * (nbi + 1)
    for i in range(1, nbi + 1):
        m = 0
        row = bg.good[i - 1]
        for j in np.flatnonzero(row):
            m |= 1 << (int(j) + 1)
        masks[i] = m
    frontiers = [1 << 1]
    f = 1 << 1
    for t in range(1, depth + 1):
        f = ((f << 1) | (f << 2)) & masks[t + 1]
        if f == 0:
            return None
        frontiers.append(f)
    j = (f & -f).bit_length() - 1
    path = [(depth + 1, j)]
    for t in range(depth - 1, -1, -1):
        prev = frontiers[t]
        j = j - 1 if (prev >> (j - 1)) & 1 else j - 2
        path.append((t + 1, j))
    path.reverse()
    return tuple(path)


@dataclass(frozen=True)
class Embedding2DWitness:
    """Strictly increasing rows (m_i) and columns (n_i) with L1 gap bound."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]
    gap_bound: int


def validate_embedding_2d(witness: Embedding2DWitness, w: Word,
                          field: Field2D) -> bool:
    m, n = witness.rows, witness.cols
    M = witness.gap_bound
    if len(m) != len(w) or len(n) != len(w):
        return False
    pm, pn = 0, 0
    for k in range(len(w)):
        if m[k] <= pm or n[k] <= pn:
            return False
        if not 1 <= (m[k] - pm) + (n[k] - pn) <= M:
            return False
        if m[k] > field.width or n[k] > field.height:
            return False
        if int(field.cells[m[k] - 1, n[k] - 1]) != w[k]:
            return False
        pm, pn = m[k], n[k]
    return True


def embed_word_2d(w: Word, field: Field2D, R: int,
                  block_path) -> Embedding2DWitness:
    """Embed w along a good-block path, one letter per block, M = 5R.

    Within block k the lexicographically smallest cell carrying w_k is
    taken, so witnesses are reproducible.
    """
    path = tuple((int(i), int(j)) for i, j in block_path)
    if len(path) < len(w):
        raise ValueError("block path shorter than the word")
    if path and path[0] != (1, 1):
        raise ValueError("block path must start at block (1,1)")
    for a, b in zip(path, path[1:]):
        if b not in block_relation_targets(a):
            raise ValueError("block path must step by (1,1) or (1,2)")
    rows = []
    cols = []
    for k in range(len(w)):
        bi, bj = path[k]
        sub = field.cells[(bi - 1) * R: bi * R, (bj - 1) * R: bj * R]
        if sub.shape != (R, R):
            raise ValueError("block (%d,%d) exceeds the field" % (bi, bj))
        if not (sub.any() and (sub == 0).any()):
            raise ValueError("block (%d,%d) is not good" % (bi, bj))
        hits = np.argwhere(sub == w[k])
        li, lj = hits[0]
        rows.append((bi - 1) * R + int(li) + 1)
        cols.append((bj - 1) * R + int(lj) + 1)
    witness = Embedding2DWitness(tuple(rows), tuple(cols), 5 * R)
    if not validate_embedding_2d(witness, w, field):
        raise PropertyViolation("block embedding produced an invalid witness")
    return witness


class Visibility(Enum):
    FOUND = "found"
    ABSENT = "absent"
    EXHAUSTED = "budget-exhausted"


@lru_cache(maxsize=8)
def _adjacency(shape: tuple[int, int],
               kind: LatticeKind) -> tuple[tuple[int, ...], ...]:
    h, w = shape
    offs = kind.offsets
    adj = []
    for i in range(h):
        for j in range(w):
            nbrs = []
            for di, dj in offs:
                a, b = i + di, j + dj
                if 0 <= a < h and 0 <= b < w:
                    nbrs.append(a * w + b)
            adj.append(tuple(nbrs))
    return tuple(adj)


def _constant_prune(cells: np.ndarray, kind: LatticeKind,
                    origin: tuple[int, int], letter: int, n: int) -> bool:
    """True if no letter-cluster next to the origin can hold an n-path."""
    match = cells == letter
    labels, count = ndimage.label(match, structure=kind.structure)
    if count == 0:
        return True
    sizes = np.bincount(labels.ravel())
    h, w = cells.shape
    i, j = origin
    for di, dj in kind.offsets:
        a, b = i + di, j + dj
        if 0 <= a < h and 0 <= b < w and match[a, b] \
                and sizes[labels[a, b]] >= n:
            return False
    return True


def visible_word(cells: np.ndarray, kind: LatticeKind, origin: tuple[int, int],
                 w: Word, budget: int | None = None) -> Visibility:
    """Is w readable along some self-avoiding walk from the origin?

    The origin's own letter is unconstrained; step k must land on letter
    w_k.  DFS expands nodes in a fixed order; with a budget the search may
    stop early with the explicit EXHAUSTED outcome.
    """
    h, wd = cells.shape
    if not (0 <= origin[0] < h and 0 <= origin[1] < wd):
        raise ValueError("origin outside the box")
    n = len(w)
    if n == 0:
        return Visibility.FOUND
    letters = w.letters()
    if len(set(letters)) == 1 and _constant_prune(cells, kind, origin,
                                                  letters[0], n):
        return Visibility.ABSENT
    adj = _adjacency(cells.shape, kind)
    flat = cells.ravel().tolist()
    start = origin[0] * wd + origin[1]
    visited = bytearray(h * wd)
    visited[start] = 1
    path = [start]
    cursor = [0]
    expansions = 1
    if budget is not None and expansions > budget:
        return Visibility.EXHAUSTED
    while True:
        k = len(path) - 1  # letters matched so far
        v = path[-1]
        idx = cursor[-1]
        nbrs = adj[v]
        moved = False
        while idx < len(nbrs):
            u = nbrs[idx]
            idx += 1
            if not visited[u] and flat[u] == letters[k]:
                cursor[-1] = idx
                visited[u] = 1
                path.append(u)
                cursor.append(0)
                if k + 1 == n:
                    return Visibility.FOUND
                expansions += 1
                if budget is not None and expansions > budget:
                    return Visibility.EXHAUSTED
                moved = True
                break
        if moved:
            continue
        cursor[-1] = idx
        visited[path.pop()] = 0
        cursor.pop()
        if not path:
            return Visibility.ABSENT


@dataclass(frozen=True)
class AbScanReport:
    """Visibility frequencies of the two extremal words at one density."""

    p: float
    box: int
    budget: int
    alternating: Estimate
    constant: Estimate
    alternating_exhausted: int
    constant_exhausted: int


_AB_CODE = {Visibility.ABSENT: 0, Visibility.FOUND: 1, Visibility.EXHAUSTED: 2}


def _ab_chunk(lo: int, hi: int, p: float, box: int, budget: int,
              rng: RngSpec) -> np.ndarray:
    side = 2 * box + 1
    origin = (box, box)
    alt = alternating_word(box)
    const = constant_word(box)
    out = np.empty((hi - lo, 2), dtype=np.uint8)
    for k in range(lo, hi):
        g = rng.stream(k).generator()
        cells = (g.random((side, side)) < p).astype(np.uint8)
        out[k - lo, 0] = _AB_CODE[
            visible_word(cells, LatticeKind.TRIANGULAR, origin, alt, budget)
        ]
        out[k - lo, 1] = _AB_CODE[
            visible_word(cells, LatticeKind.TRIANGULAR, origin, const, budget)
        ]
    return out


def ab_scan(p: float, box: int, replicas: int, rng: RngSpec,
            budget: int = 1_000_000, workers: int = 1) -> AbScanReport:
    """Visibility of the alternating vs constant word on the triangular box.

    Word length equals the box radius.  Budget-exhausted searches count as
    not visible in the estimates and are tallied separately.
    """
    if box < 1:
        raise ValueError("box radius must be >= 1")
    fn = partial(_ab_chunk, p=p, box=box, budget=budget, rng=rng)
    codes = run_chunked(fn, replicas, workers)
    return AbScanReport(
        p=p,
        box=box,
        budget=budget,
        alternating=Estimate.from_samples(codes[:, 0] == 1, rng),
        constant=Estimate.from_samples(codes[:, 1] == 1, rng),
        alternating_exhausted=int((codes[:, 0] == 2).sum()),
        constant_exhausted=int((codes[:, 1] == 2).sum()),
    )


def _block_chunk(lo: int, hi: int, p: float, R: int, rng: RngSpec) -> np.ndarray:
    out = np.empty(hi - lo, dtype=np.uint8)
    for k in range(lo, hi):
        g = rng.stream(k).generator()
        block = g.random((R, R)) < p
        out[k - lo] = bool(block.any() and (~block).any())
    return out


def block_good_mc(p: float, R: int, replicas: int, rng: RngSpec,
                  workers: int = 1) -> Estimate:
    """Empirical frequency of good blocks among freshly sampled R x R blocks."""
    fn = partial(_block_chunk, p=p, R=R, rng=rng)
    samples = run_chunked(fn, replicas, workers)
    return Estimate.from_samples(samples, rng)
