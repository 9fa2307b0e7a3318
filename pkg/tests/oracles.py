"""Brute-force reference implementations used to pin test expectations.

Everything here favors obviousness over speed: plain recursion, explicit
enumeration, no bit tricks.  The package must agree with these on every
instance small enough to enumerate.
"""

from fractions import Fraction
from itertools import product


def all_zero_deletions(letters):
    """Every word obtainable by deleting some 0s, as letter tuples."""
    out = {()}
    for a in letters:
        if a == 1:
            out = {w + (1,) for w in out}
        else:
            out = out | {w + (0,) for w in out}
    return out


def brute_reduces_to(x_letters, y_letters):
    return tuple(y_letters) in all_zero_deletions(tuple(x_letters))


def brute_embeddings(v_letters, y_letters, M):
    """All 1-based position tuples m_1 < ... < m_n with gaps in 1..M."""
    n = len(v_letters)
    L = len(y_letters)
    found = []

    def rec(i, prev, acc):
        if i == n:
            found.append(tuple(acc))
            return
        for pos in range(prev + 1, min(prev + M, L) + 1):
            if y_letters[pos - 1] == v_letters[i]:
                rec(i + 1, pos, acc + [pos])

    rec(0, 0, [])
    return found


def brute_embed_prob(v_letters, M):
    n = len(v_letters)
    L = M * n
    hits = 0
    for y in product((0, 1), repeat=L):
        if brute_embeddings(v_letters, y, M):
            hits += 1
    return Fraction(hits, 2**L)


def brute_mean_embeddings(n, M):
    total = 0
    for v in product((0, 1), repeat=n):
        for y in product((0, 1), repeat=M * n):
            total += len(brute_embeddings(v, y, M))
    return Fraction(total, 2 ** (n + M * n))


def brute_second_moment_ratio(n, M):
    total = 0
    for v in product((0, 1), repeat=n):
        for y in product((0, 1), repeat=M * n):
            total += len(brute_embeddings(v, y, M)) ** 2
    mean_sq = Fraction(M, 2) ** (2 * n)
    return Fraction(total, 2 ** (n + M * n)) / mean_sq


def brute_path_survives(grid, depth):
    """Try every monotone step sequence of the given length."""
    if depth == 0:
        return True
    for steps in product((0, 1), repeat=depth):
        i = j = 0
        ok = True
        for s in steps:
            i, j = (i + 1, j) if s else (i, j + 1)
            if not grid.in_bounds(i, j) or not grid.is_open(i, j):
                ok = False
                break
        if ok:
            return True
    return False


def brute_compatible(x_letters, y_letters):
    """Memoized three-move recursion; accepts when either word runs out."""
    nx, ny = len(x_letters), len(y_letters)
    seen = {}

    def rec(i, j):
        if i == nx or j == ny:
            return True
        key = (i, j)
        if key in seen:
            return seen[key]
        ok = False
        if x_letters[i] == 0 and rec(i + 1, j):
            ok = True
        elif y_letters[j] == 0 and rec(i, j + 1):
            ok = True
        elif not (x_letters[i] == 1 and y_letters[j] == 1) and rec(i + 1, j + 1):
            ok = True
        seen[key] = ok
        return ok

    return rec(0, 0)


def brute_visible_words(cells, offsets, origin, max_len):
    """All words of length <= max_len readable along self-avoiding walks."""
    h, w = cells.shape
    words = {()}
    visited = {origin}

    def rec(pos, word):
        if len(word) == max_len:
            return
        for di, dj in offsets:
            a, b = pos[0] + di, pos[1] + dj
            if 0 <= a < h and 0 <= b < w and (a, b) not in visited:
                nw = word + (int(cells[a, b]),)
                words.add(nw)
                visited.add((a, b))
                rec((a, b), nw)
                visited.discard((a, b))

    rec(origin, ())
    return words


def brute_crossing(config):
    """Left-to-right open crossing by breadth-first search, 4-connected."""
    n, m = config.shape
    frontier = [(0, j) for j in range(m) if config[0, j]]
    seen = set(frontier)
    while frontier:
        i, j = frontier.pop()
        if i == n - 1:
            return True
        for a, b in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
            if 0 <= a < n and 0 <= b < m and (a, b) not in seen and config[a, b]:
                seen.add((a, b))
                frontier.append((a, b))
    return False


def brute_block_reachable(good, depth):
    """Directed reachability over (i+1,j+1)/(i+1,j+2) from block (1,1)."""
    nbi, nbj = good.shape
    if not good[0, 0]:
        return False
    level = {(1, 1)}
    for _ in range(depth):
        nxt = set()
        for i, j in level:
            for a, b in ((i + 1, j + 1), (i + 1, j + 2)):
                if a <= nbi and b <= nbj and good[a - 1, b - 1]:
                    nxt.add((a, b))
        if not nxt:
            return False
        level = nxt
    return True
