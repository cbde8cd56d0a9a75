"""Brute-force enumeration of reduced pipe dreams: the ground truth.

Enumeration runs over subsets of the staircase {(i,j) : i+j <= n} by
backtracking, box by box in a fixed reading order (rows top to bottom, each
row right to left).  Including the box (i,j) multiplies the partial exit
permutation by the transposition of i+j-1 and i+j; a branch survives only
while each included cross raises the inversion count, which is exactly
reducedness.  Every subset the search emits is re-verified against the tile
tracing of `pipedream.wiring` before it is returned.

The full-grid variant searches all of [n] x [n] with honest infinite-grid
semantics (pipes 1..2n-1 traced, the ones below row n entering through the
elbow sea).  It exists to confirm that no reduced pipe dream for a
permutation of S_n ever uses a cross on or below the antidiagonal.
"""

from __future__ import annotations

import itertools

from .permutations import BoundExceededError, Perm, check_perm, length
from .pipedream import PipeDream, _trace_perm

ORACLE_BOUND_DEFAULT = 6
FULLGRID_BOUND_DEFAULT = 4
_TABLE_MAX = 6  # below this, one shared backtracking sweep serves every w

_rp_tables: dict[int, dict[Perm, tuple[PipeDream, ...]]] = {}
_fullgrid_tables: dict[int, dict[Perm, tuple[PipeDream, ...]]] = {}


def _reading_boxes(n: int) -> list[tuple[int, int]]:
    """Staircase boxes row by row, right to left within each row."""
    return [(i, j) for i in range(1, n) for j in range(n - i, 0, -1)]


def _verified(n: int, crosses: list[tuple[int, int]], perm: tuple[int, ...]) -> PipeDream:
    dream = PipeDream(n, crosses)
    traced = _trace_perm(n, dream._mask)
    assert traced == perm, f"search/label disagreement: {dream!r} wires to {traced}"
    return dream


def _sweep_table(n: int) -> dict[Perm, tuple[PipeDream, ...]]:
    """All reduced pipe dreams in the staircase, bucketed by wiring."""
    boxes = _reading_boxes(n)
    perm = list(range(1, n + 1))
    chosen: list[tuple[int, int]] = []
    found: dict[Perm, list[PipeDream]] = {}

    def rec(t: int) -> None:
        if t == len(boxes):
            key = tuple(perm)
            found.setdefault(key, []).append(_verified(n, chosen, key))
            return
        rec(t + 1)  # box left out
        i, j = boxes[t]
        k = i + j - 1
        if perm[k - 1] < perm[k]:  # cross raises the inversion count
            perm[k - 1], perm[k] = perm[k], perm[k - 1]
            chosen.append((i, j))
            rec(t + 1)
            chosen.pop()
            perm[k - 1], perm[k] = perm[k], perm[k - 1]

    rec(0)
    return {w: tuple(sorted(dreams)) for w, dreams in found.items()}


def _targeted_search(w: Perm) -> tuple[PipeDream, ...]:
    """Backtracking aimed at a single permutation; used beyond table scale.

    Besides the reducedness prune, a branch is cut unless the partial
    product P still sits under w on the right weak order, tracked via
    w^{-1}P, whose inversion count must keep dropping by one per cross.
    """
    n = len(w)
    boxes = _reading_boxes(n)
    target_len = length(w)
    perm = list(range(1, n + 1))
    winv_p = [0] * n  # one-line word of w^{-1} P
    for pos, value in enumerate(w):
        winv_p[value - 1] = pos + 1
    chosen: list[tuple[int, int]] = []
    out: list[PipeDream] = []

    def rec(t: int, used: int) -> None:
        if used == target_len:
            out.append(_verified(n, chosen + [], tuple(perm)))
            return
        if t == len(boxes) or target_len - used > len(boxes) - t:
            return
        rec(t + 1, used)
        i, j = boxes[t]
        k = i + j - 1
        if perm[k - 1] < perm[k] and winv_p[k - 1] > winv_p[k]:
            perm[k - 1], perm[k] = perm[k], perm[k - 1]
            winv_p[k - 1], winv_p[k] = winv_p[k], winv_p[k - 1]
            chosen.append((i, j))
            rec(t + 1, used + 1)
            chosen.pop()
            perm[k - 1], perm[k] = perm[k], perm[k - 1]
            winv_p[k - 1], winv_p[k] = winv_p[k], winv_p[k - 1]

    rec(0, 0)
    for dream in out:
        assert _trace_perm(n, dream._mask) == w
    return tuple(sorted(out))


def rp_table(n: int, bound: int = ORACLE_BOUND_DEFAULT) -> dict[Perm, tuple[PipeDream, ...]]:
    """Reduced pipe dreams for every w in S_n at once (cached per n)."""
    if n > min(bound, _TABLE_MAX):
        raise BoundExceededError(f"rp_table at n={n} exceeds bound {min(bound, _TABLE_MAX)}")
    if n not in _rp_tables:
        _rp_tables[n] = _sweep_table(n)
    return _rp_tables[n]


def enumerate_rp(w: Perm, bound: int = ORACLE_BOUND_DEFAULT) -> tuple[PipeDream, ...]:
    """All reduced pipe dreams whose wiring is w, sorted.

    >>> [d.crosses for d in enumerate_rp((1, 3, 2))]
    [((1, 2),), ((2, 1),)]
    >>> enumerate_rp((3, 2, 1))[0].crosses
    ((1, 1), (1, 2), (2, 1))
    """
    w = check_perm(w)
    n = len(w)
    if n > bound:
        raise BoundExceededError(f"enumerate_rp at n={n} exceeds bound {bound}")
    if n <= _TABLE_MAX:
        return rp_table(n, bound=bound).get(w, ())
    return _targeted_search(w)


def _trace_perm_fullgrid(n: int, mask: int) -> tuple[int, ...] | None:
    """Exit columns of pipes 1..2n-1 under infinite-grid semantics.

    Tiles outside [n] x [n] are elbows; pipes entering rows n+1..2n-1 may
    climb into the grid through the sea below it.  Returns None if the
    exits fail to be distinct (cannot happen: each north edge carries one
    strand), so in practice always a tuple.
    """
    out = []
    for start in range(1, 2 * n):
        r, c, east = start, 1, True
        while r >= 1:
            crossed = r <= n and c <= n and mask >> ((r - 1) * n + (c - 1)) & 1
            if crossed:
                if east:
                    c += 1
                else:
                    r -= 1
            elif east:
                r -= 1
                east = False
            else:
                c += 1
                east = True
        out.append(c)
    return tuple(out)


def _fullgrid_table(n: int) -> dict[Perm, tuple[PipeDream, ...]]:
    boxes = [(r, c) for r in range(1, n + 1) for c in range(1, n + 1)]
    max_len = n * (n - 1) // 2
    found: dict[Perm, list[PipeDream]] = {}
    tail = tuple(range(n + 1, 2 * n))  # required exits of the sea pipes
    for size in range(max_len + 1):
        for combo in itertools.combinations(range(n * n), size):
            mask = 0
            for b in combo:
                mask |= 1 << b
            exits = _trace_perm_fullgrid(n, mask)
            if exits[n:] != tail:
                continue
            perm = exits[:n]
            if sorted(perm) != list(range(1, n + 1)):
                continue
            if size != length(perm):  # crossings exceed inversions: not reduced
                continue
            dream = PipeDream(n, [boxes[b] for b in combo])
            found.setdefault(perm, []).append(dream)
    return {w: tuple(sorted(dreams)) for w, dreams in found.items()}


def enumerate_rp_fullgrid(w: Perm, bound: int = FULLGRID_BOUND_DEFAULT) -> tuple[PipeDream, ...]:
    """Same as enumerate_rp but searching the whole n x n grid.

    >>> enumerate_rp_fullgrid((1, 2)) == enumerate_rp((1, 2))
    True
    """
    w = check_perm(w)
    n = len(w)
    if n > bound:
        raise BoundExceededError(f"enumerate_rp_fullgrid at n={n} exceeds bound {bound}")
    if n not in _fullgrid_tables:
        _fullgrid_tables[n] = _fullgrid_table(n)
    return _fullgrid_tables[n].get(w, ())
