"""Pipe dreams on the n x n grid and their wiring.

A pipe dream is stored as the set of its crossing tiles, 1-based, row-major.
Tile semantics (the figures never say this in words, so it is pinned here):

- crossing tile: the strand entering from the west leaves east, and the
  strand entering from the south leaves north;
- elbow tile: west turns to north, south turns to east.

Pipe i enters at the west edge of row i and, for the pipe dreams this
library admits, exits through the north edge of some column.  Policy: all
crosses must lie strictly above the main antidiagonal (row + col <= n),
i.e. inside the staircase of the long permutation.  This matches the region
the recursion lives in and keeps the wiring total; the full-grid oracle
validates the policy empirically at small n.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .permutations import Perm, length


class PipeDream:
    """An immutable set of crossing positions in the n x n grid."""

    __slots__ = ("n", "crosses", "_mask", "_hash")

    def __init__(self, n: int, crosses: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise ValueError(f"grid size must be positive, got {n}")
        pts = sorted(set((int(r), int(c)) for r, c in crosses))
        for r, c in pts:
            if not (1 <= r <= n and 1 <= c <= n):
                raise ValueError(f"cross ({r},{c}) outside the {n}x{n} grid")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "crosses", tuple(pts))
        mask = 0
        for r, c in pts:
            mask |= 1 << ((r - 1) * n + (c - 1))
        object.__setattr__(self, "_mask", mask)
        object.__setattr__(self, "_hash", hash((n, self.crosses)))

    def __setattr__(self, name, value):
        raise AttributeError("PipeDream is immutable")

    def has(self, r: int, c: int) -> bool:
        """Membership test; positions off the grid count as elbows."""
        if 1 <= r <= self.n and 1 <= c <= self.n:
            return bool(self._mask >> ((r - 1) * self.n + (c - 1)) & 1)
        return False

    def __contains__(self, pos: tuple[int, int]) -> bool:
        return self.has(*pos)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.crosses)

    def __len__(self) -> int:
        return len(self.crosses)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PipeDream)
            and self.n == other.n
            and self.crosses == other.crosses
        )

    def __lt__(self, other: "PipeDream") -> bool:
        return (self.n, self.crosses) < (other.n, other.crosses)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"PipeDream({self.n}, {list(self.crosses)})"

    def in_staircase(self) -> bool:
        return all(r + c <= self.n for r, c in self.crosses)

    def row(self, r: int) -> tuple[int, ...]:
        """Columns of the crosses in row r."""
        return tuple(c for rr, c in self.crosses if rr == r)

    def replace(
        self,
        remove: Iterable[tuple[int, int]] = (),
        add: Iterable[tuple[int, int]] = (),
    ) -> "PipeDream":
        pts = set(self.crosses)
        for pos in remove:
            if pos not in pts:
                raise ValueError(f"no cross at {pos}")
            pts.remove(pos)
        for pos in add:
            if pos in pts:
                raise ValueError(f"cross already at {pos}")
            pts.add(pos)
        return PipeDream(self.n, pts)

    def ascii(self) -> str:
        """Grid of '+' (cross) and '.' (elbow), one line per row."""
        return "\n".join(
            "".join("+" if self.has(r, c) else "." for c in range(1, self.n + 1))
            for r in range(1, self.n + 1)
        )

    def to_json(self) -> dict:
        return {"n": self.n, "crosses": [list(pos) for pos in self.crosses]}

    @staticmethod
    def from_json(data: dict) -> "PipeDream":
        try:
            n = data["n"]
            crosses = [(r, c) for r, c in data["crosses"]]
        except (KeyError, TypeError, ValueError):
            raise ValueError(f"malformed pipe dream JSON: {data!r}") from None
        return PipeDream(n, crosses)


@dataclass(frozen=True)
class Wiring:
    """Exit permutation plus, per pipe pair, how many tiles they cross at."""

    perm: Perm
    crossing_multiplicity: dict[tuple[int, int], int]


def d0(n: int) -> PipeDream:
    """The staircase pipe dream: crosses exactly where row + col <= n.

    >>> d0(3).crosses
    ((1, 1), (1, 2), (2, 1))
    >>> d0(1).crosses
    ()
    """
    return PipeDream(n, [(r, c) for r in range(1, n) for c in range(1, n - r + 1)])


def render_ascii(dream: PipeDream) -> str:
    return dream.ascii()


def _trace_perm(n: int, mask: int) -> tuple[int, ...] | None:
    """Exit columns of pipes 1..n, or None if some pipe escapes east.

    For staircase-confined dreams every pipe exits north within the grid.
    """
    out = []
    for start in range(1, n + 1):
        r, c, east = start, 1, True
        while r >= 1:
            if c > n:
                return None
            if mask >> ((r - 1) * n + (c - 1)) & 1:
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


def _trace_pipe_tiles(dream: PipeDream, start: int) -> tuple[int, list[tuple[int, int]]]:
    """Exit column of one pipe plus the crossing tiles it passes through."""
    n = dream.n
    r, c, east = start, 1, True
    tiles = []
    while r >= 1:
        if c > n:
            raise ValueError(
                f"pipe {start} escapes east of the grid; "
                "wiring is only defined inside the staircase"
            )
        if dream.has(r, c):
            tiles.append((r, c))
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
    return c, tiles


def wiring(dream: PipeDream) -> Wiring:
    """Trace all pipes: pipe i exits column perm(i); count pairwise crossings.

    Raises ValueError if some cross lies on or below the main antidiagonal
    (policy: pipe dreams live inside the staircase).

    >>> wiring(d0(3)).perm
    (3, 2, 1)
    >>> wiring(PipeDream(3)).perm
    (1, 2, 3)
    """
    if not dream.in_staircase():
        bad = next(pos for pos in dream.crosses if sum(pos) > dream.n)
        raise ValueError(
            f"cross at {bad} lies on or below the antidiagonal of the "
            f"{dream.n}x{dream.n} grid"
        )
    exits = []
    by_tile: dict[tuple[int, int], list[int]] = {}
    for start in range(1, dream.n + 1):
        col, tiles = _trace_pipe_tiles(dream, start)
        exits.append(col)
        for tile in tiles:
            by_tile.setdefault(tile, []).append(start)
    perm = tuple(exits)
    if sorted(perm) != list(range(1, dream.n + 1)):
        raise AssertionError(f"exits {perm} do not form a permutation")
    multiplicity: dict[tuple[int, int], int] = {}
    for tile, pipes in by_tile.items():
        assert len(pipes) == 2, f"tile {tile} carries {len(pipes)} pipes"
        pair = (min(pipes), max(pipes))
        multiplicity[pair] = multiplicity.get(pair, 0) + 1
    return Wiring(perm, multiplicity)


def is_reduced(dream: PipeDream) -> bool:
    """True iff no pair of pipes crosses twice.

    Both characterizations are computed and must agree: all crossing
    multiplicities <= 1, and |crosses| == length of the exit permutation.

    >>> is_reduced(d0(4))
    True
    >>> is_reduced(PipeDream(3, [(1, 2), (2, 1)]))
    False
    """
    w = wiring(dream)
    by_pairs = all(m <= 1 for m in w.crossing_multiplicity.values())
    by_count = len(dream) == length(w.perm)
    assert by_pairs == by_count, (dream, w)
    return by_pairs


def start_row(dream: PipeDream, i: int) -> int:
    """Column of the leftmost elbow in row i (sentinel n+1 if the row is full).

    >>> start_row(d0(3), 1)
    3
    >>> start_row(PipeDream(3), 2)
    1
    """
    if not 1 <= i <= dream.n:
        raise IndexError(f"row {i} out of range 1..{dream.n}")
    for j in range(1, dream.n + 1):
        if not dream.has(i, j):
            return j
    return dream.n + 1


def j_columns(dream: PipeDream, i: int) -> tuple[int, ...]:
    """Columns left of start_row(D, i) whose row-(i+1) box is an elbow.

    These index the mitosis offspring of D in row i, in increasing order.

    >>> j_columns(d0(3), 2)
    (1,)
    """
    if not 1 <= i <= dream.n - 1:
        raise IndexError(f"row {i} out of range 1..{dream.n - 1}")
    start = start_row(dream, i)
    return tuple(j for j in range(1, start) if not dream.has(i + 1, j))


Rectangle = tuple[int, int, int]  # (row i, west column a, east column b)


def chutable_rectangles(dream: PipeDream) -> list[Rectangle]:
    """All 2 x k rectangles (k >= 2) that admit a chute move.

    A rectangle spans rows (i, i+1) and columns a..b, with crosses
    everywhere except its northwest, southwest, and southeast corners.
    """
    found = []
    for i in range(1, dream.n):
        for a in range(1, dream.n):
            if dream.has(i, a) or dream.has(i + 1, a):
                continue
            for b in range(a + 1, dream.n + 1):
                interior_ok = all(
                    dream.has(i, c) and dream.has(i + 1, c) for c in range(a + 1, b)
                )
                if not interior_ok:
                    break
                if dream.has(i, b) and not dream.has(i + 1, b):
                    found.append((i, a, b))
    return found


def _check_chutable(dream: PipeDream, rect: Rectangle) -> None:
    i, a, b = rect
    ok = (
        1 <= i <= dream.n - 1
        and 1 <= a < b <= dream.n
        and not dream.has(i, a)
        and not dream.has(i + 1, a)
        and not dream.has(i + 1, b)
        and dream.has(i, b)
        and all(dream.has(i, c) and dream.has(i + 1, c) for c in range(a + 1, b))
    )
    if not ok:
        raise ValueError(f"rectangle {rect} is not chutable in {dream!r}")


def apply_chute(dream: PipeDream, rect: Rectangle) -> PipeDream:
    """Move the northeast cross of a chutable rectangle to its southwest corner.

    Preserves the wiring and reducedness: only the two pipes meeting at the
    northeast corner are affected, and they now cross at the southwest corner.

    >>> apply_chute(PipeDream(3, [(1, 2)]), (1, 1, 2)).crosses
    ((2, 1),)
    """
    _check_chutable(dream, rect)
    i, a, b = rect
    return dream.replace(remove=[(i, b)], add=[(i + 1, a)])


def apply_inverse_chute(dream: PipeDream, rect: Rectangle) -> PipeDream:
    """Undo a chute move: lift the southwest cross back to the northeast corner.

    >>> apply_inverse_chute(PipeDream(3, [(2, 1)]), (1, 1, 2)).crosses
    ((1, 2),)
    """
    i, a, b = rect
    lifted = dream.replace(remove=[(i + 1, a)], add=[(i, b)])
    _check_chutable(lifted, rect)  # validates the full pattern
    return lifted


def has_elbow_over_cross(dream: PipeDream) -> bool:
    """True iff some column has an elbow directly above a cross."""
    return any(
        dream.has(r + 1, c) and not dream.has(r, c)
        for r in range(1, dream.n)
        for c in range(1, dream.n + 1)
    )


def top_pipe_dream(w: Perm, bound: int | None = None) -> PipeDream:
    """The unique reduced pipe dream for w with no elbow atop a cross.

    Implemented by filtering the brute-force enumeration; uniqueness is
    asserted, not assumed.

    >>> top_pipe_dream((3, 2, 1)) == d0(3)
    True
    >>> top_pipe_dream((1, 2, 3)).crosses
    ()
    """
    from . import oracle  # local import: oracle builds on this module

    kwargs = {} if bound is None else {"bound": bound}
    tops = [
        dream
        for dream in oracle.enumerate_rp(w, **kwargs)
        if not has_elbow_over_cross(dream)
    ]
    assert len(tops) == 1, f"expected a unique top pipe dream for {w}, got {tops}"
    return tops[0]
