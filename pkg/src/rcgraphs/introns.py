"""Introns, intron mutation, and the row-swapping involution on RP(w).

Fix a row index i.  East of the leftmost elbow of row i, the two-row strip
(i, i+1) of a reduced pipe dream splits uniquely into blocks that are either
solid 2 x k rectangles of crosses or *maximal introns*: windows whose NW and
SE corners are elbows and whose elbows never sit strictly NE or SW of one
another.  Mutating every maximal intron (swapping its two row counts while
keeping the double-cross columns fixed) is an involution on RP(w) which
swaps the number of crosses the two rows own east of the split column.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, Union

from .pipedream import PipeDream, is_reduced, start_row


class ColumnKind(enum.Enum):
    """Contents of one column of a two-row window."""

    BOTH_CROSS = "++"
    ELBOW_OVER_CROSS = ".+"
    CROSS_OVER_ELBOW = "+."
    BOTH_ELBOW = ".."


_CC = ColumnKind.BOTH_CROSS
_EC = ColumnKind.ELBOW_OVER_CROSS
_CE = ColumnKind.CROSS_OVER_ELBOW
_EE = ColumnKind.BOTH_ELBOW


def classify_column(dream: PipeDream, i: int, col: int) -> ColumnKind:
    top, bottom = dream.has(i, col), dream.has(i + 1, col)
    if top and bottom:
        return _CC
    if bottom:
        return _EC
    if top:
        return _CE
    return _EE


@dataclass(frozen=True)
class Intron:
    """A 2 x k window in rows (row, row+1), columns col_start onward.

    Invariants: the NW and SE corner boxes are elbows, and ignoring
    double-cross columns the kinds read as some ELBOW_OVER_CROSS, at most
    one BOTH_ELBOW, then some CROSS_OVER_ELBOW.
    """

    row: int
    col_start: int
    kinds: tuple[ColumnKind, ...]

    def __post_init__(self):
        if not self.kinds:
            raise ValueError("empty intron")
        if self.kinds[0] not in (_EC, _EE):
            raise ValueError(f"NW corner of {self} is not an elbow")
        if self.kinds[-1] not in (_CE, _EE):
            raise ValueError(f"SE corner of {self} is not an elbow")
        phase = 0  # 0: elbow-over-cross run, 1: seen the both-elbow column, 2: cross-over-elbow run
        for kind in self.kinds:
            if kind is _CC:
                continue
            if kind is _EC:
                if phase > 0:
                    raise ValueError(f"elbow NE of an elbow in {self}")
            elif kind is _EE:
                if phase > 0:
                    raise ValueError(f"two both-elbow columns in {self}")
                phase = 1
            else:
                phase = 2

    @property
    def col_end(self) -> int:
        return self.col_start + len(self.kinds) - 1

    def row_cross_count(self, r: int) -> int:
        """Crosses of the intron in row r (r is row or row+1)."""
        if r == self.row:
            hit = (_CC, _CE)
        elif r == self.row + 1:
            hit = (_CC, _EC)
        else:
            raise ValueError(f"row {r} not in intron rows {self.row},{self.row + 1}")
        return sum(1 for kind in self.kinds if kind in hit)

    def crosses(self) -> Iterator[tuple[int, int]]:
        for offset, kind in enumerate(self.kinds):
            col = self.col_start + offset
            if kind in (_CC, _CE):
                yield (self.row, col)
            if kind in (_CC, _EC):
                yield (self.row + 1, col)


def mutate_intron(intron: Intron) -> Intron:
    """The unique intron with the same double-cross columns and swapped
    row cross counts: the non-double-cross slots are refilled with the
    forced arrangement, so the construction is manifestly involutive.

    >>> C = Intron(1, 1, (ColumnKind.ELBOW_OVER_CROSS, ColumnKind.CROSS_OVER_ELBOW))
    >>> mutate_intron(mutate_intron(C)) == C
    True
    """
    n_ec = sum(1 for k in intron.kinds if k is _EC)
    n_ee = sum(1 for k in intron.kinds if k is _EE)
    n_ce = sum(1 for k in intron.kinds if k is _CE)
    refill = [_EC] * n_ce + [_EE] * n_ee + [_CE] * n_ec
    new_kinds = []
    slot = 0
    for kind in intron.kinds:
        if kind is _CC:
            new_kinds.append(_CC)
        else:
            new_kinds.append(refill[slot])
            slot += 1
    return Intron(intron.row, intron.col_start, tuple(new_kinds))


@dataclass(frozen=True)
class SolidBlock:
    """A 2 x k rectangle completely filled with crosses."""

    row: int
    col_start: int
    col_end: int

    def crosses(self) -> Iterator[tuple[int, int]]:
        for col in range(self.col_start, self.col_end + 1):
            yield (self.row, col)
            yield (self.row + 1, col)


Block = Union[Intron, SolidBlock]


@dataclass(frozen=True)
class RowPairDecomposition:
    """Blocks covering rows (row, row+1) from the split column east to n."""

    row: int
    start: int
    blocks: tuple[Block, ...]

    def introns(self) -> list[Intron]:
        return [b for b in self.blocks if isinstance(b, Intron)]


def decompose(dream: PipeDream, i: int) -> RowPairDecomposition:
    """Split rows (i, i+1) east of start_row(D, i) into maximal introns and
    solid cross rectangles.  The split is unique; a re-scan asserts that the
    blocks tile the region exactly.

    Requires a reduced pipe dream (the uniqueness argument does).
    """
    if not 1 <= i <= dream.n - 1:
        raise IndexError(f"row {i} out of range 1..{dream.n - 1}")
    if not is_reduced(dream):
        raise ValueError("decompose is only defined on reduced pipe dreams")
    n = dream.n
    s = start_row(dream, i)
    assert s <= n, "row i cannot be solid across the whole staircase grid"

    elbows = []  # (0 for row i, 1 for row i+1, column), in reading order
    for col in range(s, n + 1):
        if not dream.has(i, col):
            elbows.append((0, col))
        if not dream.has(i + 1, col):
            elbows.append((1, col))
    assert elbows and elbows[0] == (0, s) and elbows[-1] == (1, n)

    segments: list[list[tuple[int, int]]] = [[elbows[0]]]
    for prev, cur in zip(elbows, elbows[1:]):
        if prev[0] == 1 and cur[0] == 0:  # row i+1 elbow then row i elbow: new intron
            segments.append([cur])
        else:
            segments[-1].append(cur)

    blocks: list[Block] = []
    prev_end = s - 1
    for seg in segments:
        a, b = seg[0][1], seg[-1][1]
        assert seg[0][0] == 0 and seg[-1][0] == 1
        if a > prev_end + 1:
            solid = SolidBlock(i, prev_end + 1, a - 1)
            assert all(
                dream.has(r, c)
                for r, c in solid.crosses()
            ), f"gap {solid} is not solid crosses"
            blocks.append(solid)
        kinds = tuple(classify_column(dream, i, col) for col in range(a, b + 1))
        blocks.append(Intron(i, a, kinds))
        prev_end = b
    assert prev_end == n

    region = {
        (r, c)
        for r, c in dream.crosses
        if r in (i, i + 1) and c >= s
    }
    rebuilt = {pos for block in blocks for pos in block.crosses()}
    assert rebuilt == region, "decomposition does not tile the strip"
    return RowPairDecomposition(i, s, tuple(blocks))


def tau(dream: PipeDream, i: int) -> PipeDream:
    """The intron-mutation involution on RP(w) in rows (i, i+1).

    Fixes everything outside the two rows and everything strictly west of
    start_row(D, i), and swaps the east cross counts of the two rows.

    >>> from .pipedream import d0
    >>> tau(d0(3), 1) == d0(3)
    True
    """
    decomposition = decompose(dream, i)
    kept = [
        (r, c)
        for r, c in dream.crosses
        if r not in (i, i + 1) or c < decomposition.start
    ]
    mutated: list[tuple[int, int]] = []
    for block in decomposition.blocks:
        if isinstance(block, Intron):
            block = mutate_intron(block)
        mutated.extend(block.crosses())
    return PipeDream(dream.n, kept + mutated)


def ell(dream: PipeDream, i: int, r: int) -> int:
    """Crosses of row r east of or in column start_row(D, i); r is i or i+1.

    >>> ell(PipeDream(3), 1, 1)
    0
    """
    if r not in (i, i + 1):
        raise ValueError(f"row {r} must be {i} or {i + 1}")
    s = start_row(dream, i)
    return sum(1 for rr, c in dream.crosses if rr == r and c >= s)
