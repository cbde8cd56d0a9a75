"""The mitosis operator on pipe dreams and generation of RP(w) from the top.

For a pipe dream D and row i, let J = J_i(D) be the columns left of the
leftmost elbow of row i whose row-(i+1) box is empty.  The offspring D_p,
one per p in J, deletes the cross (i,p) and drops the row-i crosses in the
earlier J-columns down to row i+1.  Offspring are always produced in
increasing p, which matches the sequential chute description; both code
paths are kept for good, one validating the other.

Applying the operators along a reduced word for w0*w, starting from the
staircase dream, generates exactly RP(w).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from . import pipedream
from .permutations import (
    Perm,
    Word,
    compose,
    is_reduced_word,
    lex_first_reduced_word,
    long_permutation,
)
from .pipedream import PipeDream, apply_chute, chutable_rectangles, d0, j_columns


@dataclass(frozen=True)
class OffspringList:
    """Offspring of one parent under mitosis in one row, ordered by column."""

    parent: PipeDream
    row: int
    children: tuple[PipeDream, ...]

    def __iter__(self) -> Iterator[PipeDream]:
        return iter(self.children)

    def __len__(self) -> int:
        return len(self.children)


def mitosis(dream: PipeDream, i: int) -> OffspringList:
    """Offspring of a pipe dream in row i, ordered by increasing p in J_i(D).

    Empty J_i(D) gives an empty (but valid) offspring list; arbitrary pipe
    dreams are accepted, reducedness is not required by the operation.

    >>> [child.crosses for child in mitosis(d0(3), 2)]
    [((1, 1), (1, 2))]
    >>> len(mitosis(PipeDream(3, [(1, 2)]), 2))
    0
    """
    cols = j_columns(dream, i)
    children = []
    for k, p in enumerate(cols):
        earlier = cols[:k]
        child = dream.replace(
            remove=[(i, p)] + [(i, q) for q in earlier],
            add=[(i + 1, q) for q in earlier],
        )
        children.append(child)
    return OffspringList(dream, i, tuple(children))


def mitosis_offspring_sequential(dream: PipeDream, i: int) -> list[PipeDream]:
    """The same offspring via the sequential description: remove the cross at
    the smallest qualifying column, then chute leftmost-first within rows
    (i, i+1), recording each intermediate state.

    Kept as an independent route; tests assert it agrees with `mitosis`.
    """
    cols = j_columns(dream, i)
    if not cols:
        return []
    state = dream.replace(remove=[(i, cols[0])])
    children = [state]
    while len(children) < len(cols):
        rects = [r for r in chutable_rectangles(state) if r[0] == i]
        if not rects:
            raise AssertionError(f"chute sequence stalled on {dream!r} row {i}")
        state = apply_chute(state, min(rects))
        children.append(state)
    return children


def mitosis_set(dreams: Iterable[PipeDream], i: int) -> frozenset[PipeDream]:
    """Union of offspring over a set of parents.

    When the parents are reduced pipe dreams of a single permutation the
    per-parent offspring never collide; a collision therefore triggers the
    (cheap, lazy) check of that precondition and an assertion if it held.

    >>> sorted(d.crosses for d in mitosis_set([d0(3)], 1))
    [((1, 1), (2, 1))]
    """
    seen: dict[PipeDream, PipeDream] = {}
    sizes = set()
    for parent in dreams:
        sizes.add(parent.n)
        if len(sizes) > 1:
            raise ValueError("mitosis_set requires a single grid size")
        for child in mitosis(parent, i):
            other = seen.get(child)
            if other is not None and other != parent:
                _diagnose_collision(other, parent, child, i)
            seen[child] = parent
    return frozenset(seen)


def _diagnose_collision(a: PipeDream, b: PipeDream, child: PipeDream, i: int) -> None:
    # Theorem: distinct reduced parents with one wiring share no offspring.
    try:
        wa, wb = pipedream.wiring(a), pipedream.wiring(b)
        reduced = pipedream.is_reduced(a) and pipedream.is_reduced(b)
    except ValueError:
        return
    if reduced and wa.perm == wb.perm:
        raise AssertionError(
            f"disjointness violated: {a!r} and {b!r} share offspring {child!r} "
            f"under mitosis_{i}"
        )


def mitosis_along(
    word: Sequence[int], start: Iterable[PipeDream]
) -> list[frozenset[PipeDream]]:
    """Trajectory of sets [start, after i_1, after i_1 i_2, ...].

    >>> [len(layer) for layer in mitosis_along((2, 1, 2), [d0(3)])]
    [1, 1, 2, 1]
    """
    layers = [frozenset(start)]
    for letter in word:
        layers.append(mitosis_set(layers[-1], letter))
    return layers


_chain_cache: dict[tuple[int, Word], frozenset[PipeDream]] = {}


def _fiber_after(n: int, prefix: Word) -> frozenset[PipeDream]:
    """Mitosis of {D0(n)} along a word prefix, cached across calls.

    Lex-first words of different targets share long prefixes, so the cache
    turns the all-of-S_n sweeps from quadratic back into linear work.
    """
    key = (n, prefix)
    cached = _chain_cache.get(key)
    if cached is None:
        if prefix:
            cached = mitosis_set(_fiber_after(n, prefix[:-1]), prefix[-1])
        else:
            cached = frozenset([d0(n)])
        _chain_cache[key] = cached
    return cached


def rp_by_mitosis(w: Perm, word: Word | None = None) -> frozenset[PipeDream]:
    """RP(w), generated by mitosis along a reduced word for w0*w.

    The default word is the lex-first one (always poptotic, so no dead
    branches); any other reduced word for w0*w may be supplied and yields
    the same set.

    >>> sorted(d.crosses for d in rp_by_mitosis((1, 3, 2)))
    [((1, 2),), ((2, 1),)]
    >>> rp_by_mitosis((3, 2, 1)) == frozenset([d0(3)])
    True
    """
    n = len(w)
    v = compose(long_permutation(n), w)
    if word is None:
        word = lex_first_reduced_word(v)
    else:
        word = tuple(word)
        if not is_reduced_word(word, v):
            raise ValueError(f"{word} is not a reduced word for w0*w = {v}")
    return _fiber_after(n, word)
