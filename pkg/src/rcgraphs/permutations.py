"""Permutations of S_n in one-line notation and words in the generators s_i.

Conventions (1-based throughout):

- A permutation w is a tuple ``(w(1), ..., w(n))`` of the values 1..n.
- s_i swaps i and i+1.  Multiplying on the right, ``w * s_i``, swaps the
  *positions* i, i+1 of the one-line word; multiplying on the left swaps
  the *values* i, i+1.
- A word ``(i_1, ..., i_k)`` stands for the product s_{i_1} s_{i_2} ... s_{i_k},
  composed so that the rightmost factor acts first.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Sequence

Perm = tuple[int, ...]
Word = tuple[int, ...]

ALL_REDUCED_WORDS_BOUND = 12  # guard for all_reduced_words, not a math limit


class BoundExceededError(RuntimeError):
    """An exhaustive computation was asked to exceed its configured bound."""


def check_perm(word: Sequence[int]) -> Perm:
    """Validate one-line notation (a bijection of 1..n) and return it as a tuple.

    >>> check_perm([2, 1, 3])
    (2, 1, 3)
    >>> check_perm([1, 1, 3])
    Traceback (most recent call last):
        ...
    ValueError: not a permutation of 1..3: (1, 1, 3)
    """
    w = tuple(word)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"not a permutation of 1..{len(w)}: {w}")
    return w


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def long_permutation(n: int) -> Perm:
    """The long permutation n, n-1, ..., 1.

    >>> long_permutation(3)
    (3, 2, 1)
    """
    return tuple(range(n, 0, -1))


def length(w: Perm) -> int:
    """Number of inversions of w.

    >>> length((1, 2, 3, 4))
    0
    >>> length((3, 2, 1))
    3
    """
    return sum(1 for i, j in itertools.combinations(range(len(w)), 2) if w[i] > w[j])


def inverse(w: Perm) -> Perm:
    inv = [0] * len(w)
    for pos, value in enumerate(w):
        inv[value - 1] = pos + 1
    return tuple(inv)


def compose(x: Perm, y: Perm) -> Perm:
    """The product xy, i.e. the map k -> x(y(k)).

    >>> compose((2, 1, 3), (1, 3, 2))
    (2, 3, 1)
    """
    if len(x) != len(y):
        raise ValueError(f"size mismatch: {len(x)} vs {len(y)}")
    return tuple(x[k - 1] for k in y)


def multiply_right_s(w: Perm, i: int) -> Perm:
    """w * s_i: swap the entries in positions i and i+1 (1-based).

    >>> multiply_right_s((3, 2, 1), 2)
    (3, 1, 2)
    >>> multiply_right_s((1, 2, 3), 1)
    (2, 1, 3)
    """
    _check_generator(len(w), i)
    lst = list(w)
    lst[i - 1], lst[i] = lst[i], lst[i - 1]
    return tuple(lst)


def multiply_left_s(w: Perm, i: int) -> Perm:
    """s_i * w: swap the values i and i+1 wherever they occur."""
    _check_generator(len(w), i)
    return tuple(i + 1 if v == i else i if v == i + 1 else v for v in w)


def has_right_descent(w: Perm, i: int) -> bool:
    """True iff w(i) > w(i+1), i.e. length(w s_i) < length(w).

    >>> has_right_descent((3, 2, 1), 1)
    True
    >>> has_right_descent((1, 2, 3), 2)
    False
    """
    _check_generator(len(w), i)
    return w[i - 1] > w[i]


def has_left_descent(w: Perm, i: int) -> bool:
    """True iff length(s_i w) < length(w): the value i appears after i+1."""
    _check_generator(len(w), i)
    return w.index(i) > w.index(i + 1)


def right_descents(w: Perm) -> tuple[int, ...]:
    return tuple(i for i in range(1, len(w)) if w[i - 1] > w[i])


def word_product(word: Iterable[int], n: int) -> Perm:
    """Evaluate the word (i_1, ..., i_k) to the permutation s_{i_1} ... s_{i_k}.

    >>> word_product((1, 2), 3)
    (2, 3, 1)
    >>> word_product((), 3)
    (1, 2, 3)
    """
    w = identity(n)
    for i in word:
        w = multiply_right_s(w, i)
    return w


def is_reduced_word(word: Sequence[int], v: Perm) -> bool:
    """True iff the word multiplies to v and has length(v) letters."""
    return len(word) == length(v) and word_product(word, len(v)) == v


def lex_first_reduced_word(v: Perm) -> Word:
    """The lexicographically smallest reduced word for v (letter 1 ranks first).

    Computed greedily: the first letter is the smallest left descent i of v,
    after which we recurse on s_i v.  Each left descent starts some reduced
    word, so the greedy choice is safe.

    >>> lex_first_reduced_word((3, 2, 1))
    (1, 2, 1)
    >>> lex_first_reduced_word((1, 2, 3))
    ()
    """
    v = check_perm(v)
    n = len(v)
    letters = []
    while v != identity(n):
        i = next(i for i in range(1, n) if has_left_descent(v, i))
        letters.append(i)
        v = multiply_left_s(v, i)
    return tuple(letters)


def all_reduced_words(v: Perm, bound: int = ALL_REDUCED_WORDS_BOUND) -> list[Word]:
    """All reduced words for v, in lexicographic order.

    Recurses over left descents, so the recursion depth is length(v); the
    configurable bound keeps the output from exploding.

    >>> all_reduced_words((3, 2, 1))
    [(1, 2, 1), (2, 1, 2)]
    >>> all_reduced_words((1, 2, 3))
    [()]
    """
    v = check_perm(v)
    if length(v) > bound:
        raise BoundExceededError(
            f"length {length(v)} exceeds bound {bound} for all_reduced_words"
        )
    n = len(v)

    def rec(u: Perm) -> Iterator[Word]:
        descents = [i for i in range(1, n) if has_left_descent(u, i)]
        if not descents:
            yield ()
            return
        for i in descents:
            for tail in rec(multiply_left_s(u, i)):
                yield (i,) + tail

    return sorted(rec(v))


def rothe_diagram(w: Perm) -> list[tuple[int, int]]:
    """The diagram {(i,j) : j < w(i) and w^{-1}(j) > i}, row-major."""
    inv = inverse(w)
    return [
        (i, j)
        for i in range(1, len(w) + 1)
        for j in range(1, w[i - 1])
        if inv[j - 1] > i
    ]


def is_dominant(w: Perm) -> bool:
    """True iff the Rothe diagram of w is a Young diagram in the NW corner.

    >>> is_dominant((3, 2, 1))
    True
    >>> is_dominant((1, 3, 2))
    False
    """
    rows: dict[int, list[int]] = {}
    for i, j in rothe_diagram(w):
        rows.setdefault(i, []).append(j)
    lengths = [len(rows.get(i, [])) for i in range(1, len(w) + 1)]
    left_justified = all(
        sorted(cols) == list(range(1, len(cols) + 1)) for cols in rows.values()
    )
    return left_justified and all(a >= b for a, b in zip(lengths, lengths[1:]))


def perm_from_str(text: str) -> Perm:
    """Parse one-line notation: compact digits for n <= 9, commas otherwise.

    >>> perm_from_str("2143")
    (2, 1, 4, 3)
    >>> perm_from_str("10,2,3,4,5,6,7,8,9,1")[0]
    10
    """
    text = text.strip()
    if not text:
        raise ValueError("empty permutation")
    try:
        if "," in text:
            word = [int(part) for part in text.split(",")]
        else:
            word = [int(ch) for ch in text]
    except ValueError:
        raise ValueError(f"cannot parse permutation: {text!r}") from None
    return check_perm(word)


def perm_to_str(w: Perm) -> str:
    if len(w) <= 9:
        return "".join(str(v) for v in w)
    return ",".join(str(v) for v in w)


def all_permutations(n: int) -> Iterator[Perm]:
    """All of S_n in lexicographic order."""
    return itertools.permutations(range(1, n + 1))


def _check_generator(n: int, i: int) -> None:
    if not 1 <= i <= n - 1:
        raise IndexError(f"generator index {i} out of range 1..{n - 1}")
