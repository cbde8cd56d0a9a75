"""The mitosis poset, preimage trees over weak-order paths, and shellings.

All reduced pipe dreams for all of S_n form a poset graded by the number of
crosses: D' lies under D when D' is a mitosis offspring of D.  Its fibers
over the weak Bruhat order are the sets RP(w).  A reduced word for w0*w
labels a decreasing weak-order path; iterating mitosis along it sweeps out a
tree over the path whose bottom layer is RP(w) and whose extra leaves, if
any, are the pipe dreams that died childless along the way.  Paths without
such deaths are poptotic, and the lex-first word always gives one.

The subword complex of w has the complements of the reduced pipe dreams as
facets; `is_shelling` implements the standard pure-shelling test so that
breadth-first poptotic orders can be checked for the conjectured shellings.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import oracle
from .mitosis import mitosis
from .permutations import (
    BoundExceededError,
    Perm,
    Word,
    is_reduced_word,
    length,
    long_permutation,
    multiply_right_s,
    perm_to_str,
    word_product,
)
from .pipedream import PipeDream

POSET_BOUND_DEFAULT = 6


@dataclass(frozen=True)
class MitosisPoset:
    """All reduced pipe dreams for S_n with the offspring relation."""

    n: int
    fibers: dict[Perm, tuple[PipeDream, ...]]
    edges: tuple[tuple[PipeDream, PipeDream, int], ...]  # (parent, child, row)

    @property
    def nodes(self) -> list[PipeDream]:
        return [dream for _, dreams in self.sorted_fibers() for dream in dreams]

    def sorted_fibers(self) -> list[tuple[Perm, tuple[PipeDream, ...]]]:
        """Fibers from the long permutation down to the identity."""
        return sorted(self.fibers.items(), key=lambda kv: (-length(kv[0]), kv[0]))

    def perm_of(self, dream: PipeDream) -> Perm:
        for w, dreams in self.fibers.items():
            if dream in dreams:
                return w
        raise KeyError(f"{dream!r} is not a node")


def build_poset(n: int, bound: int = POSET_BOUND_DEFAULT) -> MitosisPoset:
    """Assemble the poset for S_n: oracle fibers plus all mitosis edges.

    >>> poset = build_poset(3)
    >>> len(poset.nodes), len(poset.edges)
    (7, 7)
    >>> build_poset(1).edges
    ()
    """
    if n > bound:
        raise BoundExceededError(f"build_poset at n={n} exceeds bound {bound}")
    fibers = dict(oracle.rp_table(n, bound=max(bound, oracle.ORACLE_BOUND_DEFAULT)))
    edges = []
    for w, dreams in sorted(fibers.items(), key=lambda kv: (-length(kv[0]), kv[0])):
        for dream in dreams:
            for i in range(1, n):
                for child in mitosis(dream, i):
                    edges.append((dream, child, i))
    return MitosisPoset(n, fibers, tuple(edges))


@dataclass(frozen=True)
class PreimageTree:
    """The preimage of a decreasing weak-order path, layer by layer.

    Layer t holds the pipe dreams after the first t letters, in
    breadth-first discovery order; every layer is the full fiber over the
    t-th permutation of the path.  `links[t]` connects layer t to layer
    t+1 by (parent index, child index) pairs, all labeled word[t].
    """

    word: Word
    perms: tuple[Perm, ...]
    layers: tuple[tuple[PipeDream, ...], ...]
    links: tuple[tuple[tuple[int, int], ...], ...]

    def leaves(self) -> list[PipeDream]:
        """All childless nodes, dead interior ones first."""
        dead = []
        for t, layer in enumerate(self.layers[:-1]):
            with_children = {p for p, _ in self.links[t]}
            dead.extend(d for k, d in enumerate(layer) if k not in with_children)
        return dead + list(self.layers[-1])

    def dead_nodes(self) -> list[PipeDream]:
        all_leaves = self.leaves()
        return all_leaves[: len(all_leaves) - len(self.layers[-1])]


def preimage_tree(word: Sequence[int], n: int | None = None) -> PreimageTree:
    """Iterate mitosis along a reduced word, keeping the whole tree.

    The word must be reduced (for the product of its letters); the path it
    labels runs from w0 down to w0 * product.

    >>> tree = preimage_tree((1, 2, 1), 3)
    >>> [len(layer) for layer in tree.layers]
    [1, 1, 1, 1]
    >>> len(preimage_tree((2, 1, 2), 3).dead_nodes())
    1
    """
    word = tuple(word)
    if n is None:
        if not word:
            raise ValueError("cannot infer the grid size from an empty word")
        n = max(word) + 1
    product = word_product(word, n)
    if not is_reduced_word(word, product):
        raise ValueError(f"{word} is not a reduced word")

    from .pipedream import d0

    w = long_permutation(n)
    perms = [w]
    layers: list[tuple[PipeDream, ...]] = [(d0(n),)]
    links: list[tuple[tuple[int, int], ...]] = []
    for letter in word:
        next_layer: list[PipeDream] = []
        step: list[tuple[int, int]] = []
        seen: set[PipeDream] = set()
        for p_idx, parent in enumerate(layers[-1]):
            for child in mitosis(parent, letter):
                assert child not in seen, "two parents shared an offspring"
                seen.add(child)
                step.append((p_idx, len(next_layer)))
                next_layer.append(child)
        layers.append(tuple(next_layer))
        links.append(tuple(step))
        w = multiply_right_s(w, letter)
        perms.append(w)
    return PreimageTree(word, tuple(perms), tuple(layers), tuple(links))


def is_poptotic(word: Sequence[int], n: int | None = None) -> bool:
    """True iff no pipe dream over the path's interior dies childless,
    equivalently iff the tree's leaves are exactly RP(w).  Both readings
    are computed and must agree.

    >>> is_poptotic((1, 2, 1), 3)
    True
    >>> is_poptotic((2, 1, 2), 3)
    False
    """
    tree = preimage_tree(word, n)
    no_deaths = not tree.dead_nodes()
    target = set(oracle.enumerate_rp(tree.perms[-1]))
    leaves_exact = set(tree.leaves()) == target
    assert no_deaths == leaves_exact
    return no_deaths


def bfs_order(word: Sequence[int], n: int | None = None) -> list[PipeDream]:
    """RP(w) in breadth-first order over the preimage tree of the word,
    offspring ordered as mitosis emits them.

    >>> [d.crosses for d in bfs_order((2, 1), 3)]
    [((1, 2),), ((2, 1),)]
    """
    return list(preimage_tree(word, n).layers[-1])


def triangle_order(n: int) -> list[tuple[int, int]]:
    """The staircase boxes in the numbering used to read off reduced words:
    column by column from the rightmost, each column bottom to top.

    >>> [r for r, c in triangle_order(4)]
    [1, 2, 1, 3, 2, 1]
    """
    return [(r, c) for c in range(n - 1, 0, -1) for r in range(n - c, 0, -1)]


def top_dream_word(dream: PipeDream) -> Word:
    """Row indices of the elbows of a top pipe dream, read in the triangle
    numbering: the lex-first reduced word for w0 * (its wiring)."""
    return tuple(r for r, c in triangle_order(dream.n) if not dream.has(r, c))


@dataclass(frozen=True)
class SimplicialComplex:
    """A pure complex on the n x n grid boxes, given by its facets."""

    n: int
    facets: tuple[frozenset[tuple[int, int]], ...]

    def __post_init__(self):
        sizes = {len(f) for f in self.facets}
        if len(sizes) > 1:
            raise ValueError(f"complex is not pure: facet sizes {sorted(sizes)}")

    def facet_index(self, dream: PipeDream) -> int:
        """Index of the facet complementary to the given pipe dream."""
        return self.facets.index(_complement(dream))


def _complement(dream: PipeDream) -> frozenset[tuple[int, int]]:
    n = dream.n
    return frozenset(
        (r, c)
        for r in range(1, n + 1)
        for c in range(1, n + 1)
        if not dream.has(r, c)
    )


def subword_complex(w: Perm, bound: int = POSET_BOUND_DEFAULT) -> SimplicialComplex:
    """The complex on the n x n grid whose facets are the complements of
    the reduced pipe dreams for w; facet k complements enumerate_rp(w)[k].

    >>> complex_ = subword_complex((1, 3, 2))
    >>> [len(f) for f in complex_.facets]
    [8, 8]
    """
    n = len(w)
    if n > bound:
        raise BoundExceededError(f"subword_complex at n={n} exceeds bound {bound}")
    dreams = oracle.enumerate_rp(w, bound=max(bound, oracle.ORACLE_BOUND_DEFAULT))
    facets = tuple(_complement(dream) for dream in dreams)
    complex_ = SimplicialComplex(n, facets)
    assert all(len(f) == n * n - length(w) for f in facets)
    return complex_


def is_shelling(complex_: SimplicialComplex, order: Sequence[int]) -> bool:
    """Standard pure-shelling test for a facet order.

    For each facet F_j (j >= 2), the intersection with the union of the
    earlier facets must be a nonempty union of codimension-1 faces of F_j:
    some earlier facet must meet F_j in a face missing exactly one vertex,
    and every earlier intersection must fit inside such a face.

    >>> single = SimplicialComplex(2, (frozenset({(1, 1), (1, 2)}),))
    >>> is_shelling(single, [0])
    True
    """
    if sorted(order) != list(range(len(complex_.facets))):
        raise ValueError("order must be a permutation of the facet indices")
    facets = [complex_.facets[k] for k in order]
    for j in range(1, len(facets)):
        current = facets[j]
        ridges = [
            earlier & current
            for earlier in facets[:j]
            if len(earlier & current) == len(current) - 1
        ]
        if not ridges:
            return False
        for earlier in facets[:j]:
            shared = earlier & current
            if not any(shared <= ridge for ridge in ridges):
                return False
    return True


def dot_poset(poset: MitosisPoset) -> str:
    """Graphviz source for the poset, fibers clustered by permutation."""
    lines = [
        f"digraph mitosis_poset_{poset.n} {{",
        "  rankdir=TB;",
        '  node [shape=box, fontname="monospace"];',
    ]
    node_id: dict[PipeDream, str] = {}
    for w, dreams in poset.sorted_fibers():
        w_str = perm_to_str(w)
        lines.append(f'  subgraph "cluster_{w_str}" {{')
        lines.append(f'    label="{w_str}";')
        for k, dream in enumerate(dreams):
            name = f"{w_str}/{k}"
            node_id[dream] = name
            grid = dream.ascii().replace("\n", "\\n")
            lines.append(f'    "{name}" [label="{grid}"];')
        lines.append("  }")
    for parent, child, i in sorted(
        poset.edges, key=lambda e: (node_id[e[0]], node_id[e[1]], e[2])
    ):
        lines.append(f'  "{node_id[parent]}" -> "{node_id[child]}" [label="s{i}"];')
    lines.append("}")
    return "\n".join(lines)


def dot_tree(tree: PreimageTree) -> str:
    """Graphviz source for a preimage tree; dead leaves are marked."""
    lines = [
        "digraph preimage_tree {",
        "  rankdir=TB;",
        '  node [shape=box, fontname="monospace"];',
    ]
    for t, layer in enumerate(tree.layers):
        w_str = perm_to_str(tree.perms[t])
        with_children = (
            {p for p, _ in tree.links[t]} if t < len(tree.links) else set()
        )
        for k, dream in enumerate(layer):
            dead = t < len(tree.layers) - 1 and k not in with_children
            grid = dream.ascii().replace("\n", "\\n")
            style = ', style=filled, fillcolor="lightgray"' if dead else ""
            lines.append(f'  "L{t}N{k}" [label="{w_str} #{k}\\n{grid}"{style}];')
    for t, step in enumerate(tree.links):
        for p_idx, c_idx in step:
            lines.append(
                f'  "L{t}N{p_idx}" -> "L{t + 1}N{c_idx}" [label="s{tree.word[t]}"];'
            )
    lines.append("}")
    return "\n".join(lines)


def fibers_json(poset: MitosisPoset) -> dict:
    """JSON-ready listing of the fibers, long permutation first."""
    return {
        "n": poset.n,
        "fibers": [
            {
                "w": perm_to_str(w),
                "length": length(w),
                "dreams": [dream.to_json() for dream in dreams],
            }
            for w, dreams in poset.sorted_fibers()
        ],
    }
