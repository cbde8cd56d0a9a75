"""Cross-validation checks: every identity the package rests on, run at a
given symmetric-group size.

Each check pits independently implemented routes against each other (brute
force vs mitosis vs divided differences), so a bug in any one of them shows
up as a disagreement.  `run_checks` powers both the CLI's verify command
and the acceptance test suite; the experiments are conjectural statements,
reported but never failing a run.
"""

from __future__ import annotations

import csv
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Sequence

from . import introns, oracle, pipedream, poset, schubert
from .mitosis import mitosis, mitosis_along, rp_by_mitosis
from .permutations import (
    all_permutations,
    all_reduced_words,
    compose,
    has_right_descent,
    length,
    lex_first_reduced_word,
    long_permutation,
    multiply_right_s,
    perm_from_str,
    perm_to_str,
    right_descents,
)
from .pipedream import PipeDream, apply_chute, chutable_rectangles, j_columns, wiring
from .schubert import Polynomial, divided_difference, monomial_of


@dataclass
class CheckResult:
    name: str
    n: int
    passed: bool
    detail: str
    seconds: float = 0.0
    experimental: bool = False

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        if self.experimental:
            status = "SUPPORTED" if self.passed else "COUNTEREXAMPLE"
        return f"{status:>14}  {self.name} (n={self.n}, {self.seconds:.2f}s): {self.detail}"


def check_mitosis_theorem(n: int) -> CheckResult:
    """RP(w s_i) is the disjoint union of the offspring over RP(w)."""
    pairs = 0
    for w in all_permutations(n):
        parents = oracle.enumerate_rp(w)
        for i in right_descents(w):
            pairs += 1
            children: set[PipeDream] = set()
            total = 0
            for parent in parents:
                offspring = set(mitosis(parent, i))
                if children & offspring:
                    return CheckResult(
                        "mitosis-theorem", n, False,
                        f"offspring collide at w={perm_to_str(w)}, i={i}", 0
                    )
                children |= offspring
                total += len(offspring)
            expected = set(oracle.enumerate_rp(multiply_right_s(w, i)))
            if children != expected or total != len(expected):
                return CheckResult(
                    "mitosis-theorem", n, False,
                    f"union mismatch at w={perm_to_str(w)}, i={i}", 0
                )
    return CheckResult(
        "mitosis-theorem", n, True, f"{pairs} (w, descent) pairs, all disjoint unions exact"
    )


def check_generation_lex(n: int) -> CheckResult:
    """Mitosis along the lex-first word regenerates the brute-force RP(w)."""
    for w in all_permutations(n):
        if rp_by_mitosis(w) != frozenset(oracle.enumerate_rp(w)):
            return CheckResult(
                "generation-lex-first", n, False, f"mismatch at w={perm_to_str(w)}", 0
            )
    count = sum(1 for _ in all_permutations(n))
    return CheckResult(
        "generation-lex-first", n, True, f"all {count} permutations match the oracle"
    )


def check_generation_all_words(n: int) -> CheckResult:
    """Word independence: every reduced word for w0*w generates RP(w)."""
    w0 = long_permutation(n)
    words = 0
    for w in all_permutations(n):
        target = frozenset(oracle.enumerate_rp(w))
        for word in all_reduced_words(compose(w0, w)):
            words += 1
            end = mitosis_along(word, [pipedream.d0(n)])[-1]
            if end != target:
                return CheckResult(
                    "generation-word-independence", n, False,
                    f"word {word} fails for w={perm_to_str(w)}", 0
                )
    return CheckResult(
        "generation-word-independence", n, True, f"{words} reduced words, all agree"
    )


def check_schubert_routes(n: int) -> CheckResult:
    """Divided differences, the positive formula, and mitosis all agree."""
    for w in all_permutations(n):
        by_divdiff = schubert.schubert_divdiff(w)
        by_bjs = schubert.schubert_bjs(w, oracle.enumerate_rp(w))
        by_mitosis = schubert.schubert_mitosis(w)
        if not (by_divdiff == by_bjs == by_mitosis):
            return CheckResult(
                "schubert-three-routes", n, False, f"mismatch at w={perm_to_str(w)}", 0
            )
    count = sum(1 for _ in all_permutations(n))
    return CheckResult(
        "schubert-three-routes", n, True,
        f"{count} exact polynomial equalities across all three routes"
    )


def check_involution(n: int) -> CheckResult:
    """The intron-mutation involution behaves as advertised on every fiber."""
    dreams = 0
    for w in all_permutations(n):
        fiber = set(oracle.enumerate_rp(w))
        for dream in fiber:
            dreams += 1
            for i in range(1, n):
                image = introns.tau(dream, i)
                start = pipedream.start_row(dream, i)
                outside_ok = all(
                    (pos in image) == (pos in dream)
                    for pos in set(dream.crosses) | set(image.crosses)
                    if pos[0] not in (i, i + 1) or pos[1] < start
                )
                ok = (
                    image in fiber
                    and introns.tau(image, i) == dream
                    and pipedream.start_row(image, i) == start
                    and outside_ok
                    and introns.ell(image, i, i) == introns.ell(dream, i, i + 1)
                    and introns.ell(image, i, i + 1) == introns.ell(dream, i, i)
                )
                if not ok:
                    return CheckResult(
                        "intron-involution", n, False,
                        f"failure at w={perm_to_str(w)}, i={i}, D={dream.crosses}", 0
                    )
    return CheckResult(
        "intron-involution", n, True,
        f"{dreams} pipe dreams x {n - 1} rows: involutive, wiring kept, counts swap"
    )


def check_offspring_monomials(n: int) -> CheckResult:
    """Per parent: sum of offspring monomials = d_i(x_i^J) * x^(D minus the
    row-i crosses in the J-columns)."""
    checked = 0
    for w in all_permutations(n):
        for dream in oracle.enumerate_rp(w):
            for i in range(1, n):
                checked += 1
                cols = j_columns(dream, i)
                lhs = Polynomial.zero(n)
                for child in mitosis(dream, i):
                    lhs = lhs + monomial_of(child)
                stripped = dream.replace(remove=[(i, p) for p in cols])
                x_i = Polynomial.variable(n, i)
                rhs = divided_difference(x_i ** len(cols), i) * monomial_of(stripped)
                if lhs != rhs:
                    return CheckResult(
                        "offspring-monomial-identity", n, False,
                        f"failure at w={perm_to_str(w)}, i={i}, D={dream.crosses}", 0
                    )
    return CheckResult(
        "offspring-monomial-identity", n, True, f"{checked} parent/row identities exact"
    )


def check_poptotic(n: int) -> CheckResult:
    """Lex-first words are poptotic; specialization at 1 counts RP(w)."""
    w0 = long_permutation(n)
    for w in all_permutations(n):
        word = lex_first_reduced_word(compose(w0, w))
        if not poset.is_poptotic(word, n):
            return CheckResult(
                "poptotic-lex-first", n, False, f"apoptosis for w={perm_to_str(w)}", 0
            )
        size = len(oracle.enumerate_rp(w))
        counts = {
            schubert.schubert_divdiff(w).evaluate_ones(),
            schubert.schubert_bjs(w, oracle.enumerate_rp(w)).evaluate_ones(),
            schubert.schubert_mitosis(w).evaluate_ones(),
        }
        if counts != {size}:
            return CheckResult(
                "poptotic-lex-first", n, False,
                f"specialization != |RP(w)| at w={perm_to_str(w)}", 0
            )
    count = sum(1 for _ in all_permutations(n))
    return CheckResult(
        "poptotic-lex-first", n, True,
        f"{count} lex-first paths poptotic; specializations count the fibers"
    )


def check_chutes_and_removal(n: int) -> CheckResult:
    """Chute moves preserve RP(w); the solid-rows cross removal drops to RP(w s_i)."""
    moves = removals = 0
    for w in all_permutations(n):
        fiber = set(oracle.enumerate_rp(w))
        for dream in fiber:
            for rect in chutable_rectangles(dream):
                moves += 1
                if apply_chute(dream, rect) not in fiber:
                    return CheckResult(
                        "chute-closure", n, False,
                        f"chute {rect} leaves RP({perm_to_str(w)})", 0
                    )
            for i in range(1, n):
                for j in range(1, n + 1):
                    hypothesis = (
                        not dream.has(i + 1, j)
                        and all(dream.has(i, p) for p in range(1, j + 1))
                        and all(dream.has(i + 1, p) for p in range(1, j))
                    )
                    if not hypothesis:
                        continue
                    removals += 1
                    if not has_right_descent(w, i):
                        return CheckResult(
                            "chute-closure", n, False,
                            f"no descent at w={perm_to_str(w)}, i={i}", 0
                        )
                    smaller = dream.replace(remove=[(i, j)])
                    if smaller not in set(oracle.enumerate_rp(multiply_right_s(w, i))):
                        return CheckResult(
                            "chute-closure", n, False,
                            f"removal at ({i},{j}) of {dream.crosses} "
                            f"leaves RP({perm_to_str(multiply_right_s(w, i))})", 0
                        )
    return CheckResult(
        "chute-closure", n, True,
        f"{moves} chute moves closed; {removals} cross removals land in RP(w s_i)"
    )


def check_staircase_policy(n: int) -> CheckResult:
    """No reduced pipe dream escapes the staircase (full-grid search)."""
    capped = min(n, oracle.FULLGRID_BOUND_DEFAULT)
    for w in all_permutations(capped):
        if oracle.enumerate_rp_fullgrid(w) != oracle.enumerate_rp(w):
            return CheckResult(
                "staircase-policy", capped, False,
                f"full-grid dream escapes at w={perm_to_str(w)}", 0
            )
    note = f"full {capped}x{capped} grid sweep equals staircase search"
    if capped < n:
        note += f" (capped at n={capped})"
    return CheckResult("staircase-policy", capped, True, note)


FIG1_DREAM = PipeDream(
    8,
    [(1, 2), (1, 4), (1, 5), (2, 2), (2, 6), (3, 1), (3, 2), (3, 3), (3, 4),
     (4, 3), (5, 1), (6, 1), (6, 2), (7, 1)],
)

EX33_OFFSPRING_ROWS = (  # rows 3 and 4 of the three offspring, in order
    (((2, 3, 4), (3,))),
    (((3, 4), (1, 3))),
    (((3,), (1, 2, 3))),
)

RC3_FIBERS = {
    "321": [((1, 1), (1, 2), (2, 1))],
    "312": [((1, 1), (1, 2))],
    "231": [((1, 1), (2, 1))],
    "132": [((1, 2),), ((2, 1),)],
    "213": [((1, 1),)],
    "123": [()],
}

RC3_EDGES = {
    (((1, 1), (1, 2), (2, 1)), ((1, 1), (1, 2)), 2),
    (((1, 1), (1, 2), (2, 1)), ((1, 1), (2, 1)), 1),
    (((1, 1), (1, 2)), ((1, 2),), 1),
    (((1, 1), (1, 2)), ((2, 1),), 1),
    (((1, 1), (2, 1)), ((1, 1),), 2),
    (((2, 1),), (), 2),
    (((1, 1),), (), 1),
}

LEX_WORD_V = (2, 1, 3, 5, 4, 3, 2, 1, 7, 6, 5, 4, 3, 2, 1)
LEX_WORD_VS4 = (2, 1, 3, 2, 5, 4, 3, 2, 1, 7, 6, 5, 4, 3, 2, 1)


def check_paper_examples(n: int = 8) -> CheckResult:
    """The worked examples, reproduced bit for bit (always at their own sizes)."""
    n = 8  # the examples live in S_8 and S_3 regardless of the requested size
    problems = []

    if wiring(FIG1_DREAM).perm != perm_from_str("13865742"):
        problems.append("figure-1 wiring")
    if pipedream.start_row(FIG1_DREAM, 3) != 5 or j_columns(FIG1_DREAM, 3) != (1, 2, 4):
        problems.append("start_3 / J_3")
    offspring = list(mitosis(FIG1_DREAM, 3))
    if [(d.row(3), d.row(4)) for d in offspring] != list(EX33_OFFSPRING_ROWS):
        problems.append("mitosis_3 offspring")

    rc3 = poset.build_poset(3)
    fibers = {
        perm_to_str(w): [d.crosses for d in dreams]
        for w, dreams in rc3.fibers.items()
    }
    if fibers != RC3_FIBERS or len(rc3.nodes) != 7:
        problems.append("seven-node poset fibers")
    edges = {(p.crosses, c.crosses, i) for p, c, i in rc3.edges}
    if edges != RC3_EDGES:
        problems.append("poset edge labels")

    v = perm_from_str("13685742")
    w0 = long_permutation(8)
    if lex_first_reduced_word(compose(w0, v)) != LEX_WORD_V:
        problems.append("lex-first word for w0*v")
    if lex_first_reduced_word(compose(w0, multiply_right_s(v, 4))) != LEX_WORD_VS4:
        problems.append("lex-first word for w0*v*s4")

    for dream in offspring:  # all three are reduced pipe dreams for v
        if wiring(dream).perm != v or not pipedream.is_reduced(dream):
            problems.append("offspring wiring")
            break
    kids = [len(mitosis(dream, 4)) for dream in offspring]
    if kids != [0, 0, 2]:
        problems.append(f"apoptosis pattern (offspring counts {kids})")

    if problems:
        return CheckResult("paper-examples", n, False, "; ".join(problems), 0)
    return CheckResult(
        "paper-examples", n, True,
        "figure-1 wiring, offspring grids, seven-node poset, lex words, apoptosis"
    )


def experiment_shelling(n: int) -> CheckResult:
    """Conjecture: poptotic breadth-first orders shell the subword complex."""
    w0 = long_permutation(n)
    orders = 0
    counterexamples = []
    for w in all_permutations(n):
        complex_ = poset.subword_complex(w)
        for word in all_reduced_words(compose(w0, w)):
            if not poset.is_poptotic(word, n):
                continue
            orders += 1
            order = [complex_.facet_index(d) for d in poset.bfs_order(word, n)]
            if not poset.is_shelling(complex_, order):
                counterexamples.append((perm_to_str(w), word))
    if counterexamples:
        return CheckResult(
            "conjecture-poptotic-shellings", n, False,
            f"counterexamples: {counterexamples[:3]}", 0, experimental=True
        )
    return CheckResult(
        "conjecture-poptotic-shellings", n, True,
        f"all {orders} poptotic breadth-first orders are shellings",
        experimental=True,
    )


def experiment_bfs_linear_extension(n: int) -> CheckResult:
    """Reported claim: poptotic breadth-first orders extend the chute order."""
    w0 = long_permutation(n)
    orders = violations = 0
    for w in all_permutations(n):
        for word in all_reduced_words(compose(w0, w)):
            if not poset.is_poptotic(word, n):
                continue
            orders += 1
            listing = poset.bfs_order(word, n)
            position = {dream: k for k, dream in enumerate(listing)}
            for dream in listing:
                for rect in chutable_rectangles(dream):
                    if position[dream] > position[apply_chute(dream, rect)]:
                        violations += 1
    return CheckResult(
        "bfs-extends-chute-order", n, violations == 0,
        f"{orders} poptotic orders, {violations} chute edges out of order",
        experimental=True,
    )


HARD_CHECKS: tuple[Callable[[int], CheckResult], ...] = (
    check_paper_examples,
    check_staircase_policy,
    check_mitosis_theorem,
    check_generation_lex,
    check_generation_all_words,
    check_schubert_routes,
    check_involution,
    check_offspring_monomials,
    check_poptotic,
    check_chutes_and_removal,
)

EXPERIMENTS: tuple[Callable[[int], CheckResult], ...] = (
    experiment_shelling,
    experiment_bfs_linear_extension,
)

# word-independence sweeps and full-grid searches get unreasonable above these
_CHECK_CAPS = {
    "check_generation_all_words": 4,
    "experiment_shelling": 4,
    "experiment_bfs_linear_extension": 4,
}


def _run_one(check: Callable[[int], CheckResult], n: int) -> CheckResult:
    capped = min(n, _CHECK_CAPS.get(check.__name__, n))
    started = time.perf_counter()
    result = check(capped)
    result.seconds = time.perf_counter() - started
    return result


def run_checks(n: int, experiments: bool = False, jobs: int = 1) -> list[CheckResult]:
    """Run every hard check (and optionally the experiments) at size n."""
    checks = list(HARD_CHECKS) + (list(EXPERIMENTS) if experiments else [])
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_run_one, check, n) for check in checks]
            return [f.result() for f in futures]
    return [_run_one(check, n) for check in checks]


def write_report(results: Sequence[CheckResult], directory: str | Path, n: int) -> list[Path]:
    """Write the delimited results table plus the report figures."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []

    table = directory / "verify_results.csv"
    with table.open("w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["check", "n", "status", "seconds", "detail"])
        for r in results:
            status = ("SUPPORTED" if r.passed else "COUNTEREXAMPLE") if r.experimental \
                else ("PASS" if r.passed else "FAIL")
            writer.writerow([r.name, r.n, status, f"{r.seconds:.3f}", r.detail])
    written.append(table)

    from . import figures

    fiber_fig = directory / f"fiber_sizes_n{n}.png"
    figures.save_fiber_sizes(n, fiber_fig)
    written.append(fiber_fig)
    if n <= 4:
        poset_fig = directory / f"mitosis_poset_n{n}.png"
        figures.save_poset(poset.build_poset(n), poset_fig)
        written.append(poset_fig)
    return written
