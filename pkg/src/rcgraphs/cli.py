"""Command-line interface.

Subcommands: schubert (polynomials by any of the three routes), pipedreams
(list RP(w)), mitosis (offspring of one pipe dream), poset (DOT/JSON/figure
exports), verify (the cross-validation suite).  Exit codes: 0 success, 1 a
verification-style failure, 2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import oracle, pipedream, poset, schubert, verify
from .mitosis import mitosis, rp_by_mitosis
from .permutations import (
    BoundExceededError,
    Perm,
    Word,
    perm_from_str,
    perm_to_str,
)
from .pipedream import PipeDream, top_pipe_dream

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_USAGE = 2


@dataclass
class Config:
    """Knobs shared across subcommands."""

    oracle_bound: int = oracle.ORACLE_BOUND_DEFAULT
    poset_bound: int = 5
    fmt: str = "ascii"
    word: Word | None = None
    jobs: int = 1


def parse_word(text: str) -> Word:
    """A word like "2,1,2" (or "212" for single digits)."""
    text = text.strip()
    try:
        if "," in text:
            return tuple(int(part) for part in text.split(","))
        return tuple(int(ch) for ch in text)
    except ValueError:
        raise ValueError(f"cannot parse word: {text!r}") from None


def parse_positions(text: str) -> list[tuple[int, int]]:
    """Cross positions like "1,2;1,4;3,1"."""
    out = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        parts = chunk.split(",")
        if len(parts) != 2:
            raise ValueError(f"bad position {chunk!r}, expected row,col")
        out.append((int(parts[0]), int(parts[1])))
    return out


def _load_dream(source: str, config: Config) -> PipeDream:
    """A pipe dream from a permutation string (its top pipe dream), a JSON
    literal, or @file.json."""
    source = source.strip()
    if source.startswith("@"):
        source = Path(source[1:]).read_text()
    if source.lstrip().startswith("{"):
        return PipeDream.from_json(json.loads(source))
    w = perm_from_str(source)
    return top_pipe_dream(w, bound=config.oracle_bound)


def _print_dreams(dreams, fmt: str, w: Perm | None = None) -> None:
    dreams = list(dreams)
    if fmt == "json":
        payload = {
            "count": len(dreams),
            "dreams": [d.to_json() for d in dreams],
        }
        if w is not None:
            payload["w"] = perm_to_str(w)
        print(json.dumps(payload, indent=2))
        return
    for k, dream in enumerate(dreams):
        print(f"D {k}:")
        print(dream.ascii())
        print()


def cmd_schubert(args, config: Config) -> int:
    w = perm_from_str(args.perm)
    routes = {
        "divdiff": lambda: schubert.schubert_divdiff(w, word=config.word),
        "bjs": lambda: schubert.schubert_bjs(
            w, oracle.enumerate_rp(w, bound=config.oracle_bound)
        ),
        "mitosis": lambda: schubert.schubert_mitosis(w, word=config.word),
    }
    if args.all_methods:
        values = {name: fn() for name, fn in routes.items()}
        for name in ("divdiff", "bjs", "mitosis"):
            print(f"{name}: {values[name]}")
        agree = values["divdiff"] == values["bjs"] == values["mitosis"]
        print(f"all methods agree: {'true' if agree else 'false'}")
        return EXIT_OK if agree else EXIT_VERIFICATION
    value = routes[args.method]()
    if config.fmt == "json":
        print(json.dumps({"w": perm_to_str(w), **value.to_json()}, indent=2))
    else:
        print(value)
    return EXIT_OK


def cmd_pipedreams(args, config: Config) -> int:
    w = perm_from_str(args.perm)
    if args.oracle:
        dreams = list(oracle.enumerate_rp(w, bound=config.oracle_bound))
    else:
        dreams = sorted(rp_by_mitosis(w, word=config.word))
    if args.contains is not None:
        probe = PipeDream(len(w), parse_positions(args.contains))
        member = probe in set(dreams)
        print("true" if member else "false")
        return EXIT_OK if member else EXIT_VERIFICATION
    if args.figure:
        from . import figures

        figures.save_pipe_dreams(
            dreams, args.figure, title=f"RP({perm_to_str(w)}), {len(dreams)} pipe dreams"
        )
        print(f"wrote {args.figure}")
        return EXIT_OK
    _print_dreams(dreams, config.fmt, w)
    return EXIT_OK


def cmd_mitosis(args, config: Config) -> int:
    dream = _load_dream(args.source, config)
    offspring = mitosis(dream, args.row)
    if not offspring.children:
        print("no offspring (apoptosis)")
        return EXIT_OK
    if args.figure:
        from . import figures

        figures.save_pipe_dreams(
            list(offspring), args.figure,
            title=f"mitosis_{args.row} offspring",
        )
        print(f"wrote {args.figure}")
        return EXIT_OK
    _print_dreams(offspring, config.fmt)
    return EXIT_OK


def cmd_poset(args, config: Config) -> int:
    if args.tree is not None:
        word = parse_word(args.tree)
        tree = poset.preimage_tree(word, args.n)
        print(poset.dot_tree(tree))
        return EXIT_OK
    built = poset.build_poset(args.n, bound=config.poset_bound)
    if args.json:
        print(json.dumps(poset.fibers_json(built), indent=2))
    elif args.figure:
        from . import figures

        figures.save_poset(built, args.figure)
        print(f"wrote {args.figure}")
    else:
        print(poset.dot_poset(built))
    return EXIT_OK


def cmd_verify(args, config: Config) -> int:
    results = verify.run_checks(args.n, experiments=args.experiments, jobs=config.jobs)
    hard_failures = 0
    for result in results:
        print(result.line())
        if not result.passed and not result.experimental:
            hard_failures += 1
    if args.report:
        written = verify.write_report(results, args.report, args.n)
        for path in written:
            print(f"wrote {path}")
    print(f"{len(results)} checks, {hard_failures} hard failures")
    return EXIT_OK if hard_failures == 0 else EXIT_VERIFICATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rcgraphs",
        description="Reduced pipe dreams, Schubert polynomials, and the mitosis recursion.",
    )
    parser.add_argument(
        "--oracle-bound", type=int, default=oracle.ORACLE_BOUND_DEFAULT,
        help="largest n the brute-force enumeration may attempt (default 6)",
    )
    parser.add_argument(
        "--poset-bound", type=int, default=5,
        help="largest n for whole-poset construction (default 5)",
    )
    parser.add_argument(
        "--jobs", type=int, default=1,
        help="worker processes for the verify command (default 1)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("schubert", help="print a Schubert polynomial")
    p.add_argument("perm", help='permutation, e.g. "2143" or "10,2,...,1"')
    p.add_argument("--method", choices=("divdiff", "bjs", "mitosis"), default="mitosis")
    p.add_argument("--all-methods", action="store_true",
                   help="compute every route and report whether they agree")
    p.add_argument("--word", help="override the reduced word for w0*w (e.g. 2,1,2)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(fn=cmd_schubert)

    p = sub.add_parser("pipedreams", help="list the reduced pipe dreams of w")
    p.add_argument("perm")
    p.add_argument("--oracle", action="store_true",
                   help="enumerate by brute force instead of mitosis")
    p.add_argument("--word", help="override the reduced word for w0*w")
    p.add_argument("--contains", metavar="POSITIONS",
                   help='membership test for a cross set like "1,2;1,4;3,1"')
    p.add_argument("--figure", metavar="PATH", help="render the dreams to an image file")
    p.add_argument("--format", choices=("ascii", "json"), default="ascii")
    p.set_defaults(fn=cmd_pipedreams)

    p = sub.add_parser("mitosis", help="offspring of one pipe dream")
    p.add_argument("source", help="permutation (top pipe dream), JSON literal, or @file")
    p.add_argument("-i", "--row", type=int, required=True, help="mitosis row index")
    p.add_argument("--figure", metavar="PATH")
    p.add_argument("--format", choices=("ascii", "json"), default="ascii")
    p.set_defaults(fn=cmd_mitosis)

    p = sub.add_parser("poset", help="the mitosis poset or a preimage tree")
    p.add_argument("n", type=int)
    p.add_argument("--dot", action="store_true", help="Graphviz output (the default)")
    p.add_argument("--tree", metavar="WORD", help="preimage tree of a reduced word")
    p.add_argument("--json", action="store_true", help="fibers as JSON")
    p.add_argument("--figure", metavar="PATH", help="render the poset to an image file")
    p.set_defaults(fn=cmd_poset)

    p = sub.add_parser("verify", help="run the cross-validation suite at size n")
    p.add_argument("n", type=int)
    p.add_argument("--experiments", action="store_true",
                   help="also run the conjecture experiments (never affect the exit code)")
    p.add_argument("--report", metavar="DIR",
                   help="write verify_results.csv and report figures into DIR")
    p.set_defaults(fn=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    config = Config(
        oracle_bound=args.oracle_bound,
        poset_bound=args.poset_bound,
        fmt=getattr(args, "format", "ascii"),
        word=parse_word(args.word) if getattr(args, "word", None) else None,
        jobs=args.jobs,
    )
    try:
        return args.fn(args, config)
    except (ValueError, BoundExceededError, FileNotFoundError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
