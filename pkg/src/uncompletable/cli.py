"""Command-line interface.

Exit codes: 0 ok, 1 usage error, 2 resource limit exceeded, 3 invalid input
(unparseable word list, violated precondition, inapplicable operation).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import analysis, oracle, search, words
from .automaton import build_star_trie
from .errors import InvalidInputError, NotApplicableError, ResourceLimitError
from .search import Limits

EXIT_OK, EXIT_USAGE, EXIT_RESOURCE, EXIT_INVALID = 0, 1, 2, 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")


def _emit(payload: dict, as_json: bool, text: str) -> None:
    if as_json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _limits(args) -> Limits:
    return Limits(max_subsets=args.max_subsets, timeout_s=args.timeout_s)


def _search_payload(S: words.WordSet, result: search.SearchResult) -> dict:
    return {
        "complete": result.complete,
        "uwl": result.uwl,
        "witness": result.witness_str,
        "automaton_nodes": result.stats.automaton_nodes,
        "subset_states": result.stats.subset_states,
        "peak_frontier": result.stats.peak_frontier,
        "elapsed_ms": round(result.stats.elapsed_s * 1000, 3),
        "words": len(S),
        "k": S.k,
        "alphabet": S.alphabet.symbols,
    }


def cmd_check(args) -> int:
    S = words.read_word_list(args.file)
    result = search.shortest_uncompletable(S, _limits(args))
    verdict = "complete" if result.complete else "non-complete"
    _emit(_search_payload(S, result), args.json, verdict)
    return EXIT_OK


def cmd_muw(args) -> int:
    S = words.read_word_list(args.file)
    result = search.shortest_uncompletable(S, _limits(args))
    if result.complete:
        text = "complete\nuwl 0"
    else:
        text = f"uwl {result.uwl}\nwitness {result.witness_str}"
    _emit(_search_payload(S, result), args.json, text)
    return EXIT_OK


def cmd_family(args) -> int:
    name = args.name
    if name == "full_minus":
        if args.k is None or args.u is None:
            raise InvalidInputError("full_minus needs --k and --u")
        S = words.family_full_minus(args.k, args.u)
    elif name == "s4":
        S = words.family_s4()
    elif name == "s5":
        S = words.family_s5()
    else:
        if args.k is None:
            raise InvalidInputError(f"{name} needs --k")
        S = words.family_sk(args.k) if name == "sk" else words.family_sk_prime(args.k)
    text = words.format_word_list(S)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    S = words.read_word_list(args.file)
    report = analysis.verify_witness(S, args.witness, args.minimal, _limits(args))
    lines = [f"uncompletable {'yes' if report.uncompletable else 'no'}"]
    if args.minimal:
        lines.append(f"minimal {'yes' if report.minimal else 'no'} (uwl {report.uwl})")
    _emit(report.to_dict(), args.json, "\n".join(lines))
    return EXIT_OK


def cmd_reproduce(args) -> int:
    families = args.family or list(analysis.FAMILIES)
    rows = analysis.reproduce(range(args.min_k, args.max_k + 1), families, _limits(args))
    lines = []
    for r in rows:
        if r.error:
            lines.append(f"k={r.k:<3} {r.family:<11} formula {r.formula:<5} ERROR {r.error}")
            continue
        flag = " >2k^2" if r.conjecture_violation else ""
        lines.append(
            f"k={r.k:<3} {r.family:<11} uwl {r.uwl:<5} formula {r.formula:<5} "
            f"{'match' if r.match else 'MISMATCH'}{flag}"
        )
    _emit({"rows": [r.to_dict() for r in rows]}, args.json, "\n".join(lines))
    return EXIT_OK


def cmd_uwlmax(args) -> int:
    res = oracle.uwl_max_exhaustive(args.k, args.sigma, _limits(args), samples=args.samples)
    kind = "UWL" if res.exact else "lower bound on UWL"
    lines = [f"{kind}({args.k},{args.sigma}) = {res.value} over {res.evaluated} sets"]
    lines += ["  {" + ", ".join(sorted(S.strings())) + "}" for S in res.argmax]
    _emit(res.to_dict(), args.json, "\n".join(lines))
    return EXIT_OK


def cmd_decompose(args) -> int:
    alphabet = words.Alphabet(args.alphabet) if args.alphabet else words.Alphabet.from_words(
        [args.word, args.u]
    )
    d = analysis.decompose(alphabet.parse(args.word), alphabet.parse(args.u))
    r = alphabet.render
    payload = {
        "u": r(d.u),
        "prefix": r(d.prefix),
        "gaps": [r(v) for v in d.gaps],
        "suffix": r(d.suffix),
        "gap_lengths": d.gap_lengths(),
    }
    text = f"prefix '{payload['prefix']}' gaps {payload['gaps']} suffix '{payload['suffix']}'"
    _emit(payload, args.json, text)
    return EXIT_OK


def cmd_borders(args) -> int:
    b = words.borders(args.word)
    _emit({"word": args.word, "borders": b, "unbordered": not b}, args.json, str(b))
    return EXIT_OK


def cmd_dot(args) -> int:
    sys.stdout.write(build_star_trie(words.read_word_list(args.file)).to_dot())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="uncompletable", description=__doc__.splitlines()[0])
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--max-subsets", type=int, default=search.DEFAULT_LIMITS.max_subsets)
    common.add_argument("--timeout-s", type=float, default=search.DEFAULT_LIMITS.timeout_s)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", parents=[common], help="decide completeness")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("muw", parents=[common], help="minimal uncompletable word")
    p.add_argument("file")
    p.set_defaults(func=cmd_muw)

    p = sub.add_parser("family", help="write one of the built-in set families")
    p.add_argument("--name", required=True, choices=["full_minus", "s4", "sk", "sk_prime", "s5"])
    p.add_argument("--k", type=int)
    p.add_argument("--u")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("verify", parents=[common], help="check a candidate witness")
    p.add_argument("file")
    p.add_argument("--witness", required=True)
    p.add_argument("--minimal", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reproduce", parents=[common], help="run the families over a k range")
    p.add_argument("--family", action="append", choices=list(analysis.FAMILIES))
    p.add_argument("--min-k", type=int, required=True)
    p.add_argument("--max-k", type=int, required=True)
    p.set_defaults(func=cmd_reproduce)

    p = sub.add_parser("uwlmax", parents=[common], help="exhaustive UWL(k, sigma)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--sigma", type=int, default=2)
    p.add_argument("--samples", type=int, help="random subsets instead of exhaustion")
    p.set_defaults(func=cmd_uwlmax)

    p = sub.add_parser("decompose", parents=[common], help="factor a word around an anchor")
    p.add_argument("--word", required=True)
    p.add_argument("--u", required=True)
    p.add_argument("--alphabet")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("borders", parents=[common], help="border lengths of a word")
    p.add_argument("word")
    p.set_defaults(func=cmd_borders)

    p = sub.add_parser("dot", help="Graphviz dump of the trie automaton")
    p.add_argument("file")
    p.set_defaults(func=cmd_dot)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (InvalidInputError, NotApplicableError, OSError, UnicodeDecodeError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
