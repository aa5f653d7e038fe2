"""Command-line interface: single queries, corpus runs, data linting.

Exit codes are fixed and published:

    0  success
    1  corpus run had failing or erroring cases
    2  usage error, or a lexicon / rule base / corpus file failed to load
    3  unknown verb or preposition lemma
    4  verb is not a change-of-location verb
    5  infelicitous combination (no rule yields a well-formed trace)
    6  ambiguous rule base (tie on strength and priority)
"""

from __future__ import annotations

import argparse
import sys

from .compose import MotionComplex, compose, explain
from .errors import (
    AmbiguousRuleBaseError,
    FormatError,
    InfelicitousError,
    MotionSemError,
    NotACoLVerbError,
    UnknownLanguageError,
    UnknownLemmaError,
)
from .lexicon import LANGUAGES, Lexicon, default_lexicon, load_lexicon_path
from .rules import RuleBase, default_rulebase, lint_rulebase, load_rulebase_path
from .corpus import parse_corpus_path, run_corpus
from .trace import render_records

EXIT_OK = 0
EXIT_CORPUS_FAILURES = 1
EXIT_LOAD_ERROR = 2
EXIT_UNKNOWN_LEMMA = 3
EXIT_NOT_COL = 4
EXIT_INFELICITOUS = 5
EXIT_AMBIGUOUS = 6


def _error_exit_code(exc: MotionSemError) -> int:
    if isinstance(exc, UnknownLemmaError) or isinstance(exc, UnknownLanguageError):
        return EXIT_UNKNOWN_LEMMA
    if isinstance(exc, NotACoLVerbError):
        return EXIT_NOT_COL
    if isinstance(exc, InfelicitousError):
        return EXIT_INFELICITOUS
    if isinstance(exc, AmbiguousRuleBaseError):
        return EXIT_AMBIGUOUS
    return EXIT_LOAD_ERROR


def _load_lexicons(paths: list[str] | None) -> dict[str, Lexicon]:
    if not paths:
        return {lang: default_lexicon(lang) for lang in LANGUAGES}
    lexicons: dict[str, Lexicon] = {}
    for path in paths:
        lexicon = load_lexicon_path(path)
        if lexicon.language in lexicons:
            raise FormatError(f"two lexicons given for {lexicon.language!r}")
        lexicons[lexicon.language] = lexicon
    return lexicons


def _load_rules(path: str | None) -> RuleBase:
    if path is None:
        return default_rulebase()
    return load_rulebase_path(path)


def _add_data_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--lexicon",
        action="append",
        metavar="PATH",
        help="lexicon file; repeatable, one per language (default: bundled seeds)",
    )
    parser.add_argument(
        "--rules", metavar="PATH", help="rule base file (default: bundled rules)"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="motionsem",
        description="Spatiotemporal semantics of motion verb + preposition complexes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    query = sub.add_parser("query", help="compose one motion complex")
    query.add_argument("verb")
    query.add_argument("prep")
    query.add_argument("ground")
    query.add_argument("--lang", choices=LANGUAGES, default="fr")
    query.add_argument("--mobile", default="mobile")
    query.add_argument(
        "--format",
        choices=("text", "records"),
        default="text",
        help="full explanation or just the machine-diffable trace records",
    )
    _add_data_flags(query)

    corpus = sub.add_parser("corpus", help="run a corpus of golden cases")
    corpus.add_argument("corpus_path")
    _add_data_flags(corpus)

    lint = sub.add_parser("lint", help="validate lexicons and rule base coverage")
    _add_data_flags(lint)

    return parser


def cmd_query(args: argparse.Namespace) -> int:
    try:
        lexicons = _load_lexicons(args.lexicon)
        rules = _load_rules(args.rules)
    except (MotionSemError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LOAD_ERROR

    try:
        lexicon = lexicons.get(args.lang)
        if lexicon is None:
            raise UnknownLanguageError(f"no lexicon loaded for {args.lang!r}")
        complex_ = MotionComplex(
            verb_lemma=args.verb,
            prep_lemma=args.prep,
            ground=args.ground,
            mobile=args.mobile,
            language=args.lang,
        )
        derivation = compose(complex_, lexicon, rules)
    except MotionSemError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _error_exit_code(exc)

    if args.format == "records":
        print(render_records(derivation.trace))
    else:
        print(explain(derivation))
    return EXIT_OK


def cmd_corpus(args: argparse.Namespace) -> int:
    try:
        lexicons = _load_lexicons(args.lexicon)
        rules = _load_rules(args.rules)
        cases = parse_corpus_path(args.corpus_path)
    except (MotionSemError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LOAD_ERROR

    report = run_corpus(cases, lexicons, rules)
    print(report.render())
    return EXIT_OK if report.ok else EXIT_CORPUS_FAILURES


def cmd_lint(args: argparse.Namespace) -> int:
    status = EXIT_OK
    try:
        lexicons = _load_lexicons(args.lexicon)
        for lang in sorted(lexicons):
            lexicon = lexicons[lang]
            print(
                f"lexicon {lang}: {len(lexicon.verbs)} verbs, "
                f"{len(lexicon.preps)} prepositions"
            )
    except (MotionSemError, OSError) as exc:
        print(f"lexicon error: {exc}", file=sys.stderr)
        return EXIT_LOAD_ERROR

    try:
        rules = _load_rules(args.rules)
    except (MotionSemError, OSError) as exc:
        print(f"rule base error: {exc}", file=sys.stderr)
        return EXIT_LOAD_ERROR

    report = lint_rulebase(rules)
    print(report.render())
    if not report.ok:
        status = EXIT_LOAD_ERROR
    return status


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "query":
        return cmd_query(args)
    if args.command == "corpus":
        return cmd_corpus(args)
    if args.command == "lint":
        return cmd_lint(args)
    parser.error(f"unknown command {args.command!r}")
    return EXIT_LOAD_ERROR


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
