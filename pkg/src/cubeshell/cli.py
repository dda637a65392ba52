"""Command-line front end.

Exit codes: 0 success, 1 verification failed or not a shelling, 2 usage or
parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from itertools import islice
from typing import Iterable, Sequence, TextIO

from . import __version__
from .connectivity import count_connected, count_standard, letters_connected
from .core import (
    ArcDiagram,
    ArcWord,
    DoubleOccurrenceWord,
    InvalidObjectError,
    SignedPermutation,
    StandardPermutation,
    arcs_to_word,
    decode_letters,
    dow_to_permutation,
    permutation_to_dow,
    permutation_to_word,
    word_to_arcs,
    word_to_permutation,
)
from .graycode import _adjacent, connected_code, full_code, rank
from .render import render_ascii, render_svg
from .shelling import shelling_report
from .symmetry import canonicalize

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

MAX_COUNT_N = 64


class UsageError(Exception):
    pass


def _positive_n(limit: int | None = None):
    def parse(text: str) -> int:
        try:
            n = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
        if n < 1 or (limit is not None and n > limit):
            bound = f"1..{limit}" if limit else ">= 1"
            raise argparse.ArgumentTypeError(f"n must be in {bound}, got {n}")
        return n

    return parse


def _non_negative(text: str) -> int:
    try:
        k = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if k < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {k}")
    return k


def _value(args) -> str:
    return " ".join(args.value)


# -- gen ---------------------------------------------------------------------


def _record(w: ArcWord) -> dict:
    p = word_to_permutation(w)
    return {
        "word": list(w.letters),
        "perm": list(p.entries),
        "dow": list(permutation_to_dow(p).letters),
        "connected": letters_connected(w.letters),
        "rank": rank(w),
    }


def _format_item(w: ArcWord, fmt: str) -> str:
    if fmt == "words":
        return str(w)
    if fmt == "perms":
        return " ".join(map(str, decode_letters(w.letters)))
    if fmt == "dow":
        return str(permutation_to_dow(word_to_permutation(w)))
    return json.dumps(_record(w))


def cmd_gen(args, out: TextIO) -> int:
    words = connected_code(args.n) if args.connected else full_code(args.n)
    if args.limit is not None:
        words = islice(words, args.limit)
    for w in words:
        out.write(_format_item(w, args.format) + "\n")
    return EXIT_OK


# -- verify ------------------------------------------------------------------


def _read_lines(stream: Iterable[str]) -> list[tuple[int, str]]:
    lines = []
    for lineno, raw in enumerate(stream, 1):
        text = raw.strip()
        if text and not text.startswith("#"):
            lines.append((lineno, text))
    return lines


def _parse_words(lines, n: int) -> list[tuple[int, tuple[int, ...]]]:
    parsed = []
    for lineno, text in lines:
        try:
            w = ArcWord.parse(text)
        except InvalidObjectError as exc:
            raise UsageError(f"line {lineno}: {exc}") from None
        if w.n != n:
            raise UsageError(f"line {lineno}: word has {w.n} letters, expected {n}")
        parsed.append((lineno, w.letters))
    return parsed


def _check_chunk(n: int, full: bool, start_index: int, chunk) -> tuple[int, str] | None:
    """First failure inside ``chunk`` (adjacency within it, parity); None if clean.

    ``start_index`` is the 1-based index of the chunk's first word.
    """
    prev = None
    for offset, (lineno, letters) in enumerate(chunk):
        m = start_index + offset
        perm = decode_letters(letters)
        if prev is not None and not _adjacent(prev, perm):
            return lineno, "not an adjacent transposition of the previous line"
        if full and (n - 1 + sum(letters)) % 2 != m % 2:
            return lineno, f"parity law fails at index {m}"
        prev = perm
    return None


def cmd_verify(args, out: TextIO) -> int:
    if args.input is None or args.input == "-":
        lines = _read_lines(sys.stdin)
    else:
        try:
            with open(args.input, encoding="utf-8") as fh:
                lines = _read_lines(fh)
        except OSError as exc:
            raise UsageError(f"cannot read {args.input}: {exc.strerror}") from None
    n = args.n
    full = not args.connected
    words = _parse_words(lines, n)

    failures = []
    jobs = max(1, args.jobs)
    if jobs == 1 or len(words) < 2 * jobs:
        bad = _check_chunk(n, full, 1, words)
        if bad:
            failures.append(bad)
    else:
        size = -(-len(words) // jobs)
        starts = list(range(0, len(words), size))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = pool.map(
                _check_chunk,
                [n] * len(starts),
                [full] * len(starts),
                [s + 1 for s in starts],
                [words[s:s + size] for s in starts],
            )
            failures.extend(r for r in results if r)
        # seams between shards
        for s in starts[1:]:
            if not _adjacent(decode_letters(words[s - 1][1]), decode_letters(words[s][1])):
                failures.append(
                    (words[s][0], "not an adjacent transposition of the previous line")
                )

    total = count_standard(n)
    seen = bytearray(total + 1)
    for lineno, letters in words:
        r = rank(ArcWord._trusted(letters))
        if seen[r]:
            failures.append((lineno, "duplicate word"))
            break
        seen[r] = 1
        if not full and not letters_connected(letters):
            failures.append((lineno, "word is not arc-connected"))
            break

    if failures:
        lineno, reason = min(failures)
        out.write(f"FAIL line {lineno}: {reason}\n")
        return EXIT_FAIL
    expected = total if full else count_connected(n)
    if len(words) != expected:
        out.write(f"FAIL incomplete: {len(words)} of {expected} words\n")
        return EXIT_FAIL
    kind = "full" if full else "connected"
    out.write(f"OK {kind} code n={n}: {len(words)} words\n")
    return EXIT_OK


# -- count -------------------------------------------------------------------


def cmd_count(args, out: TextIO) -> int:
    fn = count_connected if args.connected else count_standard
    out.write(f"{fn(args.n)}\n")
    return EXIT_OK


# -- convert -----------------------------------------------------------------

REPRESENTATIONS = ("word", "perm", "dow", "arcs")


def _to_word(kind: str, text: str) -> ArcWord:
    if kind == "word":
        return ArcWord.parse(text)
    if kind == "perm":
        return permutation_to_word(StandardPermutation.parse(text))
    if kind == "dow":
        return permutation_to_word(dow_to_permutation(DoubleOccurrenceWord.parse(text)))
    return arcs_to_word(ArcDiagram.parse(text))


def _from_word(kind: str, w: ArcWord) -> str:
    if kind == "word":
        return str(w)
    if kind == "perm":
        return str(word_to_permutation(w))
    if kind == "dow":
        return str(permutation_to_dow(word_to_permutation(w)))
    return str(word_to_arcs(w))


def cmd_convert(args, out: TextIO) -> int:
    w = _to_word(args.source, _value(args))
    out.write(_from_word(args.target, w) + "\n")
    return EXIT_OK


# -- canon / shelling --------------------------------------------------------


def cmd_canon(args, out: TextIO) -> int:
    standard, g = canonicalize(SignedPermutation.parse(_value(args)))
    out.write(f"{standard}\n")
    if args.witness:
        out.write(f"{g}\n")
    return EXIT_OK


def cmd_shelling(args, out: TextIO) -> int:
    report = shelling_report(SignedPermutation.parse(_value(args)))
    if report.valid:
        out.write("SHELLING\n")
    else:
        out.write(f"NOT-A-SHELLING prefix={report.failure_prefix}\n")
    if args.types:
        for m, (i, j) in enumerate(report.step_types, 2):
            out.write(f"step {m}: ({i},{j})\n")
    return EXIT_OK if report.valid else EXIT_FAIL


# -- render ------------------------------------------------------------------


def cmd_render(args, out: TextIO) -> int:
    w = ArcWord.parse(_value(args))
    text = render_ascii(w) if args.ascii else render_svg(w)
    if args.out is None or args.out == "-":
        out.write(text)
        return EXIT_OK
    try:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {args.out}: {exc.strerror}") from None
    return EXIT_OK


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cubeshell",
        description="Gray codes for standard and sign-connected signed permutations "
        "(facet enumerations and shelling types of the n-cube boundary).",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="emit the full or connected Gray code")
    p.add_argument("--n", type=_positive_n(), required=True)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--format", choices=("words", "perms", "dow", "json"), default="words")
    p.add_argument("--limit", type=_non_negative)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="check a listing of words is a Gray code")
    p.add_argument("--n", type=_positive_n(), required=True)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--input", help="file with one word per line (default: stdin)")
    p.add_argument("--jobs", type=_positive_n(), default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("count", help="(2n-1)!! or the number of connected ones")
    p.add_argument("--n", type=_positive_n(MAX_COUNT_N), required=True)
    p.add_argument("--connected", action="store_true")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("convert", help="convert between word, perm, dow and arcs")
    p.add_argument("--from", dest="source", choices=REPRESENTATIONS, required=True)
    p.add_argument("--to", dest="target", choices=REPRESENTATIONS, required=True)
    p.add_argument("value", nargs="+")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("canon", help="standard representative of a facet enumeration")
    p.add_argument("--witness", action="store_true")
    p.add_argument("value", nargs="+")
    p.set_defaults(func=cmd_canon)

    p = sub.add_parser("shelling", help="is a facet enumeration a shelling?")
    p.add_argument("--types", action="store_true")
    p.add_argument("value", nargs="+")
    p.set_defaults(func=cmd_shelling)

    p = sub.add_parser("render", help="draw the arc diagram of a word")
    p.add_argument("--out", help="SVG output path (default: stdout)")
    p.add_argument("--ascii", action="store_true", help="fixed-width text instead of SVG")
    p.add_argument("value", nargs="+")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (UsageError, InvalidObjectError) as exc:
        print(f"cubeshell: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
