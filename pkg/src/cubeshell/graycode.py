"""The reflected Gray code on arc words and its connected sublist.

Position ``i`` of a word is a digit of radix ``2i - 1``; the last letter moves
fastest and each letter sweeps up and down alternately, so consecutive words
differ in one letter by one. Decoded to standard permutations, consecutive
words differ by one adjacent transposition, and so do consecutive
arc-connected words once the disconnected ones are dropped.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import groupby
from typing import Iterator

from .connectivity import count_standard, first_split, letters_connected
from .core import (
    ArcWord,
    InvalidObjectError,
    SignedPermutation,
    check_same_dimension,
)

__all__ = [
    "GrayCursor",
    "RunDescriptor",
    "full_code_start",
    "full_code_next",
    "connected_code_next",
    "cursor_at",
    "full_code",
    "connected_code",
    "rank",
    "unrank",
    "is_adjacent_transposition",
    "run_descriptor",
    "runs",
]

INCREASING = "increasing"
DECREASING = "decreasing"


class GrayCursor:
    """Mutable position in the full code of length-``n`` words.

    ``directions[i]`` is the sweep direction (+1 or -1) of letter ``i + 1``;
    letter 1 never moves and keeps +1. Directions flip lazily: a letter at the
    end of its sweep keeps its old direction until a slower letter moves.
    """

    __slots__ = ("n", "_letters", "directions", "index_m", "exhausted")

    def __init__(self, n: int, letters, directions, index_m: int):
        self.n = n
        self._letters = list(letters)
        self.directions = list(directions)
        self.index_m = index_m
        self.exhausted = False

    @property
    def current(self) -> ArcWord:
        return ArcWord._trusted(tuple(self._letters))

    @property
    def letters(self) -> tuple[int, ...]:
        return tuple(self._letters)

    def advance(self) -> bool:
        """Step to the successor in place; False once the code is used up."""
        if self.exhausted:
            return False
        a = self._letters
        d = self.directions
        i = self.n - 1
        while i > 0:
            nxt = a[i] + d[i]
            if 1 <= nxt <= 2 * i + 1:
                a[i] = nxt
                for j in range(i + 1, self.n):
                    d[j] = -d[j]
                self.index_m += 1
                return True
            i -= 1
        self.exhausted = True
        return False

    def __iter__(self) -> Iterator[ArcWord]:
        """Yield the current word and every later one."""
        if self.exhausted:
            return
        yield self.current
        while self.advance():
            yield self.current

    def __repr__(self) -> str:
        state = "exhausted" if self.exhausted else f"m={self.index_m}"
        return f"GrayCursor(n={self.n}, {' '.join(map(str, self._letters))}, {state})"


def _check_n(n: int) -> None:
    if n < 1:
        raise InvalidObjectError(f"n must be positive, got {n}")


def full_code_start(n: int) -> GrayCursor:
    _check_n(n)
    return GrayCursor(n, [1] * n, [1] * n, 1)


def full_code_next(c: GrayCursor) -> GrayCursor | None:
    """Advance ``c``; returns it, or None when the enumeration has ended."""
    return c if c.advance() else None


def connected_code_next(c: GrayCursor) -> GrayCursor | None:
    """Advance ``c`` to the next arc-connected word of the full code."""
    while c.advance():
        if letters_connected(c._letters):
            return c
    return None


def full_code(n: int) -> Iterator[ArcWord]:
    return iter(full_code_start(n))


def connected_code(n: int) -> Iterator[ArcWord]:
    c = full_code_start(n)
    yield c.current
    while connected_code_next(c) is not None:
        yield c.current


def _prefix_ranks(letters) -> list[int]:
    """0-based rank of each prefix ``a_1..a_i`` within the length-i code."""
    r = 0
    out = [0]
    for i in range(2, len(letters) + 1):
        radix = 2 * i - 1
        digit = letters[i - 1] - 1
        r = r * radix + (digit if r % 2 == 0 else radix - 1 - digit)
        out.append(r)
    return out


def rank(w: ArcWord) -> int:
    """1-based index of ``w`` in the full code."""
    return _prefix_ranks(w.letters)[-1] + 1


def unrank(n: int, m: int) -> ArcWord:
    """The ``m``-th word (1-based) of the full code."""
    _check_n(n)
    total = count_standard(n)
    if not 1 <= m <= total:
        raise InvalidObjectError(f"rank {m} outside 1..{total}")
    r = m - 1
    digits = []
    for i in range(n, 1, -1):
        radix = 2 * i - 1
        r, digit = divmod(r, radix)
        digits.append(digit if r % 2 == 0 else radix - 1 - digit)
    return ArcWord._trusted((1, *(d + 1 for d in reversed(digits))))


def cursor_at(n: int, m: int) -> GrayCursor:
    """A cursor positioned at the ``m``-th word, ready to continue."""
    w = unrank(n, m)
    ranks = _prefix_ranks(w.letters)
    directions = [1] + [1 if ranks[i - 1] % 2 == 0 else -1 for i in range(1, n)]
    return GrayCursor(n, w.letters, directions, m)


def is_adjacent_transposition(p: SignedPermutation, q: SignedPermutation) -> bool:
    check_same_dimension(p, q)
    return _adjacent(p.entries, q.entries)


def _adjacent(x, y) -> bool:
    diff = [i for i in range(len(x)) if x[i] != y[i]]
    return (
        len(diff) == 2
        and diff[1] == diff[0] + 1
        and x[diff[0]] == y[diff[1]]
        and x[diff[1]] == y[diff[0]]
    )


@dataclass(frozen=True)
class RunDescriptor:
    """A maximal block of the full code sharing ``a_1 .. a_{n-1}``.

    Words of the run with ``a_n <= 2 * threshold_k - 2`` are arc-connected and
    the rest are not.
    """

    prefix: tuple[int, ...]
    direction: str
    ordinal: int
    threshold_k: int

    @property
    def n(self) -> int:
        return len(self.prefix) + 1

    def words(self) -> list[ArcWord]:
        last = range(1, 2 * self.n)
        if self.direction == DECREASING:
            last = reversed(last)
        return [ArcWord._trusted((*self.prefix, a)) for a in last]

    def is_connected_at(self, last_letter: int) -> bool:
        return last_letter <= 2 * self.threshold_k - 2


def run_descriptor(prefix, ordinal: int | None = None) -> RunDescriptor:
    """Describe the run whose words start with ``prefix``.

    ``ordinal`` defaults to the rank of ``prefix`` in the shorter code; when
    given it must agree with that rank.
    """
    prefix = tuple(prefix)
    n = len(prefix) + 1
    if prefix:
        expected = rank(ArcWord(prefix))
    else:
        expected = 1
    if ordinal is None:
        ordinal = expected
    elif ordinal != expected:
        raise InvalidObjectError(
            f"prefix {prefix} is run {expected} of the code, not run {ordinal}"
        )
    direction = INCREASING if (sum(prefix) + n - 2) % 2 else DECREASING
    k = first_split(prefix)
    return RunDescriptor(prefix, direction, ordinal, n if k is None else k)


def runs(n: int) -> Iterator[tuple[RunDescriptor, list[ArcWord]]]:
    """Group the full code into runs, with descriptors computed independently."""
    for ordinal, (prefix, group) in enumerate(
        groupby(full_code(n), key=lambda w: w.letters[:-1]), 1
    ):
        yield run_descriptor(prefix, ordinal), list(group)
