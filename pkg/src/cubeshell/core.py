"""Domain types and the bijections between them.

A standard signed permutation of {+-1, ..., +-n} can be written in four
equivalent ways:

* as the permutation itself, e.g. ``3 1 -1 2 -2 -3``;
* as an arc word ``a_1 ... a_n`` with ``1 <= a_i <= 2i - 1``, e.g. ``1 3 1``;
* as an arc diagram, a perfect matching of the positions ``1..2n``;
* as a standard double-occurrence word, e.g. ``1 2 2 3 3 1``.

All positions and letters are 1-based. Every type validates on construction,
so holding an instance means its invariants hold.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "InvalidObjectError",
    "EncodingBoundsError",
    "NotStandardError",
    "DimensionMismatchError",
    "SignedPermutation",
    "StandardPermutation",
    "ArcWord",
    "ArcDiagram",
    "DoubleOccurrenceWord",
    "FppInvolution",
    "word_to_permutation",
    "permutation_to_word",
    "word_to_arcs",
    "arcs_to_word",
    "permutation_to_dow",
    "dow_to_permutation",
    "permutation_to_involution",
    "involution_to_permutation",
]


class InvalidObjectError(ValueError):
    """A sequence does not satisfy the invariants of the requested type."""


class EncodingBoundsError(InvalidObjectError):
    """An arc word letter lies outside ``[1, 2i - 1]``."""

    def __init__(self, position: int, letter: int):
        self.position = position
        self.letter = letter
        super().__init__(
            f"letter a_{position} = {letter} outside bounds [1, {2 * position - 1}]"
        )


class NotStandardError(InvalidObjectError):
    """A signed permutation violates one of the two standard-form conditions.

    ``condition`` is 1 when some ``-i`` precedes ``i`` and 2 when the negative
    entries are not ``-1, -2, ..., -n`` in this order.
    """

    def __init__(self, condition: int, message: str):
        self.condition = condition
        super().__init__(f"condition ({condition}) violated: {message}")


class DimensionMismatchError(ValueError):
    """Two objects that must share ``n`` do not."""


def check_same_dimension(a, b) -> None:
    if a.n != b.n:
        raise DimensionMismatchError(f"dimension mismatch: n={a.n} vs n={b.n}")


_SEPARATORS = re.compile(r"[\s,;]+")


def _tokens(text: str) -> list[str]:
    text = text.strip().strip("()[]")
    return [t for t in _SEPARATORS.split(text) if t]


def _parse_ints(text: str, what: str) -> list[int]:
    try:
        return [int(t) for t in _tokens(text)]
    except ValueError:
        raise InvalidObjectError(f"cannot parse {what} from {text!r}") from None


# --------------------------------------------------------------------------
# Signed permutations
# --------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class SignedPermutation:
    """A listing of each of ``+-1, ..., +-n`` exactly once.

    Read as an enumeration of the facets of the boundary of the n-cube, the
    entry ``k`` is the facet ``u_|k| = sign(k)``.
    """

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(v) for v in self.entries)
        object.__setattr__(self, "entries", entries)
        size = len(entries)
        if size == 0 or size % 2:
            raise InvalidObjectError(
                f"a signed permutation needs 2n > 0 entries, got {size}"
            )
        n = size // 2
        if sorted(entries) != [*range(-n, 0), *range(1, n + 1)]:
            raise InvalidObjectError(
                f"entries {entries} are not a permutation of +-1..+-{n}"
            )

    @property
    def n(self) -> int:
        return len(self.entries) // 2

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, index):
        return self.entries[index]

    def __eq__(self, other):
        if isinstance(other, SignedPermutation):
            return self.entries == other.entries
        return NotImplemented

    def __hash__(self):
        return hash(self.entries)

    def __str__(self) -> str:
        return " ".join(map(str, self.entries))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.entries})"

    def positions(self) -> dict[int, int]:
        """Map each value to its 1-based position."""
        return {v: i for i, v in enumerate(self.entries, 1)}

    @classmethod
    def parse(cls, text: str):
        return cls(_parse_ints(text, "a signed permutation"))


def _standard_violation(entries: Sequence[int]) -> NotStandardError | None:
    seen = set()
    next_negative = 1
    for v in entries:
        if v > 0:
            seen.add(v)
            continue
        if -v not in seen:
            return NotStandardError(1, f"{v} occurs before {-v}")
        if -v != next_negative:
            return NotStandardError(
                2, f"found {v} where -{next_negative} was expected"
            )
        next_negative += 1
    return None


@dataclass(frozen=True, eq=False)
class StandardPermutation(SignedPermutation):
    """The unique representative of a hyperoctahedral orbit.

    Each ``i`` precedes ``-i``, and the negatives read ``-1, -2, ..., -n``.
    """

    def __post_init__(self):
        super().__post_init__()
        error = _standard_violation(self.entries)
        if error is not None:
            raise error

    @classmethod
    def _trusted(cls, entries: tuple[int, ...]) -> StandardPermutation:
        obj = object.__new__(cls)
        object.__setattr__(obj, "entries", entries)
        return obj


# --------------------------------------------------------------------------
# Arc words
# --------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class ArcWord:
    """Letters ``a_1 ... a_n`` with ``1 <= a_i <= 2i - 1``.

    ``a_i`` is the position of the left endpoint of arc ``i`` once arcs
    ``i+1, ..., n`` have been deleted from the diagram.
    """

    letters: tuple[int, ...]

    def __post_init__(self):
        letters = tuple(int(a) for a in self.letters)
        object.__setattr__(self, "letters", letters)
        if not letters:
            raise InvalidObjectError("an arc word needs n >= 1 letters")
        for i, a in enumerate(letters, 1):
            if not 1 <= a <= 2 * i - 1:
                raise EncodingBoundsError(i, a)

    @classmethod
    def _trusted(cls, letters: tuple[int, ...]) -> ArcWord:
        obj = object.__new__(cls)
        object.__setattr__(obj, "letters", letters)
        return obj

    @property
    def n(self) -> int:
        return len(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __getitem__(self, index):
        return self.letters[index]

    def __eq__(self, other):
        if isinstance(other, ArcWord):
            return self.letters == other.letters
        return NotImplemented

    def __hash__(self):
        return hash(self.letters)

    def __str__(self) -> str:
        return " ".join(map(str, self.letters))

    def __repr__(self) -> str:
        return f"ArcWord({self.letters})"

    @classmethod
    def parse(cls, text: str) -> ArcWord:
        """Parse ``"1 3 1"``, or the compact digit form ``"131"``."""
        tokens = _tokens(text)
        if len(tokens) == 1 and tokens[0].isdigit() and len(tokens[0]) > 1:
            tokens = list(tokens[0])
        try:
            letters = [int(t) for t in tokens]
        except ValueError:
            raise InvalidObjectError(f"cannot parse a word from {text!r}") from None
        return cls(letters)


def decode_letters(letters: Sequence[int]) -> tuple[int, ...]:
    """Entries of the standard permutation encoded by ``letters``.

    No validation; callers pass letters already known to be in bounds.
    """
    seq: list[int] = []
    for i, a in enumerate(letters, 1):
        seq.insert(a - 1, i)
        seq.append(-i)
    return tuple(seq)


def encode_entries(entries: Sequence[int]) -> tuple[int, ...]:
    """Inverse of :func:`decode_letters` for standard entries."""
    seq = list(entries)
    n = len(seq) // 2
    letters = [0] * n
    for i in range(n, 0, -1):
        # -i is always last once arcs above i are gone
        seq.pop()
        k = seq.index(i)
        letters[i - 1] = k + 1
        del seq[k]
    return tuple(letters)


def word_to_permutation(w: ArcWord) -> StandardPermutation:
    """Rebuild the standard permutation by inserting arcs left to right.

    >>> str(word_to_permutation(ArcWord.parse("131")))
    '3 1 -1 2 -2 -3'
    """
    return StandardPermutation._trusted(decode_letters(w.letters))


def permutation_to_word(p: StandardPermutation) -> ArcWord:
    if not isinstance(p, StandardPermutation):
        p = StandardPermutation(p.entries)
    return ArcWord._trusted(encode_entries(p.entries))


# --------------------------------------------------------------------------
# Arc diagrams
# --------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class ArcDiagram:
    """A perfect matching of positions ``1..2n`` in the standard labeling.

    ``arcs[k-1]`` is ``(left, right)`` for arc ``k``, whose endpoints carry
    the labels ``k`` and ``-k``. Arcs are ordered by right endpoint.
    """

    arcs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        arcs = tuple((int(l), int(r)) for l, r in self.arcs)
        object.__setattr__(self, "arcs", arcs)
        n = len(arcs)
        if n == 0:
            raise InvalidObjectError("an arc diagram needs n >= 1 arcs")
        ends = sorted(x for arc in arcs for x in arc)
        if ends != list(range(1, 2 * n + 1)):
            raise InvalidObjectError(
                f"arc endpoints {ends} do not cover positions 1..{2 * n} once each"
            )
        for k, (left, right) in enumerate(arcs, 1):
            if left >= right:
                raise InvalidObjectError(f"arc {k} has left {left} >= right {right}")
        rights = [r for _, r in arcs]
        if any(a >= b for a, b in zip(rights, rights[1:])):
            raise InvalidObjectError(f"right endpoints {rights} are not increasing")
        if rights[-1] != 2 * n:
            raise InvalidObjectError(f"last arc must end at position {2 * n}")

    @classmethod
    def from_matching(cls, pairs: Iterable[tuple[int, int]]) -> ArcDiagram:
        """Normalise an arbitrary perfect matching of ``1..2n``."""
        arcs = sorted((tuple(sorted(p)) for p in pairs), key=lambda arc: arc[1])
        return cls(arcs)

    @property
    def n(self) -> int:
        return len(self.arcs)

    def labels(self) -> tuple[int, ...]:
        """Vertex labels left to right; this is the standard permutation."""
        out = [0] * (2 * self.n)
        for k, (left, right) in enumerate(self.arcs, 1):
            out[left - 1] = k
            out[right - 1] = -k
        return tuple(out)

    def __eq__(self, other):
        if isinstance(other, ArcDiagram):
            return self.arcs == other.arcs
        return NotImplemented

    def __hash__(self):
        return hash(self.arcs)

    def __str__(self) -> str:
        return " ".join(f"{l},{r}" for l, r in self.arcs)

    @classmethod
    def parse(cls, text: str) -> ArcDiagram:
        """Parse ``"2,3 4,5 1,6"`` (any order, any separators)."""
        values = _parse_ints(text, "an arc diagram")
        if len(values) % 2:
            raise InvalidObjectError(f"odd number of endpoints in {text!r}")
        return cls.from_matching(zip(values[::2], values[1::2]))


def word_to_arcs(w: ArcWord) -> ArcDiagram:
    pos = {v: i for i, v in enumerate(decode_letters(w.letters), 1)}
    return ArcDiagram(tuple((pos[k], pos[-k]) for k in range(1, w.n + 1)))


def arcs_to_word(d: ArcDiagram) -> ArcWord:
    return ArcWord._trusted(encode_entries(d.labels()))


# --------------------------------------------------------------------------
# Double-occurrence words
# --------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class DoubleOccurrenceWord:
    """A standard double-occurrence word over ``1..n``."""

    letters: tuple[int, ...]

    def __post_init__(self):
        letters = tuple(int(a) for a in self.letters)
        object.__setattr__(self, "letters", letters)
        if not letters or len(letters) % 2:
            raise InvalidObjectError(
                f"a double-occurrence word needs 2n > 0 letters, got {len(letters)}"
            )
        n = len(letters) // 2
        counts = [0] * (n + 1)
        for a in letters:
            if not 1 <= a <= n:
                raise InvalidObjectError(f"letter {a} outside 1..{n}")
            counts[a] += 1
        for a in range(1, n + 1):
            if counts[a] != 2:
                raise InvalidObjectError(
                    f"letter {a} occurs {counts[a]} times, expected 2"
                )
        firsts = []
        for a in letters:
            if a not in firsts:
                firsts.append(a)
        if firsts != list(range(1, n + 1)):
            raise InvalidObjectError(
                f"not standard: first occurrences read {firsts}"
            )

    @property
    def n(self) -> int:
        return len(self.letters) // 2

    def __eq__(self, other):
        if isinstance(other, DoubleOccurrenceWord):
            return self.letters == other.letters
        return NotImplemented

    def __hash__(self):
        return hash(self.letters)

    def __str__(self) -> str:
        return " ".join(map(str, self.letters))

    @classmethod
    def parse(cls, text: str) -> DoubleOccurrenceWord:
        tokens = _tokens(text)
        if len(tokens) == 1 and tokens[0].isdigit() and len(tokens[0]) > 1:
            tokens = list(tokens[0])
        try:
            letters = [int(t) for t in tokens]
        except ValueError:
            raise InvalidObjectError(
                f"cannot parse a double-occurrence word from {text!r}"
            ) from None
        return cls(letters)


def permutation_to_dow(p: StandardPermutation) -> DoubleOccurrenceWord:
    """Strip signs, reverse, complement."""
    n = p.n
    return DoubleOccurrenceWord(tuple(n + 1 - abs(v) for v in reversed(p.entries)))


def dow_to_permutation(d: DoubleOccurrenceWord) -> StandardPermutation:
    """Complement, reverse, and negate every second occurrence."""
    n = d.n
    seen = set()
    out = []
    for a in reversed(d.letters):
        v = n + 1 - a
        out.append(-v if v in seen else v)
        seen.add(v)
    return StandardPermutation(out)


# --------------------------------------------------------------------------
# Fixed-point-free involutions
# --------------------------------------------------------------------------


def position_label(position: int) -> int:
    """Identify position ``2k-1`` with ``k`` and position ``2k`` with ``-k``."""
    k = (position + 1) // 2
    return k if position % 2 else -k


def label_position(label: int) -> int:
    return 2 * label - 1 if label > 0 else -2 * label


@dataclass(frozen=True, eq=False)
class FppInvolution:
    """A fixed-point-free involution of ``{+-1, ..., +-n}``.

    The ground set is ordered ``1, -1, 2, -2, ..., n, -n``; element ``x``
    stands for the position ``label_position(x)`` of a facet listing. ``pairs``
    holds the n two-cycles, each written smaller-position first and sorted by
    that first element.
    """

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple(
            tuple(sorted((int(x), int(y)), key=label_position)) for x, y in self.pairs
        )
        pairs = tuple(sorted(pairs, key=lambda p: label_position(p[0])))
        object.__setattr__(self, "pairs", pairs)
        n = len(pairs)
        if n == 0:
            raise InvalidObjectError("an involution needs n >= 1 two-cycles")
        points = sorted(x for p in pairs for x in p)
        if points != [*range(-n, 0), *range(1, n + 1)]:
            raise InvalidObjectError(
                f"two-cycles {pairs} do not partition +-1..+-{n}"
            )

    @property
    def n(self) -> int:
        return len(self.pairs)

    def mapping(self) -> dict[int, int]:
        out = {}
        for x, y in self.pairs:
            out[x] = y
            out[y] = x
        return out

    def __call__(self, x: int) -> int:
        return self.mapping()[x]

    def is_indecomposable(self) -> bool:
        """True if no proper initial segment of the ground order is closed."""
        reach = 0
        for x, y in self.pairs:
            px, py = label_position(x), label_position(y)
            if px > reach and reach > 0:
                return False
            reach = max(reach, py)
        return True

    def __eq__(self, other):
        if isinstance(other, FppInvolution):
            return self.pairs == other.pairs
        return NotImplemented

    def __hash__(self):
        return hash(self.pairs)

    def __str__(self) -> str:
        return " ".join(f"{x}<->{y}" for x, y in self.pairs)


def permutation_to_involution(p: StandardPermutation) -> FppInvolution:
    """Exchange ``pi^-1(i)`` and ``pi^-1(-i)`` for every ``i``."""
    pos = p.positions()
    return FppInvolution(
        tuple(
            (position_label(pos[i]), position_label(pos[-i]))
            for i in range(1, p.n + 1)
        )
    )


def involution_to_permutation(inv: FppInvolution) -> StandardPermutation:
    matching = [(label_position(x), label_position(y)) for x, y in inv.pairs]
    return StandardPermutation(ArcDiagram.from_matching(matching).labels())
