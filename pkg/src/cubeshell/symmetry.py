"""The hyperoctahedral group acting on facet enumerations of the n-cube."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterator

from .core import (
    DimensionMismatchError,
    InvalidObjectError,
    SignedPermutation,
    StandardPermutation,
    check_same_dimension,
)

__all__ = [
    "SignedRelabeling",
    "apply",
    "canonicalize",
    "equivalent",
    "group_elements",
]


@dataclass(frozen=True)
class SignedRelabeling:
    """An isometry of the n-cube in factored form.

    Acting on a facet label ``v``: first negate ``v`` if ``|v|`` is in
    ``sign_flips``, then replace its magnitude ``c`` by ``relabeling[c-1]``.
    """

    n: int
    sign_flips: frozenset[int]
    relabeling: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "sign_flips", frozenset(self.sign_flips))
        object.__setattr__(self, "relabeling", tuple(self.relabeling))
        if self.n < 1:
            raise InvalidObjectError("n must be positive")
        if sorted(self.relabeling) != list(range(1, self.n + 1)):
            raise InvalidObjectError(
                f"relabeling {self.relabeling} is not a permutation of 1..{self.n}"
            )
        if not self.sign_flips <= set(range(1, self.n + 1)):
            raise InvalidObjectError(f"sign flips {set(self.sign_flips)} outside 1..{self.n}")

    @classmethod
    def identity(cls, n: int) -> SignedRelabeling:
        return cls(n, frozenset(), tuple(range(1, n + 1)))

    @classmethod
    def reflection(cls, n: int, k: int) -> SignedRelabeling:
        """The generator interchanging ``k`` with ``-k``."""
        return cls(n, frozenset({k}), tuple(range(1, n + 1)))

    @classmethod
    def swap(cls, n: int, i: int, j: int) -> SignedRelabeling:
        """The generator interchanging ``i`` with ``j`` and ``-i`` with ``-j``."""
        relabel = list(range(1, n + 1))
        relabel[i - 1], relabel[j - 1] = j, i
        return cls(n, frozenset(), tuple(relabel))

    def __call__(self, v: int) -> int:
        c = abs(v)
        sign = -1 if (v < 0) != (c in self.sign_flips) else 1
        return sign * self.relabeling[c - 1]

    def is_identity(self) -> bool:
        return not self.sign_flips and self.relabeling == tuple(range(1, self.n + 1))

    def compose(self, other: SignedRelabeling) -> SignedRelabeling:
        """``self`` after ``other``."""
        check_same_dimension(self, other)
        flips = set()
        relabel = []
        for c in range(1, self.n + 1):
            image = self(other(c))
            if image < 0:
                flips.add(c)
            relabel.append(abs(image))
        return SignedRelabeling(self.n, frozenset(flips), tuple(relabel))

    def inverse(self) -> SignedRelabeling:
        flips = set()
        relabel = [0] * self.n
        for c in range(1, self.n + 1):
            image = self(c)
            relabel[abs(image) - 1] = c
            if image < 0:
                flips.add(abs(image))
        return SignedRelabeling(self.n, frozenset(flips), tuple(relabel))

    def __str__(self) -> str:
        flips = ",".join(map(str, sorted(self.sign_flips))) or "-"
        relabel = " ".join(f"{c}->{d}" for c, d in enumerate(self.relabeling, 1))
        return f"flips: {flips}\nrelabel: {relabel}"


def group_elements(n: int) -> Iterator[SignedRelabeling]:
    """All ``2^n * n!`` elements, identity first."""
    labels = range(1, n + 1)
    for size in range(n + 1):
        for flips in combinations(labels, size):
            for relabel in permutations(labels):
                yield SignedRelabeling(n, frozenset(flips), relabel)


def apply(g: SignedRelabeling, p: SignedPermutation) -> SignedPermutation:
    if g.n != p.n:
        raise DimensionMismatchError(f"dimension mismatch: n={g.n} vs n={p.n}")
    return SignedPermutation(tuple(g(v) for v in p.entries))


def canonicalize(p: SignedPermutation) -> tuple[StandardPermutation, SignedRelabeling]:
    """The standard representative of the orbit of ``p`` and the element reaching it.

    Pairs whose negative facet comes first are flipped; the negatives are then
    relabelled ``-1, -2, ..., -n`` in order of appearance.
    """
    n = p.n
    seen = set()
    flips = set()
    for v in p.entries:
        c = abs(v)
        if c not in seen:
            seen.add(c)
            if v < 0:
                flips.add(c)
    relabel = [0] * n
    nxt = 1
    for v in p.entries:
        c = abs(v)
        # after flipping, the second occurrence of each pair is the negative one
        if c in seen:
            seen.discard(c)
        else:
            relabel[c - 1] = nxt
            nxt += 1
    g = SignedRelabeling(n, frozenset(flips), tuple(relabel))
    return StandardPermutation(tuple(g(v) for v in p.entries)), g


def equivalent(p: SignedPermutation, q: SignedPermutation) -> bool:
    check_same_dimension(p, q)
    return canonicalize(p)[0] == canonicalize(q)[0]
