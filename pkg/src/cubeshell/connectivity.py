"""Sign-connectivity predicates, component splitting and exact counts."""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

from .core import ArcWord, SignedPermutation, StandardPermutation

__all__ = [
    "ComponentSplit",
    "is_sign_connected",
    "is_sign_connected_standard",
    "is_word_connected",
    "letters_connected",
    "first_split",
    "components",
    "count_standard",
    "count_connected",
]


def is_sign_connected(p: SignedPermutation) -> bool:
    """Every proper prefix meets some pair ``{-j, j}`` in exactly one element."""
    present = set()
    entries = p.entries
    for m in range(1, len(entries)):
        present.add(entries[m - 1])
        if all((v in present) == (-v in present) for v in present):
            return False
    return True


def is_sign_connected_standard(p: StandardPermutation) -> bool:
    """Prefix-sum test, valid only for standard permutations."""
    total = 0
    for v in p.entries[:-1]:
        total += v
        if total <= 0:
            return False
    return True


def first_split(letters) -> int | None:
    """Least ``k >= 2`` with ``a_j >= 2k - 1`` for all ``j >= k``, or None.

    Such a ``k`` forces ``a_k = 2k - 1``; arcs ``1..k-1`` then form the first
    connected component.
    """
    n = len(letters)
    # suffix_min[j] = min(letters[j:]) using 0-based j
    suffix_min = [0] * (n + 1)
    suffix_min[n] = 2 * n + 1
    for j in range(n - 1, -1, -1):
        suffix_min[j] = min(letters[j], suffix_min[j + 1])
    for k in range(2, n + 1):
        if suffix_min[k - 1] >= 2 * k - 1:
            return k
    return None


def letters_connected(letters) -> bool:
    """Connectivity test on raw letters, no validation."""
    n = len(letters)
    low = 2 * n + 1
    for k in range(n, 1, -1):
        a = letters[k - 1]
        if a < low:
            low = a
        if low >= 2 * k - 1:
            return False
    return True


def is_word_connected(w: ArcWord) -> bool:
    return letters_connected(w.letters)


@dataclass(frozen=True)
class ComponentSplit:
    """Cumulative arc counts at which the connected components end."""

    boundaries: tuple[int, ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        prev = 0
        out = []
        for b in self.boundaries:
            out.append(b - prev)
            prev = b
        return tuple(out)

    def pieces(self, w: ArcWord) -> list[ArcWord]:
        """Each component as a word of its own (positions re-based)."""
        out = []
        start = 0
        for b in self.boundaries:
            shift = 2 * start
            out.append(ArcWord(tuple(a - shift for a in w.letters[start:b])))
            start = b
        return out


def components(w: ArcWord) -> ComponentSplit:
    letters = list(w.letters)
    boundaries = []
    offset = 0
    while True:
        k = first_split(letters)
        if k is None:
            boundaries.append(offset + len(letters))
            return ComponentSplit(tuple(boundaries))
        boundaries.append(offset + k - 1)
        shift = 2 * (k - 1)
        letters = [a - shift for a in letters[k - 1:]]
        offset += k - 1


def count_standard(n: int) -> int:
    """``(2n - 1)!!``, the number of standard permutations."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return prod(range(1, 2 * n, 2))


def count_connected(n: int) -> int:
    """Number of sign-connected standard permutations.

    Splitting off the first connected component (k arcs) leaves an arbitrary
    word on the remaining ``n - k`` arcs, so
    ``C_n = (2n-1)!! - sum_{k<n} C_k (2(n-k)-1)!!``.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    odd = [1]
    for m in range(1, n + 1):
        odd.append(odd[-1] * (2 * m - 1))
    counts = [0]
    for m in range(1, n + 1):
        counts.append(odd[m] - sum(counts[k] * odd[m - k] for k in range(1, m)))
    return counts[n]
