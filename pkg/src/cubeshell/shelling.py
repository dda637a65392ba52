"""Facet enumerations of the n-cube boundary as shelling orders.

Facet ``k`` fixes coordinate ``|k|`` at ``sign(k)``. Two facets ``k`` and
``l`` with ``|k| != |l|`` meet in a codimension-2 face; antipodal facets
``k`` and ``-k`` are disjoint.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterator

from .core import InvalidObjectError, SignedPermutation

__all__ = [
    "FacetLabel",
    "ShellingReport",
    "shelling_report",
    "is_shelling",
    "enumerate_shellings",
    "feasible_component_type",
]

MAX_BRUTE_FORCE_N = 4


@dataclass(frozen=True)
class FacetLabel:
    value: int
    n: int

    def __post_init__(self):
        if self.value == 0 or abs(self.value) > self.n:
            raise InvalidObjectError(f"facet label {self.value} outside +-1..+-{self.n}")

    @property
    def coordinate(self) -> int:
        return abs(self.value)

    @property
    def side(self) -> int:
        return 1 if self.value > 0 else -1

    def face_vector(self) -> str:
        """The facet as a word in ``{-, *, +}``, e.g. ``*+*`` for 2 in n=3."""
        return "".join(
            ("+" if self.side > 0 else "-") if c == self.coordinate else "*"
            for c in range(1, self.n + 1)
        )


@dataclass(frozen=True)
class ShellingReport:
    """Outcome of checking one facet enumeration.

    ``step_types[m-2]`` is the type ``(i, j)`` of the intersection of facet
    ``m`` with the union of facets ``1..m-1``, for ``m = 2..2n``: ``i``
    codimension-2 faces without their antipode and ``j`` antipodal pairs.
    ``unpaired_counts[m-1]`` counts facets among the first ``m`` whose
    antipode is absent, for the proper prefixes ``m = 1..2n-1``.
    """

    valid: bool
    failure_prefix: int | None
    step_types: tuple[tuple[int, int], ...]
    unpaired_counts: tuple[int, ...]


def shelling_report(p: SignedPermutation) -> ShellingReport:
    n = p.n
    # state[c]: how many of the facets +-c have been listed
    state = [0] * (n + 1)
    unpaired = 0
    paired = 0
    counts = []
    types = []
    for m, v in enumerate(p.entries, 1):
        c = abs(v)
        if m > 1:
            # the facet's own pair never meets it, so drop its contribution
            own = state[c]
            types.append((unpaired - (own == 1), paired - (own == 2)))
        state[c] += 1
        if state[c] == 1:
            unpaired += 1
        else:
            unpaired -= 1
            paired += 1
        if m < 2 * n:
            counts.append(unpaired)
    failure = next((m for m, u in enumerate(counts, 1) if u == 0), None)
    return ShellingReport(failure is None, failure, tuple(types), tuple(counts))


def is_shelling(p: SignedPermutation) -> bool:
    return shelling_report(p).valid


def feasible_component_type(i: int, j: int, n: int) -> bool:
    """Whether ``(i, j)`` can be a shelling component type in an n-cube boundary.

    The strict upper bound on ``i`` for general cubical complexes is relaxed
    to ``i <= n - 1`` here: the second facet of any shelling already meets the
    first in a single unpaired face, giving ``(1, 0)`` at ``n = 2``.
    """
    return (i == 0 and j == n - 1) or (0 < i and 0 <= j <= n - 1 - i)


def enumerate_shellings(n: int) -> Iterator[SignedPermutation]:
    """Every shelling of the n-cube boundary, lexicographically (brute force)."""
    if n < 1:
        raise InvalidObjectError(f"n must be positive, got {n}")
    if n > MAX_BRUTE_FORCE_N:
        raise InvalidObjectError(
            f"brute-force enumeration supports n <= {MAX_BRUTE_FORCE_N}, got {n}"
        )
    facets = [*range(-n, 0), *range(1, n + 1)]
    for entries in permutations(facets):
        p = SignedPermutation(entries)
        if is_shelling(p):
            yield p
