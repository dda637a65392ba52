from collections import Counter
from math import factorial

import pytest

from cubeshell import (
    FacetLabel,
    InvalidObjectError,
    SignedPermutation,
    canonicalize,
    count_connected,
    enumerate_shellings,
    is_shelling,
    is_sign_connected,
    shelling_report,
)
from cubeshell.shelling import feasible_component_type

import oracles


def S(*entries):
    return SignedPermutation(entries)


def direct_step_types(entries):
    """Count codimension-2 faces of each new facet shared with earlier facets."""
    out = []
    for m in range(1, len(entries)):
        k = abs(entries[m])
        earlier = set(entries[:m])
        others = {abs(v) for v in earlier} - {k}
        one = sum(1 for c in others if (c in earlier) != (-c in earlier))
        both = sum(1 for c in others if c in earlier and -c in earlier)
        out.append((one, both))
    return out


@pytest.mark.parametrize(
    "entries, expected",
    [
        ((3, 1, -1, 2, -2, -3), True),
        ((1, 2, -1, -2, 3, -3), False),
        ((1, -1, 2, -2), False),
        ((1, -1), True),
        ((-1, 1), True),
    ],
)
def test_is_shelling(entries, expected):
    assert is_shelling(S(*entries)) is expected


def test_report_examples():
    r = shelling_report(S(1, 2, -2, -1))
    assert r.valid and r.failure_prefix is None
    assert r.step_types == ((1, 0), (1, 0), (0, 1))

    r = shelling_report(S(1, 2, -1, -2, 3, -3))
    assert not r.valid
    assert r.failure_prefix == 4
    assert r.unpaired_counts[3] == 0

    r = shelling_report(S(1, -1))
    assert r.valid and r.step_types == ((0, 0),)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_oracle_equivalence(n):
    for entries in oracles.all_signed(n):
        p = S(*entries)
        expected = oracles.sign_connected(entries)
        assert is_shelling(p) is expected
        assert is_sign_connected(p) is expected
        report = shelling_report(p)
        assert list(report.step_types) == direct_step_types(entries)
        assert len(report.step_types) == 2 * n - 1
        assert report.valid is all(u >= 1 for u in report.unpaired_counts)
        for i, j in report.step_types:
            assert i + 2 * j <= 2 * (n - 1)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_shellings_are_whole_orbits(n):
    shellings = list(enumerate_shellings(n))
    assert shellings == sorted(shellings, key=lambda p: p.entries)
    orbits = Counter(canonicalize(p)[0] for p in shellings)
    assert len(orbits) == count_connected(n)
    assert set(orbits.values()) == {2**n * factorial(n)}
    assert len(shellings) == 2**n * factorial(n) * count_connected(n)


def test_enumerate_shellings_examples():
    assert [p.entries for p in enumerate_shellings(1)] == [(-1, 1), (1, -1)]
    assert sum(1 for _ in enumerate_shellings(2)) == 16
    assert sum(1 for _ in enumerate_shellings(3)) == 480
    with pytest.raises(InvalidObjectError):
        next(enumerate_shellings(5))


@pytest.mark.parametrize("n", [2, 3])
def test_step_types_feasible(n):
    for p in enumerate_shellings(n):
        types = shelling_report(p).step_types
        assert types[-1] == (0, n - 1)
        assert all(i >= 1 for i, _ in types[:-1])
        assert all(feasible_component_type(i, j, n) for i, j in types)


def test_strict_upper_bound_is_violated_early():
    # the second facet of every shelling meets the first in one unpaired face
    types = shelling_report(S(1, 2, -2, -1)).step_types
    i, _ = types[0]
    assert not i < 2 - 1


def test_facet_label():
    f = FacetLabel(-2, 3)
    assert f.face_vector() == "*-*"
    assert (f.coordinate, f.side) == (2, -1)
    with pytest.raises(InvalidObjectError):
        FacetLabel(4, 3)
