from __future__ import annotations

import pytest

from tropdual.errors import IntertwiningPair, NotASummand, NotATilting, WrongCount
from tropdual.model import ModelParams, intertwines
from tropdual.tilting import (
    ClusterTilting,
    containing_vertex,
    enumerate_tiltings,
    exchange_report,
    find_mutations,
    is_maximal,
    parse_tilting,
    validate_tilting,
)

P33 = ModelParams(3, 3)

TILTING_COUNTS = {
    (1, 1): 2, (2, 1): 5, (3, 1): 14, (4, 1): 42,
    (2, 2): 7, (3, 2): 40, (2, 3): 9, (3, 3): 102,
}
# mutable summands per grid point; each has exactly one mutation
EXCHANGE_COUNTS = {
    (1, 1): 2, (2, 1): 10, (3, 1): 42, (4, 1): 168,
    (2, 2): 14, (3, 2): 128, (2, 3): 18, (3, 3): 360,
}


@pytest.mark.parametrize("nd", sorted(TILTING_COUNTS))
def test_tilting_counts(nd):
    params = ModelParams(*nd)
    tiltings = enumerate_tiltings(params)
    assert len(tiltings) == TILTING_COUNTS[nd]
    assert all(len(t) == params.tilting_size for t in tiltings)


def test_limit():
    params = ModelParams(3, 2)
    assert enumerate_tiltings(params, 3) == enumerate_tiltings(params)[:3]
    assert enumerate_tiltings(params, 0) == []


@pytest.mark.parametrize("vertex", range(1, 11))
def test_containing_vertex_is_tilting(vertex):
    t = containing_vertex(P33, vertex)
    assert len(t) == 10
    assert is_maximal(t)
    assert all(vertex in s for s in t)


def test_validation_errors():
    with pytest.raises(WrongCount) as info:
        validate_tilting([(1, 3, 5, 7)], P33)
    assert (info.value.expected, info.value.actual) == (10, 1)
    t = list(containing_vertex(P33, 1).summands)
    bad = t[:-1] + [(2, 4, 6, 8)]
    with pytest.raises(IntertwiningPair):
        validate_tilting(bad, P33)
    with pytest.raises(NotATilting):
        validate_tilting(t[:-1] + [t[0]], P33)
    with pytest.raises(NotATilting):
        parse_tilting("{not json", P33)
    with pytest.raises(NotATilting):
        parse_tilting('{"a": 1}', P33)


def test_json_round_trip():
    t = containing_vertex(P33, 3)
    assert parse_tilting(t.to_json(), P33) == t


def test_value_semantics():
    a = containing_vertex(P33, 1)
    b = ClusterTilting(P33, reversed(a.summands))
    assert a == b and hash(a) == hash(b)
    assert a.position(a.summands[2]) == 2


def test_counterexample_summand_is_frozen():
    uu = containing_vertex(P33, 3)
    assert find_mutations(uu, (3, 5, 8, 10), P33) == []
    report = exchange_report(uu, (3, 5, 8, 10), P33)
    assert not report.is_mutable and not report.is_exchange_pair
    with pytest.raises(NotASummand):
        find_mutations(uu, (2, 4, 6, 8), P33)


@pytest.mark.parametrize("nd", sorted(EXCHANGE_COUNTS))
def test_mutations_are_unique_and_are_exchange_pairs(nd):
    params = ModelParams(*nd)
    tiltings = enumerate_tiltings(params)
    known = set(tiltings)
    pairs = 0
    for t in tiltings:
        for u in t:
            muts = find_mutations(t, u, params)
            assert len(muts) <= 1
            report = exchange_report(t, u, params)
            assert report.is_mutable == bool(muts)
            if muts:
                u_star = muts[0]
                assert intertwines(u, u_star)
                assert t.replace(u, u_star) in known
                assert report.is_exchange_pair
                pairs += 1
    assert pairs == EXCHANGE_COUNTS[nd]


def test_exchange_angles_at_d1():
    params = ModelParams(1, 1)
    t = ClusterTilting(params, [(1, 3)])
    report = exchange_report(t, (1, 3), params)
    assert report.u_star == (2, 4)
    assert report.is_exchange_pair
    assert report.angle_forward.first == (2, 4)
    assert report.angle_forward.target == (1, 3)
    data = report.to_json()
    assert data["u_star"] == [2, 4]
