from __future__ import annotations

import pytest

from oracles import brute_hom, brute_indecs, brute_intertwines, brute_tiltings
from tropdual.model import ModelParams, enumerate_indecs, hom_dim, intertwines
from tropdual.tilting import enumerate_tiltings

SMALL = [(1, 1), (2, 1), (2, 2)]


@pytest.mark.parametrize("n,d", SMALL)
def test_indecs_match_oracle(n, d):
    assert enumerate_indecs(ModelParams(n, d)) == brute_indecs(n, d)


@pytest.mark.parametrize("n,d", SMALL)
def test_tiltings_match_oracle(n, d):
    fast = sorted(t.summands for t in enumerate_tiltings(ModelParams(n, d)))
    assert fast == brute_tiltings(n, d)


@pytest.mark.parametrize("n,d", [(2, 2), (3, 2), (2, 3)])
def test_intertwining_and_hom_match_oracle(n, d):
    params = ModelParams(n, d)
    objects = enumerate_indecs(params)
    for x in objects:
        for y in objects:
            assert intertwines(x, y) == brute_intertwines(x, y)
            assert hom_dim(x, y, params) == brute_hom(x, y, params.m)


def test_oracle_known_counts():
    # Catalan numbers at d = 1: triangulations of an (n+3)-gon
    assert len(brute_tiltings(1, 1)) == 2
    assert len(brute_tiltings(2, 1)) == 5
    assert len(brute_tiltings(2, 2)) == 7
