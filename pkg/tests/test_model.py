from __future__ import annotations

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tropdual.errors import InvalidObject, InvalidParams, PreconditionError
from tropdual.model import (
    ModelParams,
    enumerate_indecs,
    factors_through,
    format_indec,
    hom_dim,
    hom_dim_chain,
    intertwines,
    intertwining_witness,
    make_indec,
    parse_indec,
    quotient_hom_dim,
    shift,
)

P33 = ModelParams(3, 3)
GRID = [(1, 1), (2, 1), (3, 1), (4, 1), (2, 2), (3, 2), (2, 3), (3, 3)]


@st.composite
def params_and_indec(draw, count=1):
    n, d = draw(st.sampled_from(GRID))
    params = ModelParams(n, d)
    objects = enumerate_indecs(params)
    picks = [draw(st.sampled_from(objects)) for _ in range(count)]
    return (params, *picks)


def test_params_validation():
    assert P33.m == 10
    assert P33.tilting_size == 10
    with pytest.raises(InvalidParams):
        ModelParams(0, 1)
    with pytest.raises(InvalidParams):
        ModelParams(1, 0)


def test_indec_count_at_33():
    assert len(enumerate_indecs(P33)) == 25


@pytest.mark.parametrize(
    "vertices",
    [[1, 2, 5, 8], [1, 3, 5], [0, 3, 5, 7], [3, 5, 7, 11], [1, 3, 5, 10], [1, 1, 5, 8]],
)
def test_make_indec_rejects(vertices):
    with pytest.raises(InvalidObject):
        make_indec(vertices, P33)


def test_make_indec_sorts():
    assert make_indec([8, 3, 5, 10], P33) == (3, 5, 8, 10)


def test_parse_forms():
    assert parse_indec("3,5,8,10", P33) == (3, 5, 8, 10)
    assert parse_indec("[3, 5, 8, 10]", P33) == (3, 5, 8, 10)
    assert format_indec((3, 5, 8, 10)) == "3,5,8,10"
    with pytest.raises(InvalidObject):
        parse_indec("three", P33)


def test_shift_example():
    assert shift((4, 6, 8, 10), P33) == (3, 5, 7, 9)
    assert shift((1, 3, 5, 7), P33) == (2, 4, 6, 10)


def test_intertwining_examples():
    assert intertwines((1, 3, 5, 7), (2, 4, 6, 8))
    assert not intertwines((1, 3, 5, 7), (1, 3, 5, 8))
    assert intertwining_witness((1, 3, 5, 7), (3, 5, 7, 9)) is None


def test_factors_through_examples():
    x, y = (3, 5, 7, 9), (3, 5, 7, 10)
    assert hom_dim(x, y, P33) == 1
    assert factors_through(x, y, x, P33)
    assert factors_through(x, y, y, P33)
    with pytest.raises(PreconditionError):
        factors_through((3, 5, 7, 9), (3, 6, 8, 10), (3, 5, 7, 9), P33)


@settings(max_examples=200, deadline=None)
@given(params_and_indec())
def test_shift_is_a_bijection(data):
    params, x = data
    y = shift(x, params, 1)
    assert y in enumerate_indecs(params)
    assert shift(y, params, -1) == x
    assert shift(x, params, params.m) == x


@settings(max_examples=200, deadline=None)
@given(params_and_indec(count=2))
def test_intertwining_symmetric_irreflexive(data):
    params, x, y = data
    assert intertwines(x, y) == intertwines(y, x)
    assert not intertwines(x, x)


@settings(max_examples=300, deadline=None)
@given(params_and_indec(count=2))
def test_hom_criteria_agree(data):
    params, x, y = data
    assert hom_dim(x, y, params) == hom_dim_chain(x, y, params)


@settings(max_examples=200, deadline=None)
@given(params_and_indec(count=2))
def test_factorisation_boundaries(data):
    params, x, y = data
    if not hom_dim(x, y, params):
        return
    assert factors_through(x, y, x, params)
    assert factors_through(x, y, y, params)


@settings(max_examples=200, deadline=None)
@given(params_and_indec(count=3))
def test_quotient_monotone(data):
    params, x, y, z = data
    full = hom_dim(x, y, params)
    q_empty = quotient_hom_dim(x, y, [], params)
    q_one = quotient_hom_dim(x, y, [z], params)
    assert q_empty == full
    assert q_one <= q_empty
    assert quotient_hom_dim(x, y, [z, x], params) <= q_one


@settings(max_examples=100, deadline=None)
@given(params_and_indec())
def test_json_round_trip(data):
    params, x = data
    assert parse_indec(json.dumps(list(x)), params) == x
    assert parse_indec(format_indec(x), params) == x
