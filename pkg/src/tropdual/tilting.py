"""Cluster tilting objects, mutation and exchange pairs.

A cluster tilting object is a family of ``C(n+d-1, d)`` mutually
non-intertwining indecomposables.  Its summands are kept in lexicographic
order, which is also the basis order of its split Grothendieck group.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional

from . import kernels
from .angles import Angle, angle_between
from .errors import IntertwiningPair, NotASummand, NotATilting, WrongCount
from .model import (
    Indec,
    ModelParams,
    enumerate_indecs,
    format_indec,
    hom_dim,
    intertwines,
    make_indec,
    shift,
)


class ClusterTilting:
    """Immutable, hashable set of summands with a fixed basis order."""

    __slots__ = ("params", "summands", "_set", "_hash")

    def __init__(self, params: ModelParams, summands: Iterable[Indec]):
        self.params = params
        self.summands = tuple(sorted(set(summands)))
        self._set = frozenset(self.summands)
        self._hash = hash((params, self.summands))

    def __contains__(self, x) -> bool:
        return x in self._set

    def __iter__(self):
        return iter(self.summands)

    def __len__(self) -> int:
        return len(self.summands)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClusterTilting):
            return NotImplemented
        return self.params == other.params and self.summands == other.summands

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join(f"({format_indec(s)})" for s in self.summands)
        return f"ClusterTilting(n={self.params.n}, d={self.params.d}: {body})"

    def position(self, x: Indec) -> int:
        return self.summands.index(x)

    def replace(self, u: Indec, u_star: Indec) -> "ClusterTilting":
        return ClusterTilting(self.params, (self._set - {u}) | {u_star})

    def to_json(self) -> list:
        return [list(s) for s in self.summands]


def containing_vertex(params: ModelParams, vertex: int) -> ClusterTilting:
    """All indecomposables through one polygon vertex (always cluster tilting)."""
    return validate_tilting([x for x in enumerate_indecs(params) if vertex in x], params)


def validate_tilting(candidate: Iterable, params: ModelParams) -> ClusterTilting:
    members = [make_indec(x, params) for x in candidate]
    if len(set(members)) != len(members):
        raise NotATilting("repeated summand")
    expected = params.tilting_size
    if len(members) != expected:
        raise WrongCount(expected, len(members))
    members.sort()
    for i, x in enumerate(members):
        for y in members[i + 1:]:
            if intertwines(x, y):
                raise IntertwiningPair(x, y)
    return ClusterTilting(params, members)


def parse_tilting(data, params: ModelParams) -> ClusterTilting:
    """Accept the JSON form (string or decoded list) of a tilting object."""
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise NotATilting(f"malformed tilting JSON: {exc}") from None
    if not isinstance(data, list) or not all(isinstance(x, list) for x in data):
        raise NotATilting("a tilting object is a JSON array of vertex arrays")
    return validate_tilting(data, params)


@lru_cache(maxsize=None)
def _all_tiltings(params: ModelParams) -> tuple:
    objects = enumerate_indecs(params)
    compat = kernels.compat_matrix(objects)
    found = kernels.cliques(compat, params.tilting_size, -1)
    return tuple(ClusterTilting(params, [objects[i] for i in idx]) for idx in found)


def enumerate_tiltings(params: ModelParams, limit: Optional[int] = None) -> list:
    """Every cluster tilting object, by backtracking in lexicographic order."""
    if limit is None:
        return list(_all_tiltings(params))
    if limit < 0:
        raise ValueError("limit must be non-negative")
    objects = enumerate_indecs(params)
    compat = kernels.compat_matrix(objects)
    found = kernels.cliques(compat, params.tilting_size, limit)
    return [ClusterTilting(params, [objects[i] for i in idx]) for idx in found]


def is_maximal(tilting: ClusterTilting) -> bool:
    """No outside indecomposable is compatible with every summand."""
    return not any(
        x not in tilting and all(not intertwines(x, t) for t in tilting)
        for x in enumerate_indecs(tilting.params)
    )


def find_mutations(tilting: ClusterTilting, u: Indec, params: ModelParams) -> list:
    if u not in tilting:
        raise NotASummand(u)
    rest = [t for t in tilting if t != u]
    return [
        x
        for x in enumerate_indecs(params)
        if x not in tilting and all(not intertwines(x, t) for t in rest)
    ]


@dataclass(frozen=True)
class ExchangeReport:
    u: Indec
    u_star: Optional[Indec] = None
    is_mutable: bool = False
    is_exchange_pair: bool = False
    angle_forward: Optional[Angle] = None
    angle_backward: Optional[Angle] = None
    mutations: tuple = field(default=())

    def to_json(self) -> dict:
        return {
            "u": list(self.u),
            "u_star": list(self.u_star) if self.u_star is not None else None,
            "is_mutable": self.is_mutable,
            "is_exchange_pair": self.is_exchange_pair,
            "mutations": [list(x) for x in self.mutations],
            "angle_forward": self.angle_forward.to_json() if self.angle_forward else None,
            "angle_backward": self.angle_backward.to_json() if self.angle_backward else None,
        }


def _exchange_angles(tilting, u, u_star, params):
    rest = set(tilting) - {u}
    # u* -> e_d -> ... -> e_1 -> u -> Sigma^d u*
    forward = angle_between(u_star, u, params)
    # u -> f_d -> ... -> f_1 -> u* -> Sigma^d u
    backward = angle_between(u, u_star, params)
    ok = all(s in rest for s in forward.middle()) and all(s in rest for s in backward.middle())
    return forward, backward, ok


def exchange_report(tilting: ClusterTilting, u: Indec, params: ModelParams) -> ExchangeReport:
    mutations = tuple(find_mutations(tilting, u, params))
    if not mutations:
        return ExchangeReport(u=u)
    fallback = None
    for u_star in mutations:
        ext_ok = (
            hom_dim(u, shift(u_star, params, 1), params) == 1
            and hom_dim(u_star, shift(u, params, 1), params) == 1
        )
        if not intertwines(u, u_star):
            continue
        forward, backward, shape_ok = _exchange_angles(tilting, u, u_star, params)
        report = ExchangeReport(
            u=u,
            u_star=u_star,
            is_mutable=True,
            is_exchange_pair=ext_ok and shape_ok,
            angle_forward=forward,
            angle_backward=backward,
            mutations=mutations,
        )
        if report.is_exchange_pair:
            return report
        fallback = fallback or report
    if fallback is not None:
        return fallback
    return ExchangeReport(u=u, u_star=mutations[0], is_mutable=True, mutations=mutations)


__all__ = [
    "ClusterTilting",
    "ExchangeReport",
    "containing_vertex",
    "enumerate_tiltings",
    "exchange_report",
    "find_mutations",
    "is_maximal",
    "parse_tilting",
    "validate_tilting",
]
