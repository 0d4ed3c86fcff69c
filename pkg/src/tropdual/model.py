"""Polygon model of the (d+2)-angulated cluster category of type A_n.

Indecomposables are (d+1)-subsets of the vertices ``1..m`` of an m-gon,
``m = n + 2d + 1``, with no two cyclically neighbouring vertices.  They are
stored as ascending tuples of ints, so equality is tuple equality.

The suspension ``Sigma^d`` turns every vertex one step anticlockwise, which
is ``shift(x, params, 1)``.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from . import kernels
from .errors import InvalidObject, InvalidParams, PreconditionError

Indec = tuple  # ascending tuple[int, ...]


@dataclass(frozen=True, order=True)
class ModelParams:
    n: int
    d: int

    def __post_init__(self):
        for name in ("n", "d"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise InvalidParams(f"{name} must be a positive integer, got {value!r}")

    @property
    def m(self) -> int:
        """Number of polygon vertices."""
        return self.n + 2 * self.d + 1

    @property
    def tilting_size(self) -> int:
        from math import comb

        return comb(self.n + self.d - 1, self.d)

    def as_dict(self) -> dict:
        return {"n": self.n, "d": self.d}


def is_valid_vertices(vertices: Sequence[int], params: ModelParams) -> bool:
    m = params.m
    if len(vertices) != params.d + 1:
        return False
    if any(not 1 <= v <= m for v in vertices):
        return False
    vs = sorted(vertices)
    if any(b - a < 2 for a, b in zip(vs, vs[1:])):
        return False
    return vs[0] + m - vs[-1] >= 2


def make_indec(vertices: Iterable[int], params: ModelParams) -> Indec:
    """Canonicalize and validate a vertex collection."""
    try:
        vs = tuple(sorted(int(v) for v in vertices))
    except (TypeError, ValueError) as exc:
        raise InvalidObject(f"vertices must be integers: {exc}") from None
    if len(vs) != params.d + 1:
        raise InvalidObject(f"expected {params.d + 1} vertices, got {len(vs)}: {list(vs)}")
    if len(set(vs)) != len(vs):
        raise InvalidObject(f"repeated vertex in {list(vs)}")
    if any(not 1 <= v <= params.m for v in vs):
        raise InvalidObject(f"vertices of {list(vs)} must lie in 1..{params.m}")
    if not is_valid_vertices(vs, params):
        raise InvalidObject(f"{list(vs)} contains neighbouring vertices of the {params.m}-gon")
    return vs


def parse_indec(text: str, params: ModelParams) -> Indec:
    """Parse the text form ``"3,5,8,10"`` (a JSON array is accepted too)."""
    text = text.strip()
    if text.startswith("["):
        try:
            values = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InvalidObject(f"malformed object {text!r}: {exc}") from None
    else:
        values = [part for part in text.replace(" ", "").split(",") if part]
    return make_indec(values, params)


def format_indec(x: Indec) -> str:
    return ",".join(str(v) for v in x)


@lru_cache(maxsize=None)
def _enumerate(n: int, d: int) -> tuple:
    params = ModelParams(n, d)
    m = params.m
    return tuple(
        s
        for s in itertools.combinations(range(1, m + 1), d + 1)
        if all(b - a >= 2 for a, b in zip(s, s[1:])) and s[0] + m - s[-1] >= 2
    )


def enumerate_indecs(params: ModelParams) -> list:
    """All indecomposables in lexicographic order."""
    return list(_enumerate(params.n, params.d))


def shift(x: Indec, params: ModelParams, k: int = 1) -> Indec:
    """Move every vertex ``k`` steps anticlockwise; ``k = 1`` is ``Sigma^d``."""
    return kernels.shift(x, k, params.m)


def intertwines(x: Indec, y: Indec) -> bool:
    return kernels.intertwines(x, y)


def intertwining_witness(x: Indec, y: Indec):
    """Pairs ``(x_i, y_i)`` with ``y_i`` strictly between ``x_i`` and ``x_{i+1}``.

    Returns None when x and y do not intertwine.
    """
    if not kernels.intertwines(x, y):
        return None
    k = len(x)
    out = []
    for i in range(k):
        nxt = x[(i + 1) % k]
        if i + 1 < k:
            yi = next(v for v in y if x[i] < v < nxt)
        else:
            yi = next((v for v in y if v > x[i]), y[0])
        out.append((x[i], yi))
    return out


@lru_cache(maxsize=1 << 20)
def _hom(x: Indec, y: Indec, m: int) -> int:
    return kernels.hom_dim(x, y, m)


def hom_dim(x: Indec, y: Indec, params: ModelParams) -> int:
    """Dimension (0 or 1) of Hom(x, y): x and Sigma^{-d} y intertwine."""
    return _hom(x, y, params.m)


def hom_dim_chain(x: Indec, y: Indec, params: ModelParams) -> int:
    """Hom dimension from the inequality chain ``x_i <= y_i <= x_{i+1}^{--}``."""
    return int(kernels.hom_pairing(x, y, params.m) is not None)


@lru_cache(maxsize=1 << 20)
def _factors(x: Indec, y: Indec, z: Indec, m: int) -> int:
    return kernels.factors_through(x, y, z, m)


def factors_through(x: Indec, y: Indec, z: Indec, params: ModelParams) -> bool:
    """Whether the nonzero map x -> y factors through z.

    This is also the composition rule of the model: nonzero maps x -> z and
    z -> y compose to a nonzero map exactly when this holds.
    """
    result = _factors(x, y, z, params.m)
    if result < 0:
        raise PreconditionError(
            f"Hom({format_indec(x)}; {format_indec(y)}) is zero, nothing to factor"
        )
    return bool(result)


def quotient_hom_dim(x: Indec, y: Indec, denom: Iterable[Indec], params: ModelParams) -> int:
    """Hom(x, y) in the quotient by the ideal of maps factoring through ``denom``.

    Hom spaces are at most one-dimensional, so the generator dies in the
    quotient iff it factors through a single member of ``denom``.
    """
    if not hom_dim(x, y, params):
        return 0
    m = params.m
    for z in denom:
        if _factors(x, y, z, m) == 1:
            return 0
    return 1
