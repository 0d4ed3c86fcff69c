"""Explicit (d+2)-angles between intertwining indecomposables.

For intertwining ``a`` and ``b`` label them ``a_0 < b_0 < a_1 < ... < a_d <
b_d`` cyclically.  Level ``k`` of the angle is the direct sum of every
(d+1)-set that takes ``b_i`` at exactly ``k`` positions and ``a_i`` at the
others; sets with neighbouring vertices are zero objects and are dropped.
This gives

    a = L_0 -> L_1 -> ... -> L_d -> b -> Sigma^d a.

When the only surviving sets are the "staircase" ones
``{a_0..a_j} | {b_{j+1}..b_d}`` every level is indecomposable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import PreconditionError
from .model import Indec, ModelParams, format_indec, intertwining_witness, is_valid_vertices


@dataclass(frozen=True)
class Angle:
    """``first = terms[0][0] -> terms[1] -> ... -> terms[d] -> target``.

    ``terms[k]`` is a tuple of indecomposable summands (empty tuple for the
    zero object).  In the numbering ``t_d -> ... -> t_0 -> X`` used for
    indices, ``t_i = terms[d - i]``.
    """

    first: Indec
    target: Indec
    terms: tuple
    labelling: tuple

    @property
    def d(self) -> int:
        return len(self.terms) - 1

    def middle(self) -> tuple:
        """Summands strictly between ``first`` and ``target``."""
        return tuple(s for level in self.terms[1:] for s in level)

    def alternating_sum(self) -> dict:
        """``sum_i (-1)^i [t_i]`` over the terms before the target."""
        d = self.d
        out: dict = {}
        for k, level in enumerate(self.terms):
            sign = -1 if (d - k) % 2 else 1
            for s in level:
                out[s] = out.get(s, 0) + sign
        return {s: c for s, c in out.items() if c}

    def is_indecomposable_staircase(self) -> bool:
        return all(len(level) == 1 for level in self.terms)

    def to_json(self) -> dict:
        return {
            "first": list(self.first),
            "target": list(self.target),
            "terms": [[list(s) for s in level] for level in self.terms],
            "labelling": [list(p) for p in self.labelling],
        }

    def __str__(self) -> str:
        def show(level):
            if not level:
                return "0"
            return " + ".join(f"({format_indec(s)})" for s in level)

        chain = " -> ".join(show(level) for level in self.terms)
        return f"{chain} -> ({format_indec(self.target)})"


def angle_between(a: Indec, b: Indec, params: ModelParams) -> Angle:
    """The angle ``a -> ... -> b -> Sigma^d a`` for intertwining a, b."""
    pairs = intertwining_witness(a, b)
    if pairs is None:
        raise PreconditionError(f"({format_indec(a)}) and ({format_indec(b)}) do not intertwine")
    d = params.d
    levels: list = [[] for _ in range(d + 2)]
    for choice in itertools.product((0, 1), repeat=d + 1):
        s = tuple(sorted(p[c] for p, c in zip(pairs, choice)))
        if is_valid_vertices(s, params):
            levels[sum(choice)].append(s)
    terms = tuple(tuple(sorted(level)) for level in levels[: d + 1])
    return Angle(first=a, target=b, terms=terms, labelling=tuple(pairs))
