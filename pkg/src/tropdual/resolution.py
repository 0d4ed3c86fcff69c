"""Index through a minimal projective resolution over End(T).

``Hom(T, X)`` is a right module over ``End(T)``.  Every Hom space of the
model is at most one-dimensional and composition is governed by
:func:`tropdual.model.factors_through`, so the module and its syzygies are
finite-dimensional linear algebra over the rationals.  For an
indecomposable ``X`` outside ``Sigma^d T`` the minimal angle
``T_d -> ... -> T_0 -> X`` maps onto the first ``d + 1`` terms of the
minimal projective resolution of ``Hom(T, X)``, so

    Ind_T(X) = sum_i (-1)^i [P_i].

The two remaining cases are ``X in T`` (unit vector) and ``X = Sigma^d t``
(``(-1)^d [t]``, from ``t -> 0 -> ... -> 0 -> Sigma^d t``).
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NoResolution
from .linalg import nullspace, row_echelon
from .model import Indec, ModelParams, _factors, _hom, shift


class _Module:
    """Submodule of a sum of Hom functors ``Hom(-, a_j)`` restricted to T.

    ``ambient`` lists the objects a_j; at a vertex v the ambient space has
    basis ``{f_(v, a_j) : Hom(v, a_j) != 0}`` and ``spaces[v]`` is a list of
    vectors in that basis spanning the submodule.
    """

    def __init__(self, summands, ambient, spaces, m):
        self.summands = summands
        self.ambient = ambient
        self.spaces = spaces
        self.m = m
        self._coords = {}

    def coords(self, v):
        if v not in self._coords:
            self._coords[v] = [j for j, a in enumerate(self.ambient) if _hom(v, a, self.m)]
        return self._coords[v]

    def act(self, vec, v, s):
        """Precompose ``vec`` (at v) with the map ``s -> v``."""
        m = self.m
        target = self.coords(s)
        pos = {j: i for i, j in enumerate(target)}
        out = [Fraction(0)] * len(target)
        for coef, j in zip(vec, self.coords(v)):
            if coef and j in pos and _factors(s, self.ambient[j], v, m) == 1:
                out[pos[j]] += coef
        return out

    def top(self):
        """Generators ``(vertex, vector)`` spanning a complement of the radical."""
        gens = []
        m = self.m
        for s in self.summands:
            if not self.spaces[s]:
                continue
            radical = []
            for v in self.summands:
                if v != s and _hom(s, v, m):
                    radical.extend(self.act(vec, v, s) for vec in self.spaces[v])
            span = row_echelon(radical)
            size = len(span)
            for vec in self.spaces[s]:
                grown = row_echelon(span + [vec])
                if len(grown) > size:
                    span, size = grown, len(grown)
                    gens.append((s, vec))
        return gens

    def syzygy(self, gens):
        """Kernel of the projective cover defined by ``gens``."""
        m = self.m
        cover = [g for g, _ in gens]
        spaces = {}
        for v in self.summands:
            cols = [j for j, g in enumerate(cover) if _hom(v, g, m)]
            if not cols:
                spaces[v] = []
                continue
            images = [self.act(gens[j][1], gens[j][0], v) for j in cols]
            rows = len(self.coords(v))
            matrix = [[images[c][r] for c in range(len(cols))] for r in range(rows)]
            spaces[v] = nullspace(matrix, len(cols))
        return _Module(self.summands, cover, spaces, m)


def projective_resolution(x: Indec, summands, params: ModelParams, length: int) -> list:
    """Multiplicities ``{t: count}`` of the first ``length + 1`` projectives."""
    m = params.m
    spaces = {v: [[Fraction(1)]] if _hom(v, x, m) else [] for v in summands}
    module = _Module(tuple(summands), [x], spaces, m)
    terms = []
    for step in range(length + 1):
        gens = module.top()
        counts: dict = {}
        for g, _ in gens:
            counts[g] = counts.get(g, 0) + 1
        terms.append(counts)
        if step == length or not gens:
            break
        module = module.syzygy(gens)
    while len(terms) < length + 1:
        terms.append({})
    return terms


def resolution_index(x: Indec, summands, params: ModelParams) -> dict:
    """Index of an indecomposable as ``{summand: coefficient}``."""
    d = params.d
    members = set(summands)
    if x in members:
        return {x: 1}
    t = shift(x, params, -1)
    if t in members:
        return {t: -1 if d % 2 else 1}
    terms = projective_resolution(x, summands, params, d)
    if not terms[0]:
        raise NoResolution(f"Hom(T, {list(x)}) vanishes but the object is not in Sigma^d T")
    out: dict = {}
    for i, counts in enumerate(terms):
        sign = -1 if i % 2 else 1
        for s, c in counts.items():
            out[s] = out.get(s, 0) + sign * c
    return {s: c for s, c in out.items() if c}
