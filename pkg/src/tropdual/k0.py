"""Split Grothendieck groups, indices, g-vectors, c-vectors and duality.

A :class:`K0Vector` is an integer combination of the summands of one cluster
tilting object.  ``index_of`` resolves an indecomposable by an explicit angle
built from an intertwining summand when one exists, and otherwise reads the
index off a projective resolution (see :mod:`tropdual.resolution`).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Mapping

from . import linalg
from .angles import Angle, angle_between
from .errors import NoResolution, NotASummand, PreconditionError
from .model import Indec, ModelParams, format_indec, intertwines, shift
from .resolution import resolution_index
from .tilting import ClusterTilting


class K0Vector:
    """Element of ``K_0^split(add T)`` with zero coefficients dropped."""

    __slots__ = ("basis", "coeffs")

    def __init__(self, basis: ClusterTilting, coeffs: Mapping[Indec, int] | None = None):
        coeffs = dict(coeffs or {})
        for key in coeffs:
            if key not in basis:
                raise NotASummand(key)
        self.basis = basis
        self.coeffs = {k: int(v) for k, v in sorted(coeffs.items()) if v}

    @classmethod
    def unit(cls, basis: ClusterTilting, t: Indec) -> "K0Vector":
        return cls(basis, {t: 1})

    def __getitem__(self, t: Indec) -> int:
        return self.coeffs.get(t, 0)

    def _check(self, other: "K0Vector"):
        if not isinstance(other, K0Vector):
            return NotImplemented
        if other.basis != self.basis:
            raise ValueError("K0 vectors over different tilting objects")
        return None

    def __add__(self, other: "K0Vector") -> "K0Vector":
        bad = self._check(other)
        if bad is not None:
            return bad
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return K0Vector(self.basis, out)

    def __neg__(self) -> "K0Vector":
        return K0Vector(self.basis, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other: "K0Vector") -> "K0Vector":
        return self + (-other)

    def __mul__(self, scalar: int) -> "K0Vector":
        return K0Vector(self.basis, {k: scalar * v for k, v in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, K0Vector):
            return NotImplemented
        return self.basis == other.basis and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.basis, tuple(self.coeffs.items())))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def as_list(self) -> list:
        return [self[t] for t in self.basis]

    def to_json(self) -> dict:
        return {format_indec(k): v for k, v in self.coeffs.items()}

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, v in self.coeffs.items():
            sign = "-" if v < 0 else "+"
            mag = "" if abs(v) == 1 else f"{abs(v)}*"
            parts.append(f"{sign} {mag}[({format_indec(k)})]")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def staircase_candidates(x: Indec, tilting: ClusterTilting, params: ModelParams) -> Iterator[Angle]:
    """Angles ``t -> ... -> x`` whose terms all lie in the tilting object.

    Summands t intertwining x are tried in lexicographic order.
    """
    if x in tilting:
        raise PreconditionError(f"({format_indec(x)}) is a summand; its index is a unit vector")
    for t in tilting:
        if not intertwines(t, x):
            continue
        angle = angle_between(t, x, params)
        if all(s in tilting for s in angle.middle()):
            yield angle


def staircase(x: Indec, tilting: ClusterTilting, params: ModelParams) -> Angle:
    for angle in staircase_candidates(x, tilting, params):
        return angle
    raise NoResolution(
        f"no summand of the tilting object gives a one-step angle onto ({format_indec(x)})"
    )


@lru_cache(maxsize=1 << 16)
def _index(x: Indec, tilting: ClusterTilting, method: str) -> tuple:
    params = tilting.params
    if x in tilting:
        return ((x, 1),)
    if method in ("auto", "staircase"):
        for angle in staircase_candidates(x, tilting, params):
            return tuple(sorted(angle.alternating_sum().items()))
        if method == "staircase":
            raise NoResolution(
                f"no summand of the tilting object gives a one-step angle onto ({format_indec(x)})"
            )
    return tuple(sorted(resolution_index(x, tilting.summands, params).items()))


INDEX_METHODS = ("auto", "staircase", "resolution")


def index_of(x: Indec, tilting: ClusterTilting, params: ModelParams, method: str = "auto") -> K0Vector:
    """Index of an indecomposable with respect to a cluster tilting object.

    ``method="staircase"`` only uses explicit angles from one summand and
    raises :class:`NoResolution` when none exists; ``"resolution"`` only uses
    the projective resolution; ``"auto"`` tries the former, then the latter.
    """
    if method not in INDEX_METHODS:
        raise ValueError(f"unknown index method {method!r}")
    if tilting.params != params:
        raise ValueError("tilting object belongs to different parameters")
    return K0Vector(tilting, dict(_index(x, tilting, method)))


def index_linear(combination: Mapping[Indec, int], tilting: ClusterTilting, params: ModelParams) -> K0Vector:
    """Additive extension of :func:`index_of` to integer combinations."""
    out: dict = {}
    for x, c in combination.items():
        if not c:
            continue
        for t, v in _index(x, tilting, "auto"):
            out[t] = out.get(t, 0) + c * v
    return K0Vector(tilting, out)


def g_vector(u: Indec, tilting_t: ClusterTilting, params: ModelParams) -> K0Vector:
    return index_of(u, tilting_t, params)


def g_matrix(tilting_t: ClusterTilting, tilting_u: ClusterTilting, params: ModelParams) -> list:
    """Rows are ``g_T(u)`` for u in U, columns follow T's basis order."""
    return [g_vector(u, tilting_t, params).as_list() for u in tilting_u]


class SignClass(enum.Enum):
    NON_NEGATIVE = "NonNegative"
    NON_POSITIVE = "NonPositive"
    MIXED = "Mixed"
    ZERO = "Zero"


@dataclass(frozen=True)
class CVector:
    u: Indec
    basis_u: ClusterTilting
    basis_t: ClusterTilting
    values: tuple  # ((t, value), ...) in T's basis order

    def __getitem__(self, t: Indec) -> int:
        return dict(self.values)[t]

    def as_list(self) -> list:
        return [v for _, v in self.values]

    def to_json(self) -> dict:
        return {
            "u": list(self.u),
            "values": {format_indec(t): v for t, v in self.values},
            "vector": self.as_list(),
            "classification": sign_coherence(self).value,
        }


def c_vector(u: Indec, tilting_u: ClusterTilting, tilting_t: ClusterTilting, params: ModelParams) -> CVector:
    """``c_T(u, U)(t) = (-1)^d * coefficient of [u] in Ind_U(Sigma^d t)``."""
    if u not in tilting_u:
        raise NotASummand(u)
    sign = -1 if params.d % 2 else 1
    values = tuple(
        (t, sign * dict(_index(shift(t, params, 1), tilting_u, "auto")).get(u, 0))
        for t in tilting_t
    )
    return CVector(u, tilting_u, tilting_t, values)


def c_matrix(tilting_t: ClusterTilting, tilting_u: ClusterTilting, params: ModelParams) -> list:
    """Rows are the c-vectors of the summands of U, columns follow T."""
    return [c_vector(u, tilting_u, tilting_t, params).as_list() for u in tilting_u]


def c_matrix_by_inversion(tilting_t: ClusterTilting, tilting_u: ClusterTilting, params: ModelParams) -> list:
    """Inverse transpose of the g-vector matrix (the dual basis)."""
    return linalg.transpose(linalg.inverse(g_matrix(tilting_t, tilting_u, params)))


def duality_forward(v: K0Vector, tilting_u: ClusterTilting, params: ModelParams) -> K0Vector:
    """``(-1)^d Ind_U(Sigma^d v)`` from ``K_0(add T)`` to ``K_0(add U)``."""
    shifted = {shift(t, params, 1): c for t, c in v.coeffs.items()}
    out = index_linear(shifted, tilting_u, params)
    return -out if params.d % 2 else out


def duality_backward(w: K0Vector, tilting_t: ClusterTilting, params: ModelParams) -> K0Vector:
    """``Ind_T`` restricted to ``K_0(add U)``."""
    return index_linear(w.coeffs, tilting_t, params)


def sign_coherence(cv: CVector) -> SignClass:
    values = cv.as_list() if isinstance(cv, CVector) else list(cv)
    if not any(values):
        return SignClass.ZERO
    if all(v >= 0 for v in values):
        return SignClass.NON_NEGATIVE
    if all(v <= 0 for v in values):
        return SignClass.NON_POSITIVE
    return SignClass.MIXED


def clear_caches() -> None:
    _index.cache_clear()
