"""Exact computations in the polygon model of (d+2)-angulated cluster
categories of type A_n: indecomposables, cluster tilting objects, indices,
g- and c-vectors, and the duality between split Grothendieck groups."""

from .errors import (
    IntertwiningPair,
    InvalidObject,
    InvalidParams,
    ModelError,
    NoResolution,
    NotASummand,
    NotATilting,
    PreconditionError,
    WrongCount,
)
from .k0 import (
    CVector,
    K0Vector,
    SignClass,
    c_matrix,
    c_vector,
    duality_backward,
    duality_forward,
    g_matrix,
    g_vector,
    index_linear,
    index_of,
    sign_coherence,
    staircase,
)
from .kernels import BACKEND
from .model import (
    ModelParams,
    enumerate_indecs,
    factors_through,
    hom_dim,
    intertwines,
    make_indec,
    parse_indec,
    quotient_hom_dim,
    shift,
)
from .tilting import (
    ClusterTilting,
    ExchangeReport,
    containing_vertex,
    enumerate_tiltings,
    exchange_report,
    find_mutations,
    validate_tilting,
)

__version__ = "0.1.0"
