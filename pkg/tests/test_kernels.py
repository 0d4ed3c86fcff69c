from __future__ import annotations

import itertools

import pytest

from tropdual import _pykernels as py
from tropdual.model import ModelParams, enumerate_indecs

try:
    from tropdual import _ckernels as cy
except ImportError:  # extension not built
    cy = None

needs_ext = pytest.mark.skipif(cy is None, reason="compiled extension not built")
POINTS = [(2, 1), (3, 2), (2, 3), (3, 3)]


def test_selected_backend_is_known():
    from tropdual import kernels

    assert kernels.BACKEND in ("cython", "python")


@needs_ext
def test_backend_flags():
    assert cy.BACKEND == "cython"
    assert py.BACKEND == "python"


@needs_ext
@pytest.mark.parametrize("n,d", POINTS)
def test_pairwise_kernels_agree(n, d):
    params = ModelParams(n, d)
    m = params.m
    objects = enumerate_indecs(params)
    for x, y in itertools.product(objects, repeat=2):
        assert cy.intertwines(x, y) == py.intertwines(x, y)
        assert cy.hom_dim(x, y, m) == py.hom_dim(x, y, m)
        assert cy.hom_pairing(x, y, m) == py.hom_pairing(x, y, m)
    for x in objects:
        for k in range(-m, m + 1):
            assert cy.shift(x, k, m) == py.shift(x, k, m)


@needs_ext
@pytest.mark.parametrize("n,d", [(2, 2), (2, 3)])
def test_factors_through_agrees(n, d):
    params = ModelParams(n, d)
    objects = enumerate_indecs(params)
    for x, y, z in itertools.product(objects, repeat=3):
        assert cy.factors_through(x, y, z, params.m) == py.factors_through(x, y, z, params.m)


@needs_ext
@pytest.mark.parametrize("n,d", POINTS)
def test_cliques_agree(n, d):
    params = ModelParams(n, d)
    objects = enumerate_indecs(params)
    cm = cy.compat_matrix(objects)
    assert cm == py.compat_matrix(objects)
    size = params.tilting_size
    assert cy.cliques(cm, size, -1) == py.cliques(cm, size, -1)
    assert cy.cliques(cm, size, 3) == py.cliques(cm, size, 3)


@needs_ext
def test_cyclic_between_agrees():
    for m in (4, 7):
        for a, b, c in itertools.product(range(1, m + 1), repeat=3):
            assert cy.cyclic_between(a, b, c, m) == py.cyclic_between(a, b, c, m)


def test_pure_python_fallback_selected_by_env():
    import os
    import subprocess
    import sys

    env = dict(os.environ, TROPDUAL_PURE_PYTHON="1")
    code = (
        "from tropdual import BACKEND, ModelParams, containing_vertex, index_of\n"
        "p = ModelParams(3, 3)\n"
        "v = index_of((4, 6, 8, 10), containing_vertex(p, 3), p)\n"
        "print(BACKEND, v.as_list())\n"
    )
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True,
                         text=True, check=True).stdout.split(maxsplit=1)
    assert out[0] == "python"
    assert out[1].strip() == "[0, 0, 0, 0, 0, 0, -1, 1, -1, 1]"
