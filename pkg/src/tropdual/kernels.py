"""Backend selection for the combinatorial kernels.

The compiled extension is used when it was built; otherwise the pure-Python
module is loaded.  Setting ``TROPDUAL_PURE_PYTHON=1`` forces the fallback.
"""

from __future__ import annotations

import os

if os.environ.get("TROPDUAL_PURE_PYTHON"):
    from . import _pykernels as _impl
else:
    try:
        from . import _ckernels as _impl
    except ImportError:  # extension not built
        from . import _pykernels as _impl

BACKEND = _impl.BACKEND
cyclic_between = _impl.cyclic_between
shift = _impl.shift
intertwines = _impl.intertwines
hom_dim = _impl.hom_dim
hom_pairing = _impl.hom_pairing
factors_through = _impl.factors_through
compat_matrix = _impl.compat_matrix
cliques = _impl.cliques

__all__ = [
    "BACKEND",
    "cyclic_between",
    "shift",
    "intertwines",
    "hom_dim",
    "hom_pairing",
    "factors_through",
    "compat_matrix",
    "cliques",
]
