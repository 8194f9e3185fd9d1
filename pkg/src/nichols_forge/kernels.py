"""Select the compiled kernels when available, else the pure-Python ones.

Set ``NICHOLS_FORGE_PURE=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("NICHOLS_FORGE_PURE"):
    impl = _kernels_py
else:
    try:
        from . import _kernels as impl  # type: ignore[attr-defined]
    except ImportError:
        impl = _kernels_py

IMPLEMENTATION = impl.IMPLEMENTATION

nf_word = impl.nf_word
reduction_table = impl.reduction_table
overlap_spoly = impl.overlap_spoly
echelon = impl.echelon
degree_table = impl.degree_table
delta_word = impl.delta_word
delta = impl.delta


def available() -> dict:
    """Implementations importable in this environment, by name."""
    out = {"python": _kernels_py}
    try:
        from . import _kernels  # type: ignore[attr-defined]
        out["cython"] = _kernels
    except ImportError:
        pass
    return out
