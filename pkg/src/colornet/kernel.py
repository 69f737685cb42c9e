"""Backend selection for the connectivity kernel.

The compiled extension is used when it was built; otherwise, or when the
environment variable ``COLORNET_PURE_PYTHON`` is set to a non-empty value, the
pure-Python implementation is used.  Both expose the same ``first_cut``.
"""

from __future__ import annotations

import os
from array import array
from typing import Sequence

from colornet import _pykernel

BACKEND = "python"
_impl = _pykernel.first_cut

if not os.environ.get("COLORNET_PURE_PYTHON"):
    try:
        from colornet import _ckernel
    except ImportError:  # extension not built
        pass
    else:
        BACKEND = "cython"
        _impl = _ckernel.first_cut


def pack_edges(
    us: Sequence[int], vs: Sequence[int], cs: Sequence[int]
) -> tuple[array, array, array]:
    return array("i", us), array("i", vs), array("i", cs)


def pack_masks(masks: Sequence[int]) -> array:
    return array("Q", masks)


def first_cut(n, us, vs, cs, masks, a: int = -1, b: int = -1) -> int:
    """Dispatch to the active backend; arrays come from the ``pack_*`` helpers."""
    return _impl(n, us, vs, cs, masks, a, b)
