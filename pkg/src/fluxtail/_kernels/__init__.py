"""Kernel backend selection.

The compiled extension is preferred when present; ``FLUXTAIL_PURE=1`` (or
any value other than ``0``/empty) forces the pure-Python mirror.  Both
backends expose the same functions with identical semantics.
"""

import os

if os.environ.get("FLUXTAIL_PURE", "") not in ("", "0"):
    from . import pure as impl
else:
    try:
        from . import _ckernels as impl  # type: ignore[no-redef]
    except ImportError:
        from . import pure as impl  # type: ignore[no-redef]

BACKEND = impl.BACKEND_NAME

count_connected_scalar = impl.count_connected_scalar
count_matchings_no_selfloop = impl.count_matchings_no_selfloop
count_connected_flux_strict = impl.count_connected_flux_strict
count_connected_flux_chain = impl.count_connected_flux_chain
partial_wave_sum = impl.partial_wave_sum


def backend_name() -> str:
    """Name of the kernel backend in use: ``"compiled"`` or ``"pure"``."""
    return BACKEND
