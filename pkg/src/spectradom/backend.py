"""Kernel backend selection.

The hot loops (canonical labelling, census sieve, domination search,
Jacobi sweeps) exist twice: a compiled extension module and a pure
python fallback with identical semantics.  Selection happens once at
import, controlled by the SPECTRADOM_BACKEND environment variable:

    auto (default)  compiled if importable, else pure python
    c               compiled, ImportError if the extension is missing
    py              pure python, unconditionally
"""

from __future__ import annotations

import os

_choice = os.environ.get("SPECTRADOM_BACKEND", "auto").strip().lower()

if _choice in ("", "auto"):
    try:
        from . import _ckernels as _kernels
    except ImportError:
        from . import _pykernels as _kernels
elif _choice in ("c", "compiled"):
    from . import _ckernels as _kernels
elif _choice in ("py", "python", "pure"):
    from . import _pykernels as _kernels
else:
    raise RuntimeError(
        f"SPECTRADOM_BACKEND={_choice!r} not understood; use auto, c, or py"
    )

BACKEND_NAME: str = _kernels.BACKEND_NAME

canon_mask = _kernels.canon_mask
sieve_canonical_masks = _kernels.sieve_canonical_masks
solve_domination = _kernels.solve_domination
jacobi_inplace = _kernels.jacobi_inplace

OFF_DIAGONAL_TOL: float = _kernels.OFF_DIAGONAL_TOL
MAX_SWEEPS: int = _kernels.MAX_SWEEPS
