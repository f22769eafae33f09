"""Kernel backend selection.

The compiled extension is preferred when importable; set SBVP_BACKEND=python
to force the pure kernels or SBVP_BACKEND=compiled to require the extension.
"""

import os

_choice = os.environ.get("SBVP_BACKEND", "auto").strip().lower()

if _choice in ("auto", ""):
    try:
        from . import _kernels_c as kernels
    except ImportError:
        from . import _kernels_py as kernels
elif _choice in ("compiled", "c"):
    from . import _kernels_c as kernels
elif _choice in ("python", "py", "pure"):
    from . import _kernels_py as kernels
else:
    raise ImportError(
        f"SBVP_BACKEND={_choice!r} not recognized (use auto, compiled, or python)"
    )

backend_name: str = kernels.BACKEND
