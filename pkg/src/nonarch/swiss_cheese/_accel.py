"""Pick the compiled collision kernel when it is importable.

Set ``NONARCH_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import array
import os

from . import _kernels_py

BACKEND = "python"
collision_candidates = _kernels_py.collision_candidates

if os.environ.get("NONARCH_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels  # type: ignore[attr-defined]
    except ImportError:  # pragma: no cover - depends on the build
        pass
    else:
        BACKEND = "cython"
        _compiled = _kernels.collision_candidates

        def collision_candidates(xs, ys, rs, ox, oy, oR, slack):  # noqa: F811
            return _compiled(array.array("d", xs), array.array("d", ys),
                             array.array("d", rs), ox, oy, oR, slack)
