"""Kernel backend selection.

The hot stepping loops (radial diffusion, frame transport) exist twice:
as a compiled Cython extension and as pure numpy/Python twins with
matching arithmetic. The compiled module is preferred when importable;
set FLUXTUBE_BACKEND=python or =compiled to force a choice.
"""

from __future__ import annotations

import os

from . import _kernels_py

try:
    from . import _kernels as _compiled
except ImportError:  # pragma: no cover - depends on build environment
    _compiled = None

_MODULES = {"python": _kernels_py}
if _compiled is not None:
    _MODULES["compiled"] = _compiled


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(_MODULES))


def default_backend() -> str:
    forced = os.environ.get("FLUXTUBE_BACKEND", "").strip().lower()
    if forced:
        if forced not in _MODULES:
            raise RuntimeError(
                f"FLUXTUBE_BACKEND={forced!r} not available; "
                f"choices: {', '.join(available_backends())}"
            )
        return forced
    return "compiled" if _compiled is not None else "python"


def get_kernels(name: str | None = None):
    """Kernel module for the named backend (default: preferred backend)."""
    if name is None:
        name = default_backend()
    try:
        return _MODULES[name]
    except KeyError:
        raise ValueError(
            f"unknown backend {name!r}; choices: {', '.join(available_backends())}"
        ) from None
