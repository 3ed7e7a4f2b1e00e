"""Kernel selection: the compiled extension when importable, else pure Python."""

from __future__ import annotations

from types import ModuleType

from . import _pure

try:
    from . import _kernel as _compiled
except ImportError:  # extension not built
    _compiled = None

_BACKENDS: dict[str, ModuleType | None] = {"compiled": _compiled, "python": _pure}
_active: ModuleType = _compiled if _compiled is not None else _pure


def available() -> list[str]:
    return [name for name, mod in _BACKENDS.items() if mod is not None]


def current() -> str:
    return "compiled" if _active is _compiled and _compiled is not None else "python"


def set_backend(name: str) -> None:
    global _active
    mod = _BACKENDS.get(name)
    if mod is None:
        raise ValueError(f"backend {name!r} is not available (have {available()})")
    _active = mod


def kernel() -> ModuleType:
    return _active


def get(name: str) -> ModuleType:
    mod = _BACKENDS.get(name)
    if mod is None:
        raise ValueError(f"backend {name!r} is not available")
    return mod
