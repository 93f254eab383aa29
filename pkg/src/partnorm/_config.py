"""Runtime knobs read from the environment.

Every value is read at call time so tests (and the CLI) can override
them with ``monkeypatch.setenv`` or a plain ``export``.

=============================  ==========  =====================================
variable                       default     meaning
=============================  ==========  =====================================
PARTNORM_BACKEND               numba       ``numba`` or ``numpy`` float kernels
PARTNORM_ENUM_CEILING          1000000     max p(n) for enumeration-backed sums
PARTNORM_MAX_SERIES_ORDER      5000        max truncation order of a Series
PARTNORM_PF_CEILING            25          max n for the partial-fraction check
PARTNORM_MAX_TERMS             1000000000  max Euler-product truncation point
PARTNORM_VERIFY_CEILING        40          max n for extremal oracle checks
=============================  ==========  =====================================
"""

from __future__ import annotations

import os

_DEFAULTS = {
    "PARTNORM_ENUM_CEILING": 1_000_000,
    "PARTNORM_MAX_SERIES_ORDER": 5000,
    "PARTNORM_PF_CEILING": 25,
    "PARTNORM_MAX_TERMS": 1_000_000_000,
    "PARTNORM_VERIFY_CEILING": 40,
}


def int_setting(name: str) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return _DEFAULTS[name]
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from None
    if value < 0:
        raise ValueError(f"{name} must be nonnegative, got {value}")
    return value


def enum_ceiling() -> int:
    return int_setting("PARTNORM_ENUM_CEILING")


def max_series_order() -> int:
    return int_setting("PARTNORM_MAX_SERIES_ORDER")


def pf_ceiling() -> int:
    return int_setting("PARTNORM_PF_CEILING")


def max_terms() -> int:
    return int_setting("PARTNORM_MAX_TERMS")


def verify_ceiling() -> int:
    return int_setting("PARTNORM_VERIFY_CEILING")


def backend() -> str:
    """Name of the float-kernel backend in effect (``numba`` or ``numpy``)."""
    raw = os.environ.get("PARTNORM_BACKEND", "").strip().lower()
    if raw in ("", "numba"):
        from . import _kernels

        return "numba" if _kernels.HAVE_NUMBA else "numpy"
    if raw == "numpy":
        return "numpy"
    raise ValueError(f"PARTNORM_BACKEND must be 'numba' or 'numpy', got {raw!r}")
