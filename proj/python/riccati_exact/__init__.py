"""Exact solver for polynomial and trigonometric Riccati differential equations.

All algebra is exact over the rationals; values cross the boundary as
"p/q" strings, coefficient lists, or {a0, cos, sin} dicts.
"""

try:
    from ._core import *  # noqa: F401,F403  (installed package layout)
    from ._core import __version__  # noqa: F401
except ImportError:  # pragma: no cover - build-tree layout used by ctest
    from _core import *  # noqa: F401,F403
    from _core import __version__  # noqa: F401

__all__ = [
    "solve_poly",
    "solve_trig",
    "verify_poly",
    "verify_trig",
    "gen_extremal_poly",
    "gen_extremal_trig",
    "cross_ratio",
    "parse_poly",
    "poly_to_str",
    "parse_trig",
    "trig_to_str",
    "phi_forward",
    "phi_inverse",
    "sample_csv",
    "fuzz",
]
