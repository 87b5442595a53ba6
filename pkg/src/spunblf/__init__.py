"""Explicit broken Lefschetz fibrations of S^4 with spun and twist-spun torus knot fibers."""

__version__ = "0.1.0"

from .surface import TorusKnotParams, build_seifert_surface  # noqa: E402,F401
