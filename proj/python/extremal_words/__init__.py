"""Extremal pattern-avoiding word laboratory.

Thin wrapper over the C++ core: words are lowercase strings (or
comma-separated integer tokens for large alphabets), patterns are strings
of uppercase variables such as ``XYX`` or ``X.Y1.X.Y2.X``.
"""

from ._core import (
    ResourceLimitError,
    almost_squares,
    contains,
    contains_square,
    enumerate_extremal_bruteforce,
    family_pattern,
    generate_family,
    is_abelian_square_free,
    is_extremal,
    is_extremal_abelian_square_free,
    is_extremal_square_free,
    is_square_free,
    is_unavoidable,
    search_shortest,
    sweep_appendix,
    verify_claim,
    zimin,
)
from ._core import count_family_str as _count_family_str

__version__ = "0.1.0"


def count_family(k: int, t: int) -> int:
    """Exact number of extremal X Y_1 X ... X Y_t X-avoiding words over k letters."""
    return int(_count_family_str(k, t))


__all__ = [
    "ResourceLimitError",
    "almost_squares",
    "contains",
    "contains_square",
    "count_family",
    "enumerate_extremal_bruteforce",
    "family_pattern",
    "generate_family",
    "is_abelian_square_free",
    "is_extremal",
    "is_extremal_abelian_square_free",
    "is_extremal_square_free",
    "is_square_free",
    "is_unavoidable",
    "search_shortest",
    "sweep_appendix",
    "verify_claim",
    "zimin",
]
