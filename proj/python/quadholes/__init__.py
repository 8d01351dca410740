"""Compatible 4-holes in planar point sets."""

from ._core import (
    CapExceededError,
    ContradictionError,
    CoordinateRangeError,
    Error,
    ParseError,
    PreconditionError,
    generate,
    good_split,
    holes,
    lower_bound,
    max_compatible,
    parse_points,
    render_svg,
    serialize_points,
    signature,
    solve,
    solve_small,
    verify,
)

__all__ = [
    "CapExceededError",
    "ContradictionError",
    "CoordinateRangeError",
    "Error",
    "ParseError",
    "PreconditionError",
    "generate",
    "good_split",
    "holes",
    "lower_bound",
    "max_compatible",
    "parse_points",
    "render_svg",
    "serialize_points",
    "signature",
    "solve",
    "solve_small",
    "verify",
]
