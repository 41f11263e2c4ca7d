"""Infinity domain - the spherical building of complete flags over Q(t)."""

from twincity.infinity.flags import (
    adjacent_flag,
    apply,
    check_flag,
    decode_flag,
    dimension_array,
    flag_from_matrix,
    is_opposite_flags,
    is_transverse,
    relative_position,
    same_flag,
    standard_flag,
)
from twincity.infinity.linalg import rank
from twincity.infinity.models import Flag, SphericalPosition
from twincity.infinity.sectors import (
    boundary_frames,
    boundary_pair_check,
    negative_frame,
    ray_direction,
    sector_directions,
    sector_ray,
    sector_to_flag,
)

__all__ = [
    "Flag",
    "SphericalPosition",
    "rank",
    "check_flag",
    "standard_flag",
    "flag_from_matrix",
    "apply",
    "dimension_array",
    "relative_position",
    "same_flag",
    "is_opposite_flags",
    "is_transverse",
    "adjacent_flag",
    "decode_flag",
    "sector_to_flag",
    "sector_directions",
    "boundary_frames",
    "boundary_pair_check",
    "negative_frame",
    "sector_ray",
    "ray_direction",
]
