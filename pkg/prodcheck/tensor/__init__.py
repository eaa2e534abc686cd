from .rational_tensor import (
    RationalTensor, first_difference, fraction_array, t_add, t_braid, t_compose,
    t_identity, t_identity_multi, t_scalar, t_scale, t_swap, t_tensor, t_zero, zeros,
)

__all__ = [
    "RationalTensor", "first_difference", "fraction_array", "t_add", "t_braid", "t_compose",
    "t_identity", "t_identity_multi", "t_scalar", "t_scale", "t_swap", "t_tensor",
    "t_zero", "zeros",
]
