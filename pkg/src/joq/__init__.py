"""Exact arithmetic for unrestricted modified third-order Jacobsthal quaternions."""

__version__ = "0.1.0"

from .core import (  # noqa: E402
    OffsetTriple,
    basis,
    binet_qk,
    cassini_sides,
    gaussian,
    norm_closed,
    norm_direct,
    qk,
    qk_negative_closed,
    qm,
    sum_closed,
    sum_direct,
)
from .quaternion import Quaternion  # noqa: E402
from .scalars import CycloScalar, omega_pow, pow2  # noqa: E402
from .sequences import j3_val, k_val, m_val, x_val  # noqa: E402

__all__ = [
    "CycloScalar",
    "OffsetTriple",
    "Quaternion",
    "basis",
    "binet_qk",
    "cassini_sides",
    "gaussian",
    "j3_val",
    "k_val",
    "m_val",
    "norm_closed",
    "norm_direct",
    "omega_pow",
    "pow2",
    "qk",
    "qk_negative_closed",
    "qm",
    "sum_closed",
    "sum_direct",
    "x_val",
]
