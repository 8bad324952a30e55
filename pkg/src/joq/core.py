"""Unrestricted modified third-order Jacobsthal quaternions and closed forms.

``qk(n, t)`` is ``K_n + K_{n+a} I + K_{n+b} J + K_{n+c} K`` for an offset
triple ``t = (a, b, c)``.  Every closed form here is evaluated exactly; the
ones routed through ``w`` arithmetic assert that all ``w`` parts cancel.
"""

from __future__ import annotations

import random
from functools import lru_cache
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Literal, NamedTuple

from .quaternion import ConsistencyError, Quaternion, quat_map_scalars
from .scalars import OMEGA1, OMEGA2, cyclo_conjugate, omega_pow, pow2, rational
from .sequences import k_val, m_val, x_val


class OffsetTriple(NamedTuple):
    a: int
    b: int
    c: int

    @classmethod
    def parse(cls, text: str) -> OffsetTriple:
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 3:
            raise ValueError(f"expected three comma-separated integers, got {text!r}")
        return cls(*(int(p) for p in parts))

    def __str__(self) -> str:
        return f"{self.a},{self.b},{self.c}"


CANONICAL_TRIPLES = (OffsetTriple(1, 2, 3), OffsetTriple(0, 0, 0), OffsetTriple(1, 0, -1))
GRID_VALUES = (-2, -1, 0, 1, 2, 3)
DEFAULT_SEED = 20240101


def triple_grid(seed: int = DEFAULT_SEED, sample: int = 60) -> list[OffsetTriple]:
    """Canonical triples followed by a seeded sample of {-2..3}^3 (no repeats)."""
    pool = [OffsetTriple(*t) for t in product(GRID_VALUES, repeat=3)]
    pool = [t for t in pool if t not in CANONICAL_TRIPLES]
    picked = random.Random(seed).sample(pool, sample)
    return list(CANONICAL_TRIPLES) + sorted(picked)


def _shifts(t: OffsetTriple) -> tuple[int, int, int, int]:
    return (0, t.a, t.b, t.c)


@lru_cache(maxsize=8192)
def qk(n: int, t: OffsetTriple) -> Quaternion:
    return Quaternion(*(k_val(n + s) for s in _shifts(t)))


@lru_cache(maxsize=8192)
def qm(n: int, t: OffsetTriple) -> Quaternion:
    return Quaternion(*(m_val(n + s) for s in _shifts(t)))


@dataclass(frozen=True)
class BasisSet:
    theta: Quaternion
    phi1: Quaternion
    phi2: Quaternion


def theta(t: OffsetTriple) -> Quaternion:
    return Quaternion(*(pow2(s) for s in _shifts(t)))


def phi1(t: OffsetTriple) -> Quaternion:
    return Quaternion(*(omega_pow(s) for s in _shifts(t)))


def phi2(t: OffsetTriple) -> Quaternion:
    return Quaternion(*(omega_pow(s).conjugate() for s in _shifts(t)))


@lru_cache(maxsize=8192)
def basis(t: OffsetTriple) -> BasisSet:
    b = BasisSet(theta(t), phi1(t), phi2(t))
    if quat_map_scalars(b.phi1, cyclo_conjugate) != b.phi2:
        raise ConsistencyError(f"phi2 is not the conjugate of phi1 for {t}")
    return b


def qm_binet(n: int, t: OffsetTriple) -> Quaternion:
    """``w1**n Phi1 + w2**n Phi2``, rationalised."""
    b = basis(t)
    w1n = omega_pow(n)
    return (w1n * b.phi1 + w1n.conjugate() * b.phi2).rationalize()


def binet_qk(n: int, t: OffsetTriple) -> Quaternion:
    """``2**n Theta + w1**n Phi1 + w2**n Phi2`` evaluated over Q[w]."""
    b = basis(t)
    w1n = omega_pow(n)
    total = pow2(n) * b.theta + w1n * b.phi1 + w1n.conjugate() * b.phi2
    return total.rationalize()


def qm_linear(n: int, t: OffsetTriple) -> Quaternion:
    """QM_n written through M_n, M_{n-1} and X at the offsets."""
    lead = Quaternion(1, x_val(t.a + 1), x_val(t.b + 1), x_val(t.c + 1))
    tail = Quaternion(0, x_val(t.a), x_val(t.b), x_val(t.c))
    return m_val(n) * lead - m_val(n - 1) * tail


def qk_negative_closed(n: int, t: OffsetTriple) -> Quaternion:
    """QK_{-n} from 2**-n Theta and the M/X expansion of QM_{-n}."""
    if n < 0:
        raise ValueError("qk_negative_closed takes n >= 0 and returns QK_{-n}")
    first = Quaternion(1, -x_val(t.a - 1), -x_val(t.b - 1), -x_val(t.c - 1))
    second = Quaternion(0, x_val(t.a), x_val(t.b), x_val(t.c))
    return pow2(-n) * theta(t) + m_val(n) * first + m_val(n - 1) * second


def norm_direct(n: int, t: OffsetTriple) -> Fraction:
    return rational(sum(c * c for c in qk(n, t)))


NormVariant = Literal["paper", "corrected"]


def norm_closed(n: int, t: OffsetTriple, variant: NormVariant = "corrected") -> Fraction:
    """Closed-form norm of QK_n.

    ``paper`` keeps the leading 1 in the M_{n-1} factor as printed;
    ``corrected`` drops it, which is what expanding the squares gives.
    """
    if variant not in ("paper", "corrected"):
        raise ValueError(f"unknown norm variant {variant!r}")
    a, b, c = t
    nr_theta = 1 + pow2(2 * a) + pow2(2 * b) + pow2(2 * c)
    lead = 1 + pow2(a) * x_val(a + 1) + pow2(b) * x_val(b + 1) + pow2(c) * x_val(c + 1)
    tail = pow2(a) * x_val(a) + pow2(b) * x_val(b) + pow2(c) * x_val(c)
    if variant == "paper":
        tail += 1
    squares = m_val(2 * n) + m_val(2 * (n + a)) + m_val(2 * (n + b)) + m_val(2 * (n + c)) + 8
    return rational(
        pow2(2 * n) * nr_theta
        + pow2(n + 1) * m_val(n) * lead
        - pow2(n + 1) * m_val(n - 1) * tail
        + squares
    )


def sum_direct(n: int, t: OffsetTriple) -> Quaternion:
    if n < 0:
        raise ValueError("partial sums need n >= 0")
    total = Quaternion.zero()
    for j in range(n + 1):
        total = total + qk(j, t)
    return total


def sum_constant(t: OffsetTriple) -> Quaternion:
    """``-3 Theta + (1 - w2) Phi1 + (1 - w1) Phi2``, rationalised."""
    b = basis(t)
    raw = -3 * b.theta + (1 - OMEGA2) * b.phi1 + (1 - OMEGA1) * b.phi2
    return raw.rationalize()


def sum_constant_proof_form(t: OffsetTriple) -> Quaternion:
    return qk(0, t) - qk(2, t)


def sum_closed(n: int, t: OffsetTriple) -> Quaternion:
    """Closed form of QK_0 + ... + QK_n.

    The constant term is evaluated in both the ``w`` form and as QK_0 - QK_2;
    the two must agree, and every brace numerator must be divisible by 3.
    """
    if n < 0:
        raise ValueError("partial sums need n >= 0")
    const = sum_constant(t)
    if const != sum_constant_proof_form(t):
        raise ConsistencyError(f"sum constant disagrees with QK_0 - QK_2 for {t}")
    brace = qk(n + 2, t) + 2 * qk(n, t) + const
    for c in brace:
        if c.numerator % 3:
            raise ConsistencyError(f"brace component {c} not divisible by 3 for n={n}, t={t}")
    return Fraction(1, 3) * brace


def cassini_sides(n: int, t: OffsetTriple) -> tuple[Quaternion, Quaternion]:
    """Both sides of the Cassini-like identity; Theta's side of each product is kept."""
    if n < 1:
        raise ValueError("the Cassini-like identity needs n >= 1")
    lhs = qk(n + 1, t) * qk(n - 1, t) - qk(n, t) * qk(n, t)
    th = theta(t)
    m0, m1, m2 = qm(n, t), qm(n + 1, t), qm(n + 2, t)
    rhs = (
        m1 * qm(n - 1, t)
        - m0 * m0
        + pow2(n) * (th * (2 * m2 - m0))
        + pow2(n - 1) * ((m1 - 2 * m0) * th)
    )
    return lhs, rhs


def gaussian(n: int, a: int) -> Quaternion:
    """``K_n + K_{n+a} I``: the unrestricted complex (Gaussian) number."""
    return Quaternion(k_val(n), k_val(n + a), 0, 0)


def special_collapse(n: int) -> Quaternion:
    """QK_n at offsets (-n, -n, -n)."""
    return qk(n, OffsetTriple(-n, -n, -n))


__all__ = [
    "BasisSet",
    "CANONICAL_TRIPLES",
    "DEFAULT_SEED",
    "OffsetTriple",
    "basis",
    "binet_qk",
    "cassini_sides",
    "gaussian",
    "norm_closed",
    "norm_direct",
    "phi1",
    "phi2",
    "qk",
    "qk_negative_closed",
    "qm",
    "qm_binet",
    "qm_linear",
    "special_collapse",
    "sum_closed",
    "sum_constant",
    "sum_constant_proof_form",
    "sum_direct",
    "theta",
    "triple_grid",
]
