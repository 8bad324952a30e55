"""Scalar sequences: M, X, modified third-order Jacobsthal K, and J3.

All values are exact rationals (``int`` or ``Fraction``).  ``k_val`` and ``j3_val`` are closed-form
(or memoised recurrence for J3); the ``*_by_recurrence`` helpers exist only
as independent oracles.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .scalars import omega_pow, pow2, rational, render_rational

SEQUENCE_NAMES = ("K", "M", "X", "J3")


def m_val(n: int) -> int:
    return 2 if n % 3 == 0 else -1


def x_val(n: int) -> int:
    return (0, 1, -1)[n % 3]


def k_val(n: int) -> int | Fraction:
    return pow2(n) + m_val(n)


_J3_PERIODIC = (-2, 3, -1)


def j3_val(n: int) -> int | Fraction:
    """Third-order Jacobsthal number with seeds J0=0, J1=1, J2=1.

    Uses J_n = (2**(n+1) + P_n) / 7 where P has period 3 (-2, 3, -1).
    """
    return rational(Fraction(2 * pow2(n) + _J3_PERIODIC[n % 3], 7))


def k_by_recurrence(n: int) -> Fraction:
    """K_n from the seeds (3, 1, 3) and K_{n+3} = K_{n+2} + K_{n+1} + 2 K_n."""
    return _linear3(n, (3, 1, 3))


def j3_by_recurrence(n: int) -> Fraction:
    return _linear3(n, (0, 1, 1))


def _linear3(n: int, seeds: tuple[int, int, int]) -> int | Fraction:
    s0, s1, s2 = seeds
    if n >= 0:
        for _ in range(n):
            s0, s1, s2 = s1, s2, s2 + s1 + 2 * s0
        return s0
    # backward: s_m = (s_{m+3} - s_{m+2} - s_{m+1}) / 2
    for _ in range(-n):
        s0, s1, s2 = Fraction(s2 - s1 - s0, 2), s0, s1
    return rational(s0)


def progression_coeffs(a: int) -> tuple[Fraction, Fraction, Fraction]:
    """Coefficients (c2, c1, c0) of the recurrence along indices a*n + r.

    They are the elementary symmetric functions of 2**a, w1**a, w2**a:
    (2**a + w1**a + w2**a, -(2**a (w1**a + w2**a) + 1), 2**a).
    """
    if a < 1:
        raise ValueError("progression step must be >= 1")
    w1a = omega_pow(a)
    w2a = w1a.conjugate()
    trace = (w1a + w2a).rational_part()
    c2 = pow2(a) + trace
    c1 = -(pow2(a) * trace + 1)
    return c2, c1, pow2(a)


_EVALUATORS = {"K": k_val, "M": m_val, "X": x_val, "J3": j3_val}


def seq_val(name: str, n: int) -> Fraction:
    try:
        fn = _EVALUATORS[name]
    except KeyError:
        raise ValueError(f"unknown sequence {name!r}; expected one of {', '.join(SEQUENCE_NAMES)}") from None
    return fn(n)


@dataclass(frozen=True)
class SeqTable:
    name: str
    lo: int
    hi: int
    values: list[Fraction] = field(default_factory=list)

    @classmethod
    def build(cls, name: str, lo: int, hi: int) -> SeqTable:
        if lo > hi:
            raise ValueError(f"empty range: from {lo} > to {hi}")
        return cls(name, lo, hi, [seq_val(name, n) for n in range(lo, hi + 1)])

    def rows(self):
        return zip(range(self.lo, self.hi + 1), self.values)

    def to_csv(self) -> str:
        lines = ["n,value"]
        lines += [f"{n},{render_rational(v)}" for n, v in self.rows()]
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        payload = [{"n": n, "value": render_rational(v)} for n, v in self.rows()]
        return json.dumps(payload, indent=2) + "\n"
