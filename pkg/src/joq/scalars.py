"""Exact scalars: rationals and the cyclotomic ring Q[w]/(w^2 + w + 1).

Rationals are ``int`` when integral and :class:`fractions.Fraction`
otherwise; :func:`rational` normalises to that form.  The two primitive
cube roots of unity are kept symbolic: ``OMEGA1`` is ``w`` and ``OMEGA2``
is ``-1 - w``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rational = Fraction
ScalarLike = Union[int, Fraction, "CycloScalar"]


def rational(x: int | Fraction) -> int | Fraction:
    if type(x) is int:
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, int):
        return int(x)
    raise TypeError(f"not a rational: {x!r}")


def pow2(n: int) -> int | Fraction:
    """Return 2**n exactly; negative ``n`` gives a dyadic fraction."""
    if n >= 0:
        return 1 << n
    return Fraction(1, 1 << -n)


def render_rational(x: Fraction | int) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True, eq=False)
class CycloScalar:
    """Element ``one + om*w`` with ``w**2 = -1 - w``."""

    one: int | Fraction = 0
    om: int | Fraction = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "one", rational(self.one))
        object.__setattr__(self, "om", rational(self.om))

    @classmethod
    def lift(cls, x: ScalarLike) -> CycloScalar:
        if isinstance(x, CycloScalar):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(x, 0)
        return NotImplemented

    def __add__(self, other: ScalarLike) -> CycloScalar:
        o = CycloScalar.lift(other)
        if o is NotImplemented:
            return NotImplemented
        return CycloScalar(self.one + o.one, self.om + o.om)

    __radd__ = __add__

    def __neg__(self) -> CycloScalar:
        return CycloScalar(-self.one, -self.om)

    def __sub__(self, other: ScalarLike) -> CycloScalar:
        o = CycloScalar.lift(other)
        if o is NotImplemented:
            return NotImplemented
        return CycloScalar(self.one - o.one, self.om - o.om)

    def __rsub__(self, other: ScalarLike) -> CycloScalar:
        return -self + other

    def __mul__(self, other: ScalarLike) -> CycloScalar:
        o = CycloScalar.lift(other)
        if o is NotImplemented:
            return NotImplemented
        # (a + bw)(c + dw) = ac + (ad + bc)w + bd(-1 - w)
        a, b, c, d = self.one, self.om, o.one, o.om
        return CycloScalar(a * c - b * d, a * d + b * c - b * d)

    __rmul__ = __mul__

    def __truediv__(self, other: int | Fraction) -> CycloScalar:
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        if other == 0:
            raise ZeroDivisionError("division of CycloScalar by zero")
        return CycloScalar(Fraction(self.one) / other, Fraction(self.om) / other)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CycloScalar):
            return self.one == other.one and self.om == other.om
        if isinstance(other, (int, Fraction)):
            return self.om == 0 and self.one == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.one) if self.om == 0 else hash((self.one, self.om))

    def __bool__(self) -> bool:
        return bool(self.one) or bool(self.om)

    def conjugate(self) -> CycloScalar:
        """The automorphism swapping the two cube roots of unity."""
        return CycloScalar(self.one - self.om, -self.om)

    def is_rational(self) -> bool:
        return self.om == 0

    def rational_part(self) -> int | Fraction:
        if self.om != 0:
            raise ValueError(f"{self} is not rational")
        return self.one

    def __str__(self) -> str:
        if self.om == 0:
            return render_rational(self.one)
        return f"{render_rational(self.one)}+{render_rational(self.om)}*w"

    def __repr__(self) -> str:
        return f"CycloScalar({self})"


ZERO = CycloScalar(0, 0)
ONE = CycloScalar(1, 0)
OMEGA = CycloScalar(0, 1)
OMEGA1 = OMEGA
OMEGA2 = CycloScalar(-1, -1)

_OMEGA_CYCLE = (ONE, OMEGA, OMEGA2)


def omega_pow(n: int) -> CycloScalar:
    """w**n for any integer n; the cycle has length 3."""
    return _OMEGA_CYCLE[n % 3]


def cyclo_conjugate(x: ScalarLike) -> ScalarLike:
    if isinstance(x, CycloScalar):
        return x.conjugate()
    return x


def cyclo_is_rational(x: ScalarLike) -> bool:
    return not isinstance(x, CycloScalar) or x.is_rational()


def rational_part(x: ScalarLike) -> int | Fraction:
    if isinstance(x, CycloScalar):
        return x.rational_part()
    return rational(x)
