"""Hamilton quaternions over a commutative scalar ring.

Components may be ``int``, :class:`~fractions.Fraction` or
:class:`~joq.scalars.CycloScalar`; anything closed under ``+``, ``-`` and
``*`` with those works.  Multiplication is the Hamilton product and is not
commutative.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Generic, Iterator, TypeVar

from .scalars import CycloScalar, cyclo_is_rational, rational_part, render_rational

S = TypeVar("S")


class ConsistencyError(ArithmeticError):
    """An exact identity that must hold by construction did not."""


def _canon(x):
    if type(x) is Fraction and x.denominator == 1:
        return x.numerator
    return x


@dataclass(frozen=True, repr=False)
class Quaternion(Generic[S]):
    r: S
    i: S
    j: S
    k: S

    def __post_init__(self) -> None:
        for name in ("r", "i", "j", "k"):
            object.__setattr__(self, name, _canon(getattr(self, name)))

    @classmethod
    def scalar(cls, s) -> Quaternion:
        return cls(s, 0, 0, 0)

    @classmethod
    def zero(cls) -> Quaternion:
        return cls(0, 0, 0, 0)

    def __iter__(self) -> Iterator[S]:
        return iter((self.r, self.i, self.j, self.k))

    def components(self) -> tuple:
        return (self.r, self.i, self.j, self.k)

    def __add__(self, other: Quaternion) -> Quaternion:
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion(self.r + other.r, self.i + other.i, self.j + other.j, self.k + other.k)

    def __sub__(self, other: Quaternion) -> Quaternion:
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion(self.r - other.r, self.i - other.i, self.j - other.j, self.k - other.k)

    def __neg__(self) -> Quaternion:
        return Quaternion(-self.r, -self.i, -self.j, -self.k)

    def __mul__(self, other) -> Quaternion:
        if isinstance(other, Quaternion):
            return quat_mul(self, other)
        if isinstance(other, (int, Fraction, CycloScalar)):
            return scalar_mul(other, self)
        return NotImplemented

    def __rmul__(self, other) -> Quaternion:
        if isinstance(other, (int, Fraction, CycloScalar)):
            return scalar_mul(other, self)
        return NotImplemented

    def __pow__(self, e: int) -> Quaternion:
        if e < 0:
            raise ValueError("quaternion inverses are not supported")
        out = Quaternion(1, 0, 0, 0)
        for _ in range(e):
            out = out * self
        return out

    def __bool__(self) -> bool:
        return any(bool(c) for c in self)

    def conj(self) -> Quaternion:
        return quat_conj(self)

    def norm(self):
        return quat_norm(self)

    def is_rational(self) -> bool:
        return all(cyclo_is_rational(c) for c in self)

    def rationalize(self) -> Quaternion:
        """Drop to rational components, raising if any ``w`` part survives."""
        if not self.is_rational():
            raise ConsistencyError(f"non-rational quaternion {self}")
        return Quaternion(*(rational_part(c) for c in self))

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"Quaternion({render(self)})"


def quat_mul(p: Quaternion, q: Quaternion) -> Quaternion:
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    return Quaternion(
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


def quat_conj(q: Quaternion) -> Quaternion:
    return Quaternion(q.r, -q.i, -q.j, -q.k)


def quat_norm(q: Quaternion):
    """Scalar part of ``q * conj(q)``; the vector part is checked to vanish."""
    prod = q * quat_conj(q)
    if prod.i or prod.j or prod.k:
        raise ConsistencyError(f"q*conj(q) has a vector part for q = {q}")
    return prod.r


def scalar_mul(s, q: Quaternion) -> Quaternion:
    return Quaternion(s * q.r, s * q.i, s * q.j, s * q.k)


def quat_map_scalars(q: Quaternion, f: Callable) -> Quaternion:
    return Quaternion(f(q.r), f(q.i), f(q.j), f(q.k))


def _render_scalar(x) -> str:
    if isinstance(x, CycloScalar):
        return str(x)
    return render_rational(x)


def _is_negative_rational(x) -> bool:
    return not isinstance(x, CycloScalar) and x < 0


def render(q: Quaternion) -> str:
    """Canonical text ``r + i*I + j*J + k*K``.

    Zero imaginary parts are omitted; negative rational coefficients are
    written with a minus sign; ``w``-valued coefficients are parenthesised.
    """
    out = _render_scalar(q.r)
    for coeff, unit in ((q.i, "I"), (q.j, "J"), (q.k, "K")):
        if not coeff:
            continue
        if isinstance(coeff, CycloScalar) and not coeff.is_rational():
            out += f" + ({coeff})*{unit}"
        elif _is_negative_rational(rational_part(coeff)):
            out += f" - {render_rational(-rational_part(coeff))}*{unit}"
        else:
            out += f" + {render_rational(rational_part(coeff))}*{unit}"
    return out


I = Quaternion(0, 1, 0, 0)
J = Quaternion(0, 0, 1, 0)
K = Quaternion(0, 0, 0, 1)
