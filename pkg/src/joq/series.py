"""Generating-function and matrix-generator checks.

Power series are truncated lists of quaternion coefficients; matrices are
3x3 tuples of rows.  Nothing here is approximate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Literal, Sequence

from .core import OffsetTriple, basis, qk, qm
from .quaternion import Quaternion
from .scalars import OMEGA1, OMEGA2

Matrix3 = tuple[tuple, tuple, tuple]

# 1 - x - x^2 - 2x^3
GF_DENOMINATOR = (1, -1, -1, -2)

COMPANION = ((1, 1, 2), (1, 0, 0), (0, 1, 0))
IDENTITY3 = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


@dataclass(frozen=True)
class QPoly:
    """Polynomial with quaternion coefficients, lowest degree first."""

    coeffs: tuple[Quaternion, ...]

    def __post_init__(self) -> None:
        coeffs = list(self.coeffs)
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, d: int) -> Quaternion:
        if 0 <= d < len(self.coeffs):
            return self.coeffs[d]
        return Quaternion.zero()

    def __add__(self, other: QPoly) -> QPoly:
        size = max(len(self.coeffs), len(other.coeffs))
        return QPoly(tuple(self.coeff(d) + other.coeff(d) for d in range(size)))

    def times_scalar_poly(self, poly: Sequence) -> QPoly:
        """Multiply by a polynomial with central (scalar) coefficients."""
        if not self.coeffs:
            return self
        out = [Quaternion.zero() for _ in range(len(self.coeffs) + len(poly) - 1)]
        for d, q in enumerate(self.coeffs):
            for e, s in enumerate(poly):
                if s:
                    out[d + e] = out[d + e] + s * q
        return QPoly(tuple(out))

    def rationalize(self) -> QPoly:
        return QPoly(tuple(q.rationalize() for q in self.coeffs))


def _scalar_times(q: Quaternion, poly: Sequence) -> QPoly:
    return QPoly(tuple(s * q for s in poly))


def gf_numerator(t: OffsetTriple) -> QPoly:
    """Sum of the three numerator rows, over Q[w] (degree <= 2)."""
    b = basis(t)
    rows = (
        _scalar_times(b.theta, (1, 1, 1)),
        _scalar_times(b.phi1, (1, OMEGA1 - 1, 2 * OMEGA2)),
        _scalar_times(b.phi2, (1, OMEGA2 - 1, 2 * OMEGA1)),
    )
    return rows[0] + rows[1] + rows[2]


def qk_series(t: OffsetTriple, depth: int) -> list[Quaternion]:
    return [qk(j, t) for j in range(depth + 1)]


def gf_product(series: Sequence[Quaternion]) -> list[Quaternion]:
    """Coefficients of (1 - x - x^2 - 2x^3) * sum series[j] x^j, untrimmed."""
    out = [Quaternion.zero() for _ in range(len(series) + len(GF_DENOMINATOR) - 1)]
    for d, q in enumerate(series):
        for e, s in enumerate(GF_DENOMINATOR):
            out[d + e] = out[d + e] + s * q
    return out


def product_matches(product: Sequence[Quaternion], t: OffsetTriple, depth: int) -> bool:
    """Degrees 0..2 equal the numerator and 3..depth vanish.

    Degrees above ``depth`` mix in missing series terms and are ignored.
    """
    num = gf_numerator(t).rationalize()
    if any(product[d] != num.coeff(d) for d in range(3)):
        return False
    return not any(product[d] for d in range(3, depth + 1))


def gf_series_check(t: OffsetTriple, depth: int, series: Sequence[Quaternion] | None = None) -> bool:
    if depth < 3:
        raise ValueError("series depth must be >= 3")
    if series is None:
        series = qk_series(t, depth)
    return product_matches(gf_product(series), t, depth)


def mat_mul(x: Matrix3, y: Matrix3) -> Matrix3:
    rows = []
    for i in range(3):
        row = []
        for j in range(3):
            acc = x[i][0] * y[0][j]
            for m in (1, 2):
                acc = acc + x[i][m] * y[m][j]
            row.append(acc)
        rows.append(tuple(row))
    return tuple(rows)


def companion_power(n: int) -> Matrix3:
    """Exact ``COMPANION ** n`` by repeated squaring."""
    if n < 0:
        raise ValueError("companion matrix powers need n >= 0")
    result, base = IDENTITY3, COMPANION
    while n:
        if n & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base)
        n >>= 1
    return result


def det3(m: Matrix3) -> int:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


MatrixSource = Literal["qk", "qm"]
_SOURCES: dict[str, Callable[[int, OffsetTriple], Quaternion]] = {"qk": qk, "qm": qm}


def jmatrix(n: int, t: OffsetTriple, source: MatrixSource = "qk") -> Matrix3:
    """Row r is [Q(n+3-r), Q(n+4-r) - Q(n+3-r), 2 Q(n+2-r)] with Q = QK or QM."""
    f = _SOURCES[source]
    return tuple(
        (f(n + 3 - r, t), f(n + 4 - r, t) - f(n + 3 - r, t), 2 * f(n + 2 - r, t))
        for r in range(3)
    )


def matrix_identity_check(n: int, t: OffsetTriple, base: MatrixSource = "qk") -> bool:
    """J_n(QK) == J_0(base) * A**n, entrywise exact."""
    if n < 0:
        raise ValueError("matrix identity needs n >= 0")
    return jmatrix(n, t) == mat_mul(jmatrix(0, t, base), companion_power(n))
