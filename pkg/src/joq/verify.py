"""Identity suites over parameter grids and the JSON verification report."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Iterator, NamedTuple

from . import __version__
from .core import (
    DEFAULT_SEED,
    OffsetTriple,
    binet_qk,
    cassini_sides,
    norm_closed,
    norm_direct,
    qk,
    qk_negative_closed,
    qm,
    qm_binet,
    qm_linear,
    sum_closed,
    sum_constant,
    sum_constant_proof_form,
    sum_direct,
    theta,
    triple_grid,
)
from .quaternion import Quaternion, quat_norm
from .scalars import OMEGA1, OMEGA2, omega_pow, pow2, render_rational
from .sequences import (
    j3_by_recurrence,
    j3_val,
    k_by_recurrence,
    k_val,
    m_val,
    progression_coeffs,
    x_val,
)
from .series import (
    COMPANION,
    companion_power,
    det3,
    gf_numerator,
    gf_product,
    jmatrix,
    mat_mul,
    qk_series,
)

SCHEMA = "joq-report/1"

PASS = "pass"
FAIL = "fail"
ERRATUM = "erratum-documented"

# Checks that encode a printed formula which exact computation contradicts.
ERRATA = {
    "norm-printed-variant": (
        "printed norm formula keeps a leading 1 in the M_(n-1) factor; "
        "printed minus direct equals -2^(n+1)*M_(n-1)"
    ),
    "matrix-j0-qm-variant": (
        "printed matrix identity uses J_0(QM); entries differ from J_0(QK) by 2^k*Theta terms"
    ),
}


class Case(NamedTuple):
    n: int | None
    offsets: OffsetTriple | None
    lhs: object
    rhs: object
    params: dict | None = None


@dataclass(frozen=True)
class SuiteConfig:
    n_min: int | None = None
    n_max: int | None = None
    triples: tuple[OffsetTriple, ...] | None = None
    series_depth: int = 16
    seed: int = DEFAULT_SEED
    checks: tuple[str, ...] | None = None
    mutate: bool = False
    max_counterexamples: int = 10

    def __post_init__(self) -> None:
        if self.n_min is not None and self.n_max is not None and self.n_min > self.n_max:
            raise ValueError(f"n_min {self.n_min} > n_max {self.n_max}")
        if self.series_depth < 3:
            raise ValueError("series_depth must be >= 3")
        if self.max_counterexamples < 1:
            raise ValueError("max_counterexamples must be >= 1")
        if self.checks is not None:
            unknown = sorted(set(self.checks) - set(REGISTRY))
            if unknown:
                raise ValueError(f"unknown checks: {', '.join(unknown)}")

    def grid(self) -> list[OffsetTriple]:
        if self.triples is not None:
            return list(self.triples)
        return triple_grid(self.seed)

    def selected(self) -> list[str]:
        names = REGISTRY if self.checks is None else set(self.checks)
        return sorted(names)

    def n_range(self, lo: int, hi: int, floor: int | None = None) -> range:
        """Check-specific default [lo, hi], overridden by the config and clamped."""
        if self.n_min is not None:
            lo = self.n_min
        if self.n_max is not None:
            hi = self.n_max
        if floor is not None:
            lo = max(lo, floor)
        return range(lo, hi + 1)

    def echo(self) -> dict:
        return {
            "n_min": self.n_min,
            "n_max": self.n_max,
            "triples": [str(t) for t in self.grid()],
            "series_depth": self.series_depth,
            "seed": self.seed,
            "checks": self.selected(),
            "mutate": self.mutate,
            "max_counterexamples": self.max_counterexamples,
        }


@dataclass
class CheckResult:
    name: str
    status: str
    cases_run: int
    failures: int
    counterexamples: list[dict] = field(default_factory=list)
    note: str | None = None

    def to_json(self) -> dict:
        out = {
            "name": self.name,
            "status": self.status,
            "cases_run": self.cases_run,
            "failures": self.failures,
            "counterexamples": self.counterexamples,
        }
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class VerificationReport:
    config: SuiteConfig
    checks: list[CheckResult]

    @property
    def ok(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    def to_json(self) -> dict:
        counts = {s: sum(c.status == s for c in self.checks) for s in (PASS, FAIL, ERRATUM)}
        return {
            "schema": SCHEMA,
            "version": __version__,
            "config": self.config.echo(),
            "summary": counts,
            "checks": [c.to_json() for c in self.checks],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2) + "\n"


def render_value(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, (int, Fraction)):
        return render_rational(x)
    if isinstance(x, tuple):
        return "[" + ", ".join(render_value(v) for v in x) + "]"
    return str(x)


def _perturb(x):
    if isinstance(x, bool):
        return not x
    if isinstance(x, (int, Fraction)):
        return x + 1
    if isinstance(x, Quaternion):
        return x + Quaternion(1, 0, 0, 0)
    if isinstance(x, tuple):
        return (_perturb(x[0]),) + x[1:]
    raise TypeError(f"cannot perturb {type(x).__name__}")


# -- scalar sequence checks --------------------------------------------------


def _k_recurrences(cfg: SuiteConfig) -> Iterator[Case]:
    for n in cfg.n_range(-30, 30):
        yield Case(n, None, k_val(n + 3), k_val(n) + 7 * pow2(n), {"form": "theta"})
        yield Case(n, None, k_val(n + 3), k_val(n + 2) + k_val(n + 1) + 2 * k_val(n), {"form": "order3"})
        yield Case(n, None, k_val(n), k_by_recurrence(n), {"form": "seeded-recurrence"})
        yield Case(n, None, k_val(n), (pow2(n) + omega_pow(n) + omega_pow(n).conjugate()).rational_part(),
                   {"form": "binet"})


def _mx_identities(cfg: SuiteConfig) -> Iterator[Case]:
    for n in cfg.n_range(-15, 15):
        yield Case(n, None, m_val(n) ** 2, m_val(2 * n) + 2, {"identity": "square"})
        yield Case(n, None, m_val(-n), m_val(n), {"identity": "m-even"})
        yield Case(n, None, x_val(-n), -x_val(n), {"identity": "x-odd"})
        w1n = omega_pow(n)
        yield Case(n, None, m_val(n), (w1n + w1n.conjugate()).rational_part(), {"identity": "m-trace"})
        # X_n (w1 - w2) = w1^n - w2^n avoids dividing in Q[w]
        yield Case(n, None, x_val(n) * (OMEGA1 - OMEGA2), w1n - w1n.conjugate(), {"identity": "x-binet"})
    nm = cfg.n_range(-12, 12)
    for n in nm:
        for m in nm:
            yield Case(n, None, m_val(n + m), x_val(m + 1) * m_val(n) - x_val(m) * m_val(n - 1),
                       {"identity": "addition", "m": m})


def _j3_relation(cfg: SuiteConfig) -> Iterator[Case]:
    for n in cfg.n_range(0, 20):
        yield Case(n, None, k_val(n), j3_val(n) + 2 * j3_val(n - 1) + 6 * j3_val(n - 2), {"form": "k-from-j3"})
    for n in cfg.n_range(-30, 30):
        yield Case(n, None, j3_val(n), j3_by_recurrence(n), {"form": "seeded-recurrence"})


def _progression(cfg: SuiteConfig) -> Iterator[Case]:
    for a in range(1, 6):
        c2, c1, c0 = progression_coeffs(a)
        for r in range(a):
            for n in cfg.n_range(0, 6, floor=0):
                lhs = j3_val(a * (n + 3) + r)
                rhs = c2 * j3_val(a * (n + 2) + r) + c1 * j3_val(a * (n + 1) + r) + c0 * j3_val(a * n + r)
                yield Case(n, None, lhs, rhs, {"a": a, "r": r})


# -- quaternion checks -------------------------------------------------------


def _qk_recurrences(cfg: SuiteConfig) -> Iterator[Case]:
    for t in cfg.grid():
        th = theta(t)
        for n in cfg.n_range(-10, 20):
            yield Case(n, t, qk(n + 3, t), qk(n, t) + 7 * pow2(n) * th, {"form": "theta"})
            yield Case(n, t, qk(n + 3, t), qk(n + 2, t) + qk(n + 1, t) + 2 * qk(n, t), {"form": "order3"})


def _binet(cfg: SuiteConfig) -> Iterator[Case]:
    for t in cfg.grid():
        for n in cfg.n_range(-10, 20):
            yield Case(n, t, qk(n, t), binet_qk(n, t), {"form": "qk"})
            yield Case(n, t, qm(n, t), qm_binet(n, t), {"form": "qm"})
            yield Case(n, t, qm(n, t), qm_linear(n, t), {"form": "qm-linear"})
            yield Case(n, t, qm(n - 1, t), qm(n + 2, t), {"form": "qm-period"})


def _negative_index(cfg: SuiteConfig) -> Iterator[Case]:
    for t in cfg.grid():
        for n in cfg.n_range(0, 12, floor=0):
            yield Case(n, t, qk(-n, t), qk_negative_closed(n, t))


def _norm(cfg: SuiteConfig) -> Iterator[Case]:
    for t in cfg.grid():
        for n in cfg.n_range(-10, 20):
            direct = norm_direct(n, t)
            yield Case(n, t, direct, norm_closed(n, t, "corrected"), {"form": "corrected"})
            yield Case(n, t, direct, quat_norm(qk(n, t)), {"form": "q-conj-q"})


def _norm_printed(cfg: SuiteConfig) -> Iterator[Case]:
    for t in cfg.grid():
        for n in cfg.n_range(-10, 20):
            yield Case(n, t, norm_direct(n, t), norm_closed(n, t, "paper"))


def _sums(cfg: SuiteConfig) -> Iterator[Case]:
    for t in cfg.grid():
        yield Case(None, t, sum_constant(t), sum_constant_proof_form(t), {"form": "constant"})
        for n in cfg.n_range(0, 16, floor=0):
            yield Case(n, t, sum_direct(n, t), sum_closed(n, t), {"form": "partial-sum"})


def _cassini(cfg: SuiteConfig) -> Iterator[Case]:
    for t in cfg.grid():
        for n in cfg.n_range(1, 16, floor=1):
            lhs, rhs = cassini_sides(n, t)
            yield Case(n, t, lhs, rhs)


def _generating_function(cfg: SuiteConfig) -> Iterator[Case]:
    depth = cfg.series_depth
    for t in cfg.grid():
        product = gf_product(qk_series(t, depth))
        num = gf_numerator(t).rationalize()
        for d in range(depth + 1):
            expected = num.coeff(d) if d < 3 else Quaternion.zero()
            yield Case(d, t, product[d], expected, {"degree": d})


def _matrix(cfg: SuiteConfig) -> Iterator[Case]:
    for t in cfg.grid():
        j0 = jmatrix(0, t)
        for n in cfg.n_range(0, 12, floor=0):
            yield Case(n, t, jmatrix(n, t), mat_mul(j0, companion_power(n)), {"form": "J0(QK)"})
    for n in cfg.n_range(0, 12, floor=0):
        yield Case(n, None, det3(companion_power(n)), pow2(n), {"form": "det"})
    for m in range(9):
        for n in range(9):
            yield Case(n, None, companion_power(m + n), mat_mul(companion_power(m), companion_power(n)),
                       {"form": "semigroup", "m": m})
    yield Case(1, None, companion_power(1), COMPANION, {"form": "companion"})


def _matrix_qm(cfg: SuiteConfig) -> Iterator[Case]:
    for t in cfg.grid():
        yield Case(0, t, jmatrix(0, t), jmatrix(0, t, "qm"), {"form": "J0(QM)"})


REGISTRY: dict[str, Callable[[SuiteConfig], Iterable[Case]]] = {
    "binet": _binet,
    "cassini": _cassini,
    "generating-function": _generating_function,
    "j3-relation": _j3_relation,
    "k-recurrences": _k_recurrences,
    "matrix": _matrix,
    "matrix-j0-qm-variant": _matrix_qm,
    "mx-identities": _mx_identities,
    "negative-index": _negative_index,
    "norm": _norm,
    "norm-printed-variant": _norm_printed,
    "progression-recurrence": _progression,
    "qk-recurrences": _qk_recurrences,
    "sums": _sums,
}


def _counterexample(case: Case, lhs, rhs) -> dict:
    out = {
        "n": case.n,
        "offsets": None if case.offsets is None else str(case.offsets),
        "lhs": render_value(lhs),
        "rhs": render_value(rhs),
    }
    if case.params:
        out["params"] = case.params
    return out


def run_check(name: str, cfg: SuiteConfig) -> CheckResult:
    cases_run = 0
    failures = 0
    examples: list[dict] = []
    # mutation targets only checks that are expected to pass
    mutate = cfg.mutate and name not in ERRATA
    for case in REGISTRY[name](cfg):
        rhs = case.rhs
        if mutate and cases_run == 0:
            rhs = _perturb(rhs)
        cases_run += 1
        if case.lhs != rhs:
            failures += 1
            if len(examples) < cfg.max_counterexamples:
                examples.append(_counterexample(case, case.lhs, rhs))
    if failures == 0:
        status = PASS
    elif name in ERRATA:
        status = ERRATUM
    else:
        status = FAIL
    return CheckResult(name, status, cases_run, failures, examples, ERRATA.get(name))


def run_suite(cfg: SuiteConfig) -> VerificationReport:
    return VerificationReport(cfg, [run_check(name, cfg) for name in cfg.selected()])
