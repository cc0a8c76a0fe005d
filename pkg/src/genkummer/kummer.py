"""Strata of the Hilbert-Chow map of a generalized Kummer variety and its Hodge diamond.

For an abelian surface ``A`` the ``n``-th generalized Kummer variety ``K^[n]``
(complex dimension ``2(n-1)``) maps semi-smally onto ``K^(n)``.  The strata
are indexed by a partition ``lambda`` of ``n`` and an ``e``-torsion point
``tau``, ``e = gcd(lambda)``.  Two routes give the diamond of ``K^[n]``:

``via_theorem``
    sum over strata of ``e^4 * h(K_tau^(lambda)) (x) L^(n - l)``, where each
    ``h(K_tau^(lambda))`` is recovered as ``h(A^(lambda)) / h(A)``;
``via_corollary``
    realize ``h(A x K^[n]) = sum e^4 * h(A^(lambda)) (x) L^(n - l)`` and divide
    by ``h(A)`` once.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache

from .graded import (
    HodgeDiamond,
    InexactDivisionError,
    diamond_of_abelian_surface,
    direct_sum,
    exact_divide,
    tate_twist,
)
from .motive import MotiveExpr, MotiveTerm, motive_of_sym_quotient, realize
from .partitions import Partition, enumerate_partitions, torsion_component_count

__all__ = [
    "Stratum",
    "StrataReport",
    "CheckResult",
    "VerificationReport",
    "strata_catalog",
    "product_motive",
    "stratum_motive",
    "kummer_diamond_via_theorem",
    "kummer_diamond_via_corollary",
    "kummer_diamond",
    "semi_small_defect",
    "expected_euler_characteristic",
    "verify_suite",
]

log = logging.getLogger(__name__)


def _check_n(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")


def semi_small_defect(dim_source: int, dim_stratum: int, dim_fiber: int) -> int:
    """``(dim S - dim S_delta) - 2 delta``; semi-small needs >= 0, relevant strata give 0."""
    return (dim_source - dim_stratum) - 2 * dim_fiber


@dataclass(frozen=True)
class Stratum:
    partition: Partition
    torsion_multiplicity: int
    dim_base_stratum: int
    dim_total_stratum: int
    dim_fiber: int
    tate_shift: int

    @classmethod
    def of(cls, lam: Partition) -> "Stratum":
        n, ell = lam.n, lam.length
        return cls(
            partition=lam,
            torsion_multiplicity=torsion_component_count(lam),
            dim_base_stratum=2 * ell - 2,
            dim_total_stratum=n + ell - 2,
            dim_fiber=n - ell,
            tate_shift=n - ell,
        )

    @property
    def n(self) -> int:
        return self.partition.n

    def is_semi_small(self) -> bool:
        """Relevant-stratum equality for ``K^(n)`` of dimension ``2n - 2``."""
        return semi_small_defect(2 * self.n - 2, self.dim_base_stratum, self.dim_fiber) == 0

    def to_json(self) -> dict:
        return {
            "partition": list(self.partition.parts),
            "torsion_multiplicity": self.torsion_multiplicity,
            "dim_base_stratum": self.dim_base_stratum,
            "dim_total_stratum": self.dim_total_stratum,
            "dim_fiber": self.dim_fiber,
            "tate_shift": self.tate_shift,
        }


@dataclass(frozen=True)
class StrataReport:
    n: int
    strata: tuple[Stratum, ...]
    total_strata_count: int
    total_motive_summands: int
    semi_small_verified: bool

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "strata": [s.to_json() for s in self.strata],
            "total_strata_count": self.total_strata_count,
            "total_motive_summands": self.total_motive_summands,
            "semi_small_verified": self.semi_small_verified,
        }


def strata_catalog(n: int) -> StrataReport:
    """One :class:`Stratum` per partition of ``n``, in reverse lexicographic order."""
    _check_n(n)
    strata = tuple(Stratum.of(lam) for lam in enumerate_partitions(n))
    return StrataReport(
        n=n,
        strata=strata,
        total_strata_count=sum(s.torsion_multiplicity for s in strata),
        total_motive_summands=len(strata),
        semi_small_verified=all(s.is_semi_small() for s in strata),
    )


def product_motive(n: int) -> MotiveExpr:
    """``h(A x K^[n])`` as ``sum e(lambda)^4 h(A^(lambda)) (x) L^(n - l)``."""
    _check_n(n)
    terms = tuple(
        MotiveTerm.of_partition(lam, n - lam.length, torsion_component_count(lam))
        for lam in enumerate_partitions(n)
    )
    return MotiveExpr(terms, label=f"h(A x K^[{n}])")


@lru_cache(maxsize=None)
def _stratum_motive(lam: Partition) -> HodgeDiamond:
    return exact_divide(realize(motive_of_sym_quotient(lam)), diamond_of_abelian_surface())


def stratum_motive(lam: Partition, n: int | None = None) -> HodgeDiamond:
    """Diamond of ``K_tau^(lambda)``, the same for every torsion point ``tau``.

    Uses ``h(A x K_tau^(lambda)) = h(A^(lambda))``.  For ``lambda = (1, 1)`` this
    is the singular Kummer surface ``A/{+-1}``:

    >>> stratum_motive(Partition((1, 1))).betti()
    (1, 0, 6, 0, 1)
    """
    if n is not None and lam.n != n:
        raise ValueError(f"{lam} is not a partition of {n}")
    return _stratum_motive(lam)


@lru_cache(maxsize=None)
def kummer_diamond_via_theorem(n: int) -> HodgeDiamond:
    _check_n(n)
    out = HodgeDiamond()
    for lam in enumerate_partitions(n):
        piece = tate_twist(stratum_motive(lam), n - lam.length)
        out = direct_sum(out, piece, torsion_component_count(lam))
    return out


@lru_cache(maxsize=None)
def kummer_diamond_via_corollary(n: int) -> HodgeDiamond:
    _check_n(n)
    return exact_divide(realize(product_motive(n)), diamond_of_abelian_surface())


def kummer_diamond(n: int) -> HodgeDiamond:
    """Hodge diamond of ``K^[n]`` (the global route)."""
    return kummer_diamond_via_corollary(n)


def _sigma1(n: int) -> int:
    return sum(d for d in range(1, n + 1) if n % d == 0)


def expected_euler_characteristic(n: int) -> int:
    """``n^3 sigma_1(n)``, the known Euler characteristic of ``K^[n]`` for ``n >= 2``."""
    return n**3 * _sigma1(n)


@dataclass(frozen=True)
class CheckResult:
    n: int
    name: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"n": self.n, "check": self.name, "passed": self.passed, "detail": self.detail}


@dataclass
class VerificationReport:
    n_max: int
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        return {
            "n_max": self.n_max,
            "passed": self.passed,
            "checks": [c.to_json() for c in self.checks],
        }


def _checks_for(n: int) -> list[CheckResult]:
    out: list[CheckResult] = []

    def add(name: str, passed: bool, detail: str = "") -> None:
        out.append(CheckResult(n, name, bool(passed), detail))

    D_A = diamond_of_abelian_surface()
    bad = []
    for lam in enumerate_partitions(n):
        try:
            stratum_motive(lam)
        except InexactDivisionError as exc:
            bad.append(f"{lam}: {exc}")
    add("exact_divisibility", not bad, "; ".join(bad))

    try:
        per_stratum = kummer_diamond_via_theorem(n)
        diamond = kummer_diamond_via_corollary(n)
    except InexactDivisionError as exc:
        add("route_equality", False, str(exc))
        return out
    add("route_equality", per_stratum == diamond)
    add("product_formula", D_A * diamond == realize(product_motive(n)))

    d = 2 * (n - 1)
    b = diamond.betti()
    add("poincare_duality", diamond.duality_defect(d) == 0)
    add("hodge_symmetry", diamond.is_hodge_symmetric())
    add("b0", b[0] == 1, f"b0={b[0]}")
    add("b1", len(b) > 1 and b[1] == 0, f"b1={b[1] if len(b) > 1 else None}")
    add("b_top", len(b) == 2 * d + 1 and b[-1] == 1, f"top degree {len(b) - 1}")
    add("h20", diamond[2, 0] == 1, f"h20={diamond[2, 0]}")
    add(
        "euler_characteristic",
        diamond.euler() == expected_euler_characteristic(n),
        f"{diamond.euler()} vs {expected_euler_characteristic(n)}",
    )
    add("semi_small", strata_catalog(n).semi_small_verified)
    return out


def verify_suite(n_max: int) -> VerificationReport:
    """Run every structural check for ``2 <= n <= n_max``; failures are reported, not raised."""
    if not isinstance(n_max, int) or n_max < 2:
        raise ValueError(f"n_max must be an integer >= 2, got {n_max!r}")
    report = VerificationReport(n_max)
    for n in range(2, n_max + 1):
        checks = _checks_for(n)
        for c in checks:
            if not c.passed:
                log.warning("n=%d: check %s failed %s", n, c.name, c.detail)
        report.checks.extend(checks)
    return report
