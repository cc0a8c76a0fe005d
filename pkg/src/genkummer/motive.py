"""Formal motive expressions built from an abelian surface ``A``.

A :class:`MotiveTerm` stands for ``mult`` copies of

    Sym^{a_1} h(A) (x) Sym^{a_2} h(A) (x) ... (x) L^m

where ``a_i`` are the multiplicities of the parts of a partition, i.e. the
motive of ``A^(lambda) = A^(a_1) x ... x A^(a_r)`` twisted by ``L^m``.
:func:`realize` sends an expression to its Hodge diamond.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping

from .graded import (
    HodgeDiamond,
    diamond_of_abelian_surface,
    direct_sum,
    sym_power,
    tate_twist,
    tensor,
)
from .partitions import Partition

__all__ = [
    "MotiveTerm",
    "MotiveExpr",
    "motive_of_sym_quotient",
    "realize",
    "realize_term",
    "sym_power_of_abelian_surface",
]


@dataclass(frozen=True)
class MotiveTerm:
    """``multiplicity`` copies of ``h(A^(lambda)) (x) L^tate_shift``.

    ``sym_factors`` is a sorted tuple of ``(part, count)`` pairs, the
    multiplicity map of ``lambda``; it is empty only for the unit motive.
    """

    sym_factors: tuple[tuple[int, int], ...]
    tate_shift: int = 0
    multiplicity: int = 1

    def __post_init__(self):
        factors = tuple(sorted((int(k), int(c)) for k, c in dict(self.sym_factors).items()))
        if any(k < 1 or c < 1 for k, c in factors):
            raise ValueError(f"invalid sym_factors {self.sym_factors!r}")
        if self.tate_shift < 0:
            raise ValueError(f"tate_shift must be nonnegative, got {self.tate_shift}")
        if self.multiplicity < 1:
            raise ValueError(f"multiplicity must be positive, got {self.multiplicity}")
        object.__setattr__(self, "sym_factors", factors)

    @classmethod
    def of_partition(cls, lam: Partition, tate_shift: int = 0, multiplicity: int = 1) -> "MotiveTerm":
        return cls(tuple(lam.multiplicities.items()), tate_shift, multiplicity)

    @property
    def key(self) -> tuple:
        return (self.sym_factors, self.tate_shift)

    def partition(self) -> Partition | None:
        """The partition whose multiplicity map is ``sym_factors``."""
        if not self.sym_factors:
            return None
        return Partition.from_parts([k for k, c in self.sym_factors for _ in range(c)])

    def __str__(self) -> str:
        factors = " (x) ".join(
            f"Sym^{c} h(A)" if c > 1 else "h(A)" for _, c in reversed(self.sym_factors)
        ) or "1"
        if self.tate_shift:
            factors += f" (x) L^{self.tate_shift}"
        return f"{self.multiplicity} x {factors}" if self.multiplicity > 1 else factors

    def to_json(self) -> dict:
        return {
            "parts_multiplicities": {str(k): c for k, c in self.sym_factors},
            "tate_shift": self.tate_shift,
            "multiplicity": self.multiplicity,
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "MotiveTerm":
        factors = tuple((int(k), int(c)) for k, c in obj["parts_multiplicities"].items())
        return cls(factors, int(obj["tate_shift"]), int(obj["multiplicity"]))


def _merge(terms: Iterable[MotiveTerm]) -> tuple[MotiveTerm, ...]:
    merged: dict[tuple, int] = {}
    for t in terms:
        merged[t.key] = merged.get(t.key, 0) + t.multiplicity
    return tuple(MotiveTerm(f, m, mult) for (f, m), mult in merged.items())


@dataclass(frozen=True)
class MotiveExpr:
    """Formal direct sum of motive terms; identical terms are merged on construction."""

    terms: tuple[MotiveTerm, ...] = ()
    label: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "terms", _merge(self.terms))

    def __add__(self, other: "MotiveExpr") -> "MotiveExpr":
        label = " + ".join(x for x in (self.label, other.label) if x)
        return MotiveExpr(self.terms + other.terms, label)

    def __len__(self) -> int:
        return len(self.terms)

    def __str__(self) -> str:
        return " (+) ".join(map(str, self.terms)) or "0"

    def summand_count(self) -> int:
        """Number of summands counted with multiplicity."""
        return sum(t.multiplicity for t in self.terms)

    def to_json(self) -> dict:
        return {"label": self.label, "terms": [t.to_json() for t in self.terms]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, obj: Mapping) -> "MotiveExpr":
        return cls(tuple(MotiveTerm.from_json(t) for t in obj["terms"]), obj.get("label", ""))


def motive_of_sym_quotient(lam: Partition) -> MotiveExpr:
    """``h(A^(lambda))`` as a one-term expression."""
    return MotiveExpr((MotiveTerm.of_partition(lam),), label=f"h(A^{lam})")


@lru_cache(maxsize=None)
def sym_power_of_abelian_surface(k: int) -> HodgeDiamond:
    """``Sym^k`` of the abelian surface diamond, memoised per ``k``."""
    return sym_power(diamond_of_abelian_surface(), k)


def realize_term(term: MotiveTerm) -> HodgeDiamond:
    """Hodge diamond of a single copy of ``term`` (multiplicity ignored)."""
    out = HodgeDiamond.unit()
    for _, count in term.sym_factors:
        out = tensor(out, sym_power_of_abelian_surface(count))
    return tate_twist(out, term.tate_shift)


def realize(expr: MotiveExpr) -> HodgeDiamond:
    out = HodgeDiamond()
    for term in expr.terms:
        out = direct_sum(out, realize_term(term), term.multiplicity)
    return out
