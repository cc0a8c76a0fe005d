"""Exact arithmetic on Hodge diamonds.

A :class:`HodgeDiamond` is a finitely supported map ``(p, q) -> h^{p,q}`` with
positive integer values.  A class in bidegree ``(p, q)`` has parity
``(p + q) % 2``; symmetric powers are taken in the super sense, so odd classes
anticommute.  All coefficients are Python integers and never overflow.

Two independent routes compute symmetric powers:

* :func:`symmetric_product_series` expands the Macdonald product
  ``prod (1 - (-1)^(p+q) z x^p y^q)^(-(-1)^(p+q) h^{p,q})`` up to ``z^k``;
* :func:`sym_power` runs the Newton recurrence
  ``k S_k = sum_{r=1}^{k} psi_r S_{k-r}`` with super Adams operations ``psi_r``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator, Mapping

__all__ = [
    "HodgeDiamond",
    "InexactDivisionError",
    "NumericalInvariants",
    "diamond_of_abelian_surface",
    "direct_sum",
    "tensor",
    "tate_twist",
    "sym_power",
    "symmetric_product_series",
    "exact_divide",
    "numerical_invariants",
]

Bidegree = tuple[int, int]


class InexactDivisionError(ArithmeticError):
    """A diamond does not divide another with a nonnegative integral quotient."""


class HodgeDiamond:
    """Immutable finitely supported map from bidegrees to positive integers.

    Zero entries are never stored, so two diamonds are equal exactly when
    their entry maps are equal.  Lookups outside the support return 0.

    >>> D = diamond_of_abelian_surface()
    >>> D[1, 1], D[3, 0]
    (4, 0)
    >>> (D * D).betti()
    (1, 8, 28, 56, 70, 56, 28, 8, 1)
    """

    __slots__ = ("_entries", "_hash")

    def __init__(self, entries: Mapping[Bidegree, int] | Iterable[tuple[Bidegree, int]] = ()):
        items = entries.items() if isinstance(entries, Mapping) else entries
        clean: dict[Bidegree, int] = {}
        for (p, q), h in items:
            p, q, h = int(p), int(q), int(h)
            if p < 0 or q < 0:
                raise ValueError(f"bidegree must be nonnegative, got {(p, q)}")
            if h < 0:
                raise ValueError(f"h^{{{p},{q}}} = {h} is negative")
            if h:
                clean[(p, q)] = clean.get((p, q), 0) + h
        self._entries = dict(sorted(clean.items(), key=lambda kv: _key(kv[0])))
        self._hash = None

    @classmethod
    def unit(cls) -> "HodgeDiamond":
        """The diamond of a point."""
        return cls({(0, 0): 1})

    @classmethod
    def empty(cls) -> "HodgeDiamond":
        return cls()

    @classmethod
    def lefschetz(cls, m: int = 1) -> "HodgeDiamond":
        return cls({(m, m): 1})

    def __getitem__(self, bidegree: Bidegree) -> int:
        return self._entries.get(tuple(bidegree), 0)

    def __iter__(self) -> Iterator[Bidegree]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __bool__(self) -> bool:
        return bool(self._entries)

    def items(self):
        return self._entries.items()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HodgeDiamond):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._entries.items()))
        return self._hash

    def __add__(self, other: "HodgeDiamond") -> "HodgeDiamond":
        return direct_sum(self, other, 1)

    def __mul__(self, other: "HodgeDiamond") -> "HodgeDiamond":
        return tensor(self, other)

    def __rmul__(self, k: int) -> "HodgeDiamond":
        if isinstance(k, int):
            return direct_sum(HodgeDiamond(), self, k)
        return NotImplemented

    def __repr__(self) -> str:
        body = ", ".join(f"({p}, {q}): {h}" for (p, q), h in self._entries.items())
        return f"HodgeDiamond({{{body}}})"

    def max_degree(self) -> int:
        """Largest total degree ``p + q`` in the support, -1 when empty."""
        return max((p + q for p, q in self._entries), default=-1)

    def total_dimension(self) -> int:
        return sum(self._entries.values())

    def betti(self) -> tuple[int, ...]:
        """Betti numbers ``b_0, ..., b_top``."""
        b = [0] * (self.max_degree() + 1)
        for (p, q), h in self._entries.items():
            b[p + q] += h
        return tuple(b)

    def euler(self) -> int:
        return sum((-1) ** (p + q) * h for (p, q), h in self._entries.items())

    def is_hodge_symmetric(self) -> bool:
        return all(self[q, p] == h for (p, q), h in self._entries.items())

    def duality_defect(self, dim: int) -> int:
        """Number of bidegrees where ``h^{p,q} != h^{dim-p,dim-q}``."""
        support = set(self._entries) | {(dim - p, dim - q) for p, q in self._entries}
        return sum(1 for p, q in support if self[p, q] != self[dim - p, dim - q])


def _key(bidegree: Bidegree) -> tuple[int, int]:
    p, q = bidegree
    return (p + q, p)


# signed bivariate polynomials as plain dicts, used for intermediate results


def _poly_mul(a: Mapping[Bidegree, int], b: Mapping[Bidegree, int]) -> dict[Bidegree, int]:
    out: dict[Bidegree, int] = {}
    for (p1, q1), h1 in a.items():
        for (p2, q2), h2 in b.items():
            k = (p1 + p2, q1 + q2)
            out[k] = out.get(k, 0) + h1 * h2
    return {k: v for k, v in out.items() if v}


def _to_diamond(poly: Mapping[Bidegree, int], what: str) -> HodgeDiamond:
    neg = {k: v for k, v in poly.items() if v < 0}
    if neg:
        raise ArithmeticError(f"{what} produced negative entries {neg}")
    return HodgeDiamond(poly)


def diamond_of_abelian_surface() -> HodgeDiamond:
    """Hodge diamond of an abelian surface: ``h^{p,q} = C(2,p) C(2,q)``."""
    return HodgeDiamond({(p, q): comb(2, p) * comb(2, q) for p in range(3) for q in range(3)})


def direct_sum(a: HodgeDiamond, b: HodgeDiamond, mult: int = 1) -> HodgeDiamond:
    """Entrywise ``a + mult * b``."""
    if mult < 0:
        raise ValueError(f"multiplicity must be nonnegative, got {mult}")
    out = dict(a.items())
    if mult:
        for k, h in b.items():
            out[k] = out.get(k, 0) + mult * h
    return HodgeDiamond(out)


def tensor(a: HodgeDiamond, b: HodgeDiamond) -> HodgeDiamond:
    """Kunneth product: convolution of the two entry maps."""
    return HodgeDiamond(_poly_mul(dict(a.items()), dict(b.items())))


def tate_twist(a: HodgeDiamond, m: int) -> HodgeDiamond:
    """Tensor with ``L^m``: move every entry from ``(p, q)`` to ``(p+m, q+m)``."""
    if m < 0:
        raise ValueError(f"twist must be nonnegative, got {m}")
    return HodgeDiamond({(p + m, q + m): h for (p, q), h in a.items()})


def symmetric_product_series(a: HodgeDiamond, max_k: int) -> list[HodgeDiamond]:
    """``[Sym^0 a, ..., Sym^max_k a]`` from the Macdonald product formula.

    Each even class of multiplicity ``h`` contributes ``(1 - z m)^(-h)`` and
    each odd class ``(1 + z m)^h``, where ``m = x^p y^q``; the product is
    truncated at ``z^max_k``.
    """
    if max_k < 0:
        raise ValueError(f"max_k must be nonnegative, got {max_k}")
    # series[k] is the z^k coefficient, a polynomial in x, y
    series: list[dict[Bidegree, int]] = [{(0, 0): 1}] + [{} for _ in range(max_k)]
    for (p, q), h in a.items():
        if (p + q) % 2 == 0:
            coeffs = [comb(h + j - 1, j) for j in range(max_k + 1)]
        else:
            coeffs = [comb(h, j) for j in range(max_k + 1)]
        factor = [(j, (j * p, j * q), c) for j, c in enumerate(coeffs) if c]
        new: list[dict[Bidegree, int]] = [{} for _ in range(max_k + 1)]
        for k, poly in enumerate(series):
            for (x, y), v in poly.items():
                for j, (dp, dq), c in factor:
                    if k + j > max_k:
                        break
                    key = (x + dp, y + dq)
                    new[k + j][key] = new[k + j].get(key, 0) + v * c
        series = new
    return [HodgeDiamond(s) for s in series]


def _adams(a: HodgeDiamond, r: int) -> dict[Bidegree, int]:
    # super Adams operation: odd classes pick up (-1)^(r-1)
    sign = 1 if r % 2 else -1
    return {(r * p, r * q): h if (p + q) % 2 == 0 else sign * h for (p, q), h in a.items()}


def sym_power(a: HodgeDiamond, k: int) -> HodgeDiamond:
    """Super symmetric power ``Sym^k a`` via the Newton recurrence.

    Even classes are symmetrised, odd classes antisymmetrised, so for a single
    odd class ``Sym^2`` vanishes:

    >>> sym_power(HodgeDiamond({(1, 0): 1}), 2)
    HodgeDiamond({})
    """
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    powers: list[dict[Bidegree, int]] = [{(0, 0): 1}]
    adams = [None] + [_adams(a, r) for r in range(1, k + 1)]
    for j in range(1, k + 1):
        acc: dict[Bidegree, int] = {}
        for r in range(1, j + 1):
            for key, v in _poly_mul(adams[r], powers[j - r]).items():
                acc[key] = acc.get(key, 0) + v
        nxt = {}
        for key, v in acc.items():
            quo, rem = divmod(v, j)
            if rem:
                raise ArithmeticError(f"Newton recurrence not integral at {key}")
            if quo:
                nxt[key] = quo
        powers.append(nxt)
    return _to_diamond(powers[k], f"Sym^{k}")


def exact_divide(num: HodgeDiamond, den: HodgeDiamond) -> HodgeDiamond:
    """The diamond ``q`` with ``tensor(q, den) == num``.

    Synthetic division in the monomial order (total degree, then ``p``).
    Raises InexactDivisionError when the quotient would be fractional,
    negative, or leave a remainder.
    """
    d00 = den[0, 0]
    if d00 < 1:
        raise ValueError("divisor must have a positive (0, 0) entry")
    if not num:
        return HodgeDiamond()
    max_p = max(p for p, _ in num) - max(p for p, _ in den)
    max_q = max(q for _, q in num) - max(q for _, q in den)
    rem: dict[Bidegree, int] = dict(num.items())
    quot: dict[Bidegree, int] = {}
    den_items = list(den.items())
    while rem:
        a, b = lead = min(rem, key=_key)
        c = rem[lead]
        if a > max_p or b > max_q:
            raise InexactDivisionError(f"nonzero remainder {c} at bidegree {lead}")
        qc, r = divmod(c, d00)
        if r:
            raise InexactDivisionError(f"fractional quotient {c}/{d00} at bidegree {lead}")
        if qc < 0:
            raise InexactDivisionError(f"negative quotient {qc} at bidegree {lead}")
        quot[lead] = qc
        for (p, q), h in den_items:
            k = (a + p, b + q)
            v = rem.get(k, 0) - qc * h
            if v:
                rem[k] = v
            else:
                rem.pop(k, None)
    return HodgeDiamond(quot)


@dataclass(frozen=True)
class NumericalInvariants:
    betti: tuple[int, ...]
    euler: int
    hodge_symmetric: bool
    duality_defect: int | None


def numerical_invariants(a: HodgeDiamond, dim: int | None = None) -> NumericalInvariants:
    """Betti vector, Euler characteristic and symmetry data of a diamond.

    ``dim`` is the complex dimension used for the duality check; without it
    the defect is reported as None.
    """
    return NumericalInvariants(
        betti=a.betti(),
        euler=a.euler(),
        hodge_symmetric=a.is_hodge_symmetric(),
        duality_defect=None if dim is None else a.duality_defect(dim),
    )
