"""Degree-based indices: Zagreb, Narumi-Katayama and the multiplicative Zagreb indices.

Multiplicative values are kept factored as ``(base, exponent)`` pairs raised
to a rational power ``c``, so ordering is exact for every ``c > 0``:
``B1**(p1/q1)`` vs ``B2**(p2/q2)`` is decided by ``B1**(p1*q2)`` vs
``B2**(p2*q1)`` in integers.
"""

from __future__ import annotations

import math
from collections import Counter
from fractions import Fraction
from functools import cached_property, total_ordering
from typing import Iterable, Union

from .graph_core import CactusGraph, Graph

AnyGraph = Union[Graph, CactusGraph]
ExponentLike = Union[int, str, Fraction]

LOG_TOL = 1e-9


def as_exponent(c: ExponentLike) -> Fraction:
    """Parse ``c`` (int, ``"p/q"`` string or Fraction) and require ``c > 0``."""
    value = Fraction(c)
    if value <= 0:
        raise ValueError(f"exponent must be positive, got {value}")
    return value


@total_ordering
class IndexValue:
    """``(prod base**exp) ** power`` with integer bases/exponents and rational power."""

    __slots__ = ("factors", "power", "__dict__")

    def __init__(self, factors: Iterable[tuple[int, int]], power: ExponentLike = 1):
        acc: Counter[int] = Counter()
        for base, exp in factors:
            if base < 0 or exp < 0:
                raise ValueError(f"bad factor ({base}, {exp})")
            if exp and base != 1:
                acc[base] += exp
        self.factors: tuple[tuple[int, int], ...] = tuple(sorted(acc.items()))
        self.power = as_exponent(power)

    @classmethod
    def from_degrees(cls, degrees: Iterable[int], power: ExponentLike = 1) -> "IndexValue":
        return cls(Counter(degrees).items(), power)

    @cached_property
    def base_product(self) -> int:
        return math.prod(b ** e for b, e in self.factors)

    @property
    def is_zero(self) -> bool:
        return any(b == 0 for b, _ in self.factors)

    @cached_property
    def exact_value(self) -> int | None:
        """Integer value, or None when ``power`` is not an integer."""
        if self.power.denominator == 1:
            return self.base_product ** self.power.numerator
        if self.base_product in (0, 1):
            return self.base_product
        return None

    @cached_property
    def log_value(self) -> float:
        if self.is_zero:
            return -math.inf
        return float(self.power) * sum(e * math.log(b) for b, e in self.factors)

    def _key_pair(self, other: "IndexValue") -> tuple[int, int]:
        p1, q1 = self.power.numerator, self.power.denominator
        p2, q2 = other.power.numerator, other.power.denominator
        e1, e2 = p1 * q2, p2 * q1
        g = math.gcd(e1, e2)
        return self.base_product ** (e1 // g), other.base_product ** (e2 // g)

    def compare(self, other: "IndexValue") -> int:
        a, b = self._key_pair(other)
        return (a > b) - (a < b)

    def compare_log(self, other: "IndexValue", tol: float = LOG_TOL) -> int:
        """Log-domain comparison; differences within ``tol`` count as equal."""
        diff = self.log_value - other.log_value
        if math.isnan(diff) or abs(diff) <= tol:
            return 0
        return 1 if diff > 0 else -1

    @staticmethod
    def _coerce(other: object) -> "IndexValue | None":
        if isinstance(other, IndexValue):
            return other
        if isinstance(other, int) and other >= 0:
            return IndexValue([(other, 1)])
        return None

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.compare(o) == 0

    def __lt__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.compare(o) < 0

    @cached_property
    def prime_exponents(self) -> tuple[tuple[int, Fraction], ...]:
        """Unique-factorisation key: equal values give equal keys."""
        if self.is_zero:
            return ((0, Fraction(1)),)
        acc: Counter[int] = Counter()
        for base, exp in self.factors:
            for p, e in _factorize(base).items():
                acc[p] += e * exp
        return tuple((p, e * self.power) for p, e in sorted(acc.items()))

    def __hash__(self) -> int:
        return hash(self.prime_exponents)

    def __repr__(self) -> str:
        body = " * ".join(f"{b}^{e}" for b, e in self.factors) or "1"
        power = "" if self.power == 1 else f" ^ ({self.power})"
        return f"IndexValue({body}{power})"

    def __str__(self) -> str:
        exact = self.exact_value
        return str(exact) if exact is not None else f"exp({self.log_value:.6f})"

    def to_json(self) -> dict:
        def exp_field(e: int) -> int | str:
            v = e * self.power
            return v.numerator if v.denominator == 1 else str(v)

        exact = self.exact_value
        log = self.log_value
        return {
            "factors": [[b, exp_field(e)] for b, e in self.factors],
            "log": None if math.isinf(log) else log,
            "exact": None if exact is None else str(exact),
        }


def _factorize(m: int) -> Counter[int]:
    out: Counter[int] = Counter()
    p = 2
    while p * p <= m:
        while m % p == 0:
            out[p] += 1
            m //= p
        p += 1
    if m > 1:
        out[m] += 1
    return out


def _degrees(g: AnyGraph) -> tuple[int, ...]:
    return g.degrees


def first_zagreb(g: AnyGraph) -> int:
    return sum(d * d for d in _degrees(g))


def second_zagreb(g: AnyGraph) -> int:
    deg = _degrees(g)
    return sum(deg[u] * deg[v] for u, v in g.edges)


def narumi_katayama(g: AnyGraph) -> int:
    """Product of degrees; 0 if the graph has an isolated vertex."""
    return math.prod(_degrees(g))


def multiplicative_zagreb_1(g: AnyGraph, c: ExponentLike = 1) -> IndexValue:
    return IndexValue.from_degrees(_degrees(g), c)


def multiplicative_zagreb_2(g: AnyGraph) -> IndexValue:
    """Product over edges of ``d(u) d(v)``, held in the vertex form ``prod d(v)**d(v)``."""
    return IndexValue((d, d) for d in _degrees(g))


def pi2_edge_product(g: AnyGraph) -> int:
    """Edge-form second multiplicative index, computed directly as an integer."""
    deg = _degrees(g)
    return math.prod(deg[u] * deg[v] for u, v in g.edges)


def compare_pi1(a: IndexValue, b: IndexValue) -> int:
    """Exact ordering of two first-index values sharing the same ``c``.

    ``x -> x**c`` is increasing, so this compares the underlying degree
    products only.
    """
    if a.power != b.power:
        raise ValueError(f"mismatched exponents {a.power} and {b.power}")
    x, y = a.base_product, b.base_product
    return (x > y) - (x < y)


def fact1_ratio(x: int, m: int) -> Fraction:
    """``x / (x + m)``."""
    if x < 0 or m < 1:
        raise ValueError("need x >= 0 and m >= 1")
    return Fraction(x, x + m)


def fact2_ratio(x: int, m: int) -> Fraction:
    """``x**x / (x + m)**(x + m)`` with ``0**0 == 1``."""
    if x < 0 or m < 1:
        raise ValueError("need x >= 0 and m >= 1")
    return Fraction(x ** x, (x + m) ** (x + m))


def index_value(g: AnyGraph, index: str, c: ExponentLike = 1) -> IndexValue:
    """Dispatch on ``index`` in ``{"pi1", "pi2"}``."""
    if index == "pi1":
        return multiplicative_zagreb_1(g, c)
    if index == "pi2":
        return multiplicative_zagreb_2(g)
    raise ValueError(f"unknown index {index!r}")


def all_indices(g: AnyGraph, c: ExponentLike = 1) -> dict:
    return {
        "M1": first_zagreb(g),
        "M2": second_zagreb(g),
        "NK": narumi_katayama(g),
        "Pi1": multiplicative_zagreb_1(g, c),
        "Pi2": multiplicative_zagreb_2(g),
    }
