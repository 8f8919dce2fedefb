"""Closed-form extremal bounds over cacti with n vertices and k pendant vertices.

Five results are covered:

* T1: lower bound on the first multiplicative index (any ``c > 0``);
* T2: upper bound on the first index when ``n <= k + 3``;
* T3: upper bound on the first index for ``k = 0, n >= 4`` plus a
  structural necessary condition on maximisers when ``k >= 1, n >= k + 4``;
* T4: lower bound on the second multiplicative index;
* T5: upper bound on the second multiplicative index.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .graph_core import CactusGraph, cycle_links
from .indices import ExponentLike, IndexValue, as_exponent


class Theorem(str, Enum):
    T1 = "T1"
    T2 = "T2"
    T3 = "T3"
    T4 = "T4"
    T5 = "T5"


THEOREM_INDEX = {
    Theorem.T1: ("pi1", "lower"),
    Theorem.T2: ("pi1", "upper"),
    Theorem.T3: ("pi1", "upper"),
    Theorem.T4: ("pi2", "lower"),
    Theorem.T5: ("pi2", "upper"),
}


class InadmissibleError(ValueError):
    pass


def class_is_nonempty(n: int, k: int) -> bool:
    """Whether some cactus has ``n`` vertices and exactly ``k`` pendant vertices."""
    if n == 1:
        return k == 0
    if n == 2:
        return k == 2
    if n < 1:
        return False
    if k == 0:
        return True
    if k == 1:
        return n >= 4
    return 2 <= k <= n - 1


def applies(theorem: Theorem | str, n: int, k: int) -> bool:
    """Whether the theorem's closed-form bound is defined at ``(n, k)``."""
    t = Theorem(theorem)
    if n < 3 or not class_is_nonempty(n, k):
        return False
    if t is Theorem.T2:
        return n - k in (1, 2, 3)
    if t is Theorem.T3:
        return k == 0 and n >= 4
    return True


def _require(theorem: Theorem, n: int, k: int) -> None:
    if not applies(theorem, n, k):
        raise InadmissibleError(f"{theorem.value} does not apply at n={n}, k={k}")


def _seq(*runs: tuple[int, int]) -> tuple[int, ...]:
    out: list[int] = []
    for value, count in runs:
        out.extend([value] * count)
    return tuple(sorted(out, reverse=True))


@dataclass(frozen=True)
class BoundSpec:
    theorem: Theorem
    direction: str  # "lower" | "upper"
    index: str  # "pi1" | "pi2"
    n: int
    k: int
    c: Fraction
    value: IndexValue
    sequences: tuple[tuple[int, ...], ...]
    notes: tuple[str, ...] = field(default=())

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem.value,
            "direction": self.direction,
            "index": self.index,
            "n": self.n,
            "k": self.k,
            "c": str(self.c),
            "value": self.value.to_json(),
            "sequences": [list(s) for s in self.sequences],
            "notes": list(self.notes),
        }


def _spec(theorem: Theorem, n: int, k: int, c: ExponentLike,
          value: IndexValue, seqs: list[tuple[int, ...]], notes: tuple[str, ...] = ()) -> BoundSpec:
    index, direction = THEOREM_INDEX[theorem]
    return BoundSpec(theorem, direction, index, n, k, as_exponent(c), value, tuple(seqs), notes)


def theorem1_lower(n: int, k: int, c: ExponentLike = 1) -> BoundSpec:
    _require(Theorem.T1, n, k)
    if k <= 1:
        value = IndexValue([(3, k), (2, n - 2 * k)], c)
        seq = _seq((3, k), (2, n - 2 * k), (1, k))
    else:
        value = IndexValue([(2, n - k - 1), (k, 1)], c)
        seq = _seq((k, 1), (2, n - k - 1), (1, k))
    return _spec(Theorem.T1, n, k, c, value, [seq])


def theorem2_upper(n: int, k: int, c: ExponentLike = 1) -> BoundSpec:
    _require(Theorem.T2, n, k)
    if n == k + 1:
        parts = [k]
    elif n == k + 2:
        parts = [-(-k // 2) + 1, k // 2 + 1]
    else:
        hi, lo = -(-k // 3), k // 3
        parts = [hi + 2, lo + 2, k - hi - lo + 2]
    value = IndexValue([(d, 1) for d in parts], c)
    seq = _seq(*((d, 1) for d in parts), (1, k))
    notes = ("n = k+3 realised by a triangle with pendants (forced by the degree sum)",) if n == k + 3 else ()
    return _spec(Theorem.T2, n, k, c, value, [seq], notes)


def theorem3_upper_k0(n: int, c: ExponentLike = 1) -> BoundSpec:
    _require(Theorem.T3, n, 0)
    if n == 4:
        value, seq = IndexValue([(2, 4)], c), _seq((2, 4))
    elif n % 2 == 1:
        t = (n - 5) // 2
        value = IndexValue([(2, 3 * t + 6)], c)
        seq = _seq((4, t + 1), (2, t + 4))
    else:
        t = (n - 6) // 2
        value = IndexValue([(2, 3 * t + 4), (9, 1)], c)
        seq = _seq((4, t), (3, 2), (2, t + 4))
    return _spec(Theorem.T3, n, 0, c, value, [seq])


@dataclass(frozen=True)
class Gamma:
    n: int
    k: int

    @property
    def gamma(self) -> Fraction:
        return Fraction(self.k - 2, self.n - self.k)

    @property
    def floor_g(self) -> int:
        return math.floor(self.gamma)

    @property
    def ceil_g(self) -> int:
        return math.ceil(self.gamma)

    def levels(self) -> tuple[tuple[int, int], tuple[int, int]]:
        """``((high_degree, y2), (low_degree, y1))`` for the balanced minimiser."""
        n, k, f = self.n, self.k, self.floor_g
        y2 = k - 2 - f * (n - k)
        y1 = n - 2 * k + 2 + f * (n - k)
        return (2 + self.ceil_g, y2), (2 + f, y1)


def theorem4_lower(n: int, k: int) -> BoundSpec:
    _require(Theorem.T4, n, k)
    if k <= 1:
        value = IndexValue([(3, 3 * k), (2, 2 * (n - 2 * k))])
        seq = _seq((3, k), (2, n - 2 * k), (1, k))
        return _spec(Theorem.T4, n, k, 1, value, [seq])
    (hi, y2), (lo, y1) = Gamma(n, k).levels()
    value = IndexValue([(hi, hi * y2), (lo, lo * y1)])
    seq = _seq((hi, y2), (lo, y1), (1, k))
    return _spec(Theorem.T4, n, k, 1, value, [seq])


def theorem5_upper(n: int, k: int) -> BoundSpec:
    _require(Theorem.T5, n, k)
    top = n - 2 if (n - k) % 2 == 0 else n - 1
    value = IndexValue([(top, top), (2, 2 * (n - k - 1))])
    seq = _seq((top, 1), (2, n - k - 1), (1, k))
    return _spec(Theorem.T5, n, k, 1, value, [seq])


def bound_for(theorem: Theorem | str, n: int, k: int, c: ExponentLike = 1) -> BoundSpec:
    t = Theorem(theorem)
    if t is Theorem.T1:
        return theorem1_lower(n, k, c)
    if t is Theorem.T2:
        return theorem2_upper(n, k, c)
    if t is Theorem.T3:
        if k != 0:
            raise InadmissibleError("T3 has a closed form only for k = 0")
        return theorem3_upper_k0(n, c)
    if t is Theorem.T4:
        return theorem4_lower(n, k)
    return theorem5_upper(n, k)


# --------------------------------------------------------------------------
# structural condition on maximisers with k >= 1


@dataclass(frozen=True)
class Theorem3Check:
    ok: bool
    clause_i: bool
    clause_ii: bool
    failures: tuple[str, ...]

    def __bool__(self) -> bool:
        return self.ok


def theorem3_condition_check(g: CactusGraph) -> Theorem3Check:
    """Check that ``g`` satisfies clause (i) or clause (ii).

    (i)  all non-pendant degrees differ pairwise by at most 1;
    (ii) all non-pendant degrees lie in {2, 3, 4}, no cycle is longer than 3,
         every dense path has length 1 except at most one of length 2, and
         every path joining exactly two cycles has length 0 except at most
         one of length 1.
    """
    n, k = g.n, g.k
    if k < 1 or n < k + 4:
        raise ValueError(f"condition defined for k >= 1 and n >= k + 4, got n={n}, k={k}")
    inner = [d for d in g.degrees if d > 1]
    failures: list[str] = []

    clause_i = max(inner) - min(inner) <= 1
    if not clause_i:
        failures.append(f"(i): non-pendant degrees {min(inner)} and {max(inner)} differ by more than 1")

    ii: list[str] = []
    bad = sorted({d for d in inner if d not in (2, 3, 4)})
    if bad:
        ii.append(f"(ii): non-pendant degrees {bad} outside {{2,3,4}}")
    long_cycles = [len(c) for c in g.cycles if len(c) > 3]
    if long_cycles:
        ii.append(f"(ii): cycles of length {long_cycles}")
    lengths = [dp.length for dp in g.dense_paths]
    if any(L > 2 for L in lengths) or lengths.count(2) > 1:
        ii.append(f"(ii): dense path lengths {sorted(lengths)}")
    link_lengths = [len(p) - 1 for _, _, p in cycle_links(g)]
    long_links = [L for L in link_lengths if L > 0]
    if len(long_links) > 1 or any(L > 1 for L in long_links):
        ii.append(f"(ii): cycle-joining path lengths {sorted(long_links)}")
    clause_ii = not ii
    return Theorem3Check(clause_i or clause_ii, clause_i, clause_ii, tuple(failures + ii))
