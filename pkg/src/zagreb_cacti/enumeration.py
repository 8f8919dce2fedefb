"""Isomorph-free enumeration of small cacti and brute-force theorem checks.

Two generators are provided.  :func:`enumerate_cacti` grows cacti by
attaching end blocks (a pendant edge or a cycle) to smaller cacti and
deduplicates by :func:`canonical_form`.  :func:`filter_enumerate` runs
through every labelled graph, canonicalises by minimising over all vertex
permutations (vectorised with numpy), and keeps the connected cacti.  The
second shares no code with the first beyond :func:`is_cactus` and is only
practical for n <= 6.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .bounds import (
    BoundSpec, Theorem, THEOREM_INDEX, applies, bound_for, class_is_nonempty,
    theorem3_condition_check,
)
from .canonical import canonical_graph
from .formats import from_graph6, to_graph6
from .graph_core import CactusGraph, Graph, is_cactus
from .indices import ExponentLike, IndexValue, as_exponent, index_value

N_CAP = 9
ALL = None


class CapExceededError(ValueError):
    pass


def _check_cap(n: int) -> None:
    if n > N_CAP:
        raise CapExceededError(f"enumeration is capped at n <= {N_CAP}, got n={n}")


def default_jobs() -> int:
    return int(os.environ.get("ZC_JOBS", "1") or 1)


@dataclass(frozen=True)
class EnumerationResult:
    n: int
    k: int | None
    graphs: tuple[CactusGraph, ...]

    @property
    def count(self) -> int:
        return len(self.graphs)

    def graph6_lines(self) -> list[str]:
        return [to_graph6(g.graph) for g in self.graphs]


# --------------------------------------------------------------------------
# constructive generation


def _canon6(g: Graph) -> str:
    return to_graph6(canonical_graph(g))


def _canon_batch(graphs: Sequence[Graph]) -> list[str]:
    return [_canon6(g) for g in graphs]


@lru_cache(maxsize=None)
def _level(n: int, jobs: int = 1) -> tuple[str, ...]:
    """Sorted canonical graph6 strings of all cacti on exactly ``n`` vertices."""
    if n == 1:
        return (to_graph6(Graph(1)),)
    candidates: list[Graph] = []
    for m in range(1, n):
        step = n - m  # vertices added: 1 for an edge, length-1 for a cycle
        for code in _level(m, jobs):
            g = from_graph6(code)
            for v in range(m):
                if step == 1:
                    candidates.append(Graph(n, list(g.edges) + [(v, m)]))
                if step >= 2:
                    ring = [v] + list(range(m, n))
                    L = len(ring)
                    candidates.append(Graph(n, list(g.edges) + [(ring[i], ring[(i + 1) % L]) for i in range(L)]))
    if jobs > 1 and len(candidates) > 200:
        chunks = [candidates[i::jobs] for i in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            forms = {f for part in pool.map(_canon_batch, chunks) for f in part}
    else:
        forms = {_canon6(g) for g in candidates}
    return tuple(sorted(forms))


def enumerate_cacti(n: int, k: int | None = ALL, jobs: int | None = None) -> EnumerationResult:
    """One representative per isomorphism class of cacti in the class (n, k).

    ``k=None`` means every pendant count.  Representatives are in canonical
    labelling, ordered by graph6.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    _check_cap(n)
    jobs = default_jobs() if jobs is None else jobs
    graphs = [CactusGraph(from_graph6(code)) for code in _level(n, max(1, jobs))]
    if k is not None:
        graphs = [g for g in graphs if g.k == k]
    return EnumerationResult(n, k, tuple(graphs))


# --------------------------------------------------------------------------
# independent filter oracle


def filter_enumerate(n: int, k: int | None = ALL) -> list[Graph]:
    """Brute force: all labelled graphs, min over all n! relabellings, keep cacti."""
    if n > 6:
        raise CapExceededError("filter oracle is limited to n <= 6")
    if n == 1:
        reps = [Graph(1)]
    else:
        pairs = [(i, j) for j in range(1, n) for i in range(j)]
        pos = {p: b for b, p in enumerate(pairs)}
        m = len(pairs)
        perms = list(itertools.permutations(range(n)))
        # perm_idx[p, b] = bit position that pair b moves to under permutation p
        perm_idx = np.array(
            [[pos[tuple(sorted((p[i], p[j])))] for i, j in pairs] for p in perms], dtype=np.int64
        )
        codes = np.arange(1 << m, dtype=np.int64)
        bits = (codes[:, None] >> np.arange(m)) & 1
        best = np.full(codes.shape, np.iinfo(np.int64).max, dtype=np.int64)
        weights = np.int64(1) << np.arange(m, dtype=np.int64)
        for row in perm_idx:
            image = bits @ (weights[row])
            np.minimum(best, image, out=best)
        reps = []
        for code in np.unique(best):
            reps.append(Graph(n, [pairs[b] for b in range(m) if (int(code) >> b) & 1]))
    out = [g for g in reps if is_cactus(g)]
    if k is not None:
        out = [g for g in out if sum(1 for d in g.degrees if d == 1) == k]
    return out


# --------------------------------------------------------------------------
# extremal census and verification


def extremal_census(n: int, k: int, index: str, direction: str, c: ExponentLike = 1,
                    jobs: int | None = None) -> tuple[IndexValue | None, list[CactusGraph]]:
    """All isomorphism classes in (n, k) attaining the min or max of ``index``."""
    _check_cap(n)
    if direction not in ("min", "max", "lower", "upper"):
        raise ValueError(f"direction must be min/max, got {direction!r}")
    if not class_is_nonempty(n, k):
        return None, []
    graphs = enumerate_cacti(n, k, jobs).graphs
    vals = [index_value(g, index, c) for g in graphs]
    best = min(vals) if direction in ("min", "lower") else max(vals)
    return best, [g for g, v in zip(graphs, vals) if v == best]


@dataclass
class VerificationReport:
    theorem: Theorem
    n: int
    k: int
    c: Fraction
    predicted: BoundSpec | None
    observed_extreme: IndexValue | None
    observed_sequences: list[tuple[int, ...]]
    verdict: str  # "confirmed" | "mismatch"
    witnesses: list[CactusGraph] = field(default_factory=list)
    detail: str = ""

    @property
    def confirmed(self) -> bool:
        return self.verdict == "confirmed"

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem.value,
            "n": self.n,
            "k": self.k,
            "c": str(self.c),
            "predicted": None if self.predicted is None else self.predicted.to_json(),
            "observed": None if self.observed_extreme is None else self.observed_extreme.to_json(),
            "observed_sequences": [list(s) for s in self.observed_sequences],
            "verdict": self.verdict,
            "witness_count": len(self.witnesses),
            "witnesses": [to_graph6(g.graph) for g in self.witnesses],
            "detail": self.detail,
        }

    def csv_row(self) -> list[str]:
        pred = "" if self.predicted is None else str(self.predicted.value)
        obs = "" if self.observed_extreme is None else str(self.observed_extreme)
        return [self.theorem.value, str(self.n), str(self.k), str(self.c), pred, obs,
                self.verdict, str(len(self.witnesses))]


CSV_HEADER = ["theorem", "n", "k", "c", "predicted", "observed", "verdict", "witness_count"]


def _verify_one(t: Theorem, n: int, k: int, c: Fraction, jobs: int | None) -> VerificationReport:
    index, direction = THEOREM_INDEX[t]
    best, winners = extremal_census(n, k, index, "min" if direction == "lower" else "max", c, jobs)
    seqs = sorted({g.degree_sequence() for g in winners}, reverse=True)
    if t is Theorem.T3 and k >= 1:
        fails = [(g, chk) for g in winners if not (chk := theorem3_condition_check(g))]
        detail = "; ".join(f"{to_graph6(g.graph)}: {' | '.join(chk.failures)}" for g, chk in fails)
        return VerificationReport(t, n, k, c, None, best, seqs,
                                  "mismatch" if fails else "confirmed", winners, detail)
    spec = bound_for(t, n, k, c)
    value_ok = best == spec.value
    seq_ok = set(seqs) == set(spec.sequences)
    problems = []
    if not value_ok:
        problems.append(f"value: predicted {spec.value}, observed {best}")
    if not seq_ok:
        problems.append(f"sequences: predicted {list(spec.sequences)}, observed {seqs}")
    return VerificationReport(t, n, k, c, spec, best, seqs,
                              "confirmed" if value_ok and seq_ok else "mismatch", winners,
                              "; ".join(problems))


def verification_cases(theorem: Theorem | str, n_max: int) -> list[tuple[int, int]]:
    t = Theorem(theorem)
    cases = []
    for n in range(3, n_max + 1):
        for k in range(0, n):
            if t is Theorem.T3:
                if class_is_nonempty(n, k) and n >= k + 4:
                    cases.append((n, k))
            elif applies(t, n, k):
                cases.append((n, k))
    return cases


def verify_theorem(theorem: Theorem | str, n_max: int,
                   c_values: Sequence[ExponentLike] = (1,), jobs: int | None = None) -> list[VerificationReport]:
    """Compare enumerated extrema with the closed forms for every applicable (n, k)."""
    _check_cap(n_max)
    t = Theorem(theorem)
    cs = [as_exponent(c) for c in c_values]
    if t in (Theorem.T4, Theorem.T5):
        cs = [Fraction(1)]  # the second index has no exponent
    reports = []
    for n, k in verification_cases(t, n_max):
        for c in cs:
            reports.append(_verify_one(t, n, k, c, jobs))
    return reports
