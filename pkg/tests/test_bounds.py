from fractions import Fraction

import pytest

from zagreb_cacti.bounds import (
    Gamma, InadmissibleError, Theorem, applies, bound_for, class_is_nonempty, theorem3_condition_check,
)
from zagreb_cacti.graph_core import CactusGraph, Graph
from zagreb_cacti.indices import IndexValue


def value_from_sequence(index, seq, c):
    if index == "pi1":
        return IndexValue([(d, 1) for d in seq], c)
    return IndexValue([(d, d) for d in seq])


def admissible(n_max):
    for t in Theorem:
        for n in range(3, n_max + 1):
            for k in range(n):
                if applies(t, n, k):
                    yield t, n, k


@pytest.mark.parametrize("t,n,k,c,value,seq", [
    ("T1", 6, 3, 1, 12, (3, 2, 2, 1, 1, 1)),
    ("T1", 5, 0, 1, 32, (2,) * 5),
    ("T1", 7, 1, 1, 96, (3, 2, 2, 2, 2, 2, 1)),
    ("T2", 7, 5, 1, 12, (4, 3, 1, 1, 1, 1, 1)),
    ("T2", 7, 4, 1, 36, (4, 3, 3, 1, 1, 1, 1)),
    ("T2", 5, 4, 1, 4, (4, 1, 1, 1, 1)),
    ("T3", 7, 0, 1, 512, (4, 4, 2, 2, 2, 2, 2)),
    ("T3", 8, 0, 1, 1152, (4, 3, 3, 2, 2, 2, 2, 2)),
    ("T3", 4, 0, 2, 256, (2, 2, 2, 2)),
    ("T4", 6, 3, 1, 432, (3, 2, 2, 1, 1, 1)),
    ("T4", 5, 0, 1, 1024, (2,) * 5),
    ("T4", 6, 4, 1, 729, (3, 3, 1, 1, 1, 1)),
    ("T5", 5, 2, 1, 4096, (4, 2, 2, 1, 1)),
    ("T5", 6, 2, 1, 16384, (4, 2, 2, 2, 1, 1)),
    ("T5", 3, 0, 1, 64, (2, 2, 2)),
])
def test_examples(t, n, k, c, value, seq):
    spec = bound_for(t, n, k, c)
    assert spec.value == value
    assert spec.sequences == (seq,)


@pytest.mark.parametrize("c", [1, 2, 3, "1/2"])
def test_values_follow_from_sequences(c):
    for t, n, k in admissible(12):
        if t is Theorem.T3 and k:
            continue
        spec = bound_for(t, n, k, c)
        for seq in spec.sequences:
            assert len(seq) == n and seq.count(1) == k
            assert sum(seq) % 2 == 0
            assert value_from_sequence(spec.index, seq, spec.c) == spec.value


def test_t5_cycle_count_parity():
    # edges - (n - 1) counts cycles; it must match the extremal shape
    for n in range(3, 13):
        for k in range(n):
            if applies("T5", n, k):
                (seq,) = bound_for("T5", n, k).sequences
                cycles = sum(seq) // 2 - (n - 1)
                assert cycles == (n - k - 1) // 2


class TestGamma:
    def test_merged_level(self):
        (hi, y2), (lo, y1) = Gamma(6, 4).levels()
        assert Gamma(6, 4).floor_g == Gamma(6, 4).ceil_g == 1
        assert y2 == 0 and (lo, y1) == (3, 2)
        assert bound_for("T4", 6, 4).value == 729

    def test_levels_balance(self):
        for n in range(4, 13):
            for k in range(2, n):
                if not applies("T4", n, k):
                    continue
                (hi, y2), (lo, y1) = Gamma(n, k).levels()
                assert y1 >= 0 and y2 >= 0 and y1 + y2 == n - k
                assert hi - lo <= 1
                assert hi * y2 + lo * y1 + k == 2 * (n - 1)
                assert Gamma(n, k).gamma == Fraction(k - 2, n - k)


class TestAdmissibility:
    def test_class_nonempty(self):
        assert class_is_nonempty(1, 0) and class_is_nonempty(2, 2)
        assert not class_is_nonempty(4, 4)
        assert not class_is_nonempty(3, 1)
        assert class_is_nonempty(4, 1)

    @pytest.mark.parametrize("t,n,k", [("T2", 8, 3), ("T3", 6, 1), ("T1", 4, 4), ("T5", 2, 2)])
    def test_inadmissible_raises(self, t, n, k):
        with pytest.raises(InadmissibleError):
            bound_for(t, n, k)


class TestTheorem3Condition:
    def test_triangle_chain_with_junction_pendants(self):
        g = CactusGraph(Graph(8, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (0, 6), (3, 7)]))
        chk = theorem3_condition_check(g)
        assert chk and chk.clause_ii and not chk.clause_i

    def test_star_of_triangles_balanced(self):
        es = [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0), (0, 5)]
        nxt = 6
        for v in (1, 2, 3, 4):
            for _ in range(2):
                es.append((v, nxt))
                nxt += 1
        g = CactusGraph(Graph(nxt, es))
        assert sorted(set(d for d in g.degrees if d > 1)) == [4, 5]
        chk = theorem3_condition_check(g)
        assert chk and chk.clause_i

    def test_long_cycle_and_gap_fail_both(self):
        es = [(i, (i + 1) % 5) for i in range(5)] + [(0, j) for j in range(5, 9)]
        chk = theorem3_condition_check(CactusGraph(Graph(9, es)))
        assert not chk
        assert any(f.startswith("(i)") for f in chk.failures)
        assert any(f.startswith("(ii)") for f in chk.failures)

    def test_precondition(self):
        with pytest.raises(ValueError):
            theorem3_condition_check(CactusGraph(Graph(4, [(0, 1), (1, 2), (2, 0), (0, 3)])))
