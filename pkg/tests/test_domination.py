import random

import pytest

from domgraph import (
    InvalidSubsetError,
    TooLargeError,
    count_by_cardinality,
    count_maximal_minimal_sets,
    count_minimum_sets,
    domination_number,
    enumerate_dominating,
    is_dominating,
    is_minimal_dominating,
    make_family,
    total_count,
    upper_domination_number,
)
from domgraph.domination import counts_csv
from domgraph.graphs import graph_from_edges


def random_graph(rng, n):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4]
    return graph_from_edges(n, edges)


def test_is_dominating_examples():
    assert is_dominating(make_family("path", 3), [2])
    assert not is_dominating(make_family("path", 4), [1])
    k5 = make_family("complete", 5)
    for bits in range(1, 32):
        assert is_dominating(k5, bits)
    assert not is_dominating(k5, 0)


def test_is_dominating_range_check():
    with pytest.raises(InvalidSubsetError):
        is_dominating(make_family("path", 3), 0b1000)


def test_is_minimal_dominating_examples():
    assert is_minimal_dominating(make_family("path", 5), [1, 3, 5])
    assert not is_minimal_dominating(make_family("path", 3), [1, 2, 3])
    assert is_minimal_dominating(make_family("cycle", 4), [1, 3])


def test_enumerate_p3_exact_order():
    fam = enumerate_dominating(make_family("path", 3), 3)
    assert fam.to_json_obj() == [[2], [1, 2], [1, 3], [2, 3], [1, 2, 3]]
    assert fam.by_card == (0, 1, 3, 1)


def test_enumerate_counts():
    assert len(enumerate_dominating(make_family("complete", 3), 3)) == 7
    assert len(enumerate_dominating(make_family("cycle", 4), 4)) == 11
    assert len(enumerate_dominating(make_family("complete", 3), 1)) == 3


def test_enumerate_k_validation():
    g = make_family("path", 4)
    with pytest.raises(ValueError):
        enumerate_dominating(g, 0)
    with pytest.raises(ValueError):
        enumerate_dominating(g, 5)


def test_enumeration_cap():
    g = make_family("path", 10)
    with pytest.raises(TooLargeError):
        total_count(g, cap=9)
    assert total_count(g, cap=10) == 355


def test_scan_and_prune_agree():
    rng = random.Random(42)
    graphs = [make_family(k, n) for k in ("path", "complete", "empty") for n in (1, 2, 5, 8)]
    graphs += [make_family("cycle", n) for n in (3, 5, 8)]
    graphs += [random_graph(rng, rng.randint(2, 9)) for _ in range(40)]
    for g in graphs:
        for k in {1, (g.n + 1) // 2, g.n}:
            a = enumerate_dominating(g, k, method="scan")
            b = enumerate_dominating(g, k, method="prune")
            assert a == b


def test_family_sorted_and_unique():
    fam = enumerate_dominating(make_family("cycle", 6), 6)
    keys = [(s.card, s.bits) for s in fam]
    assert keys == sorted(keys)
    assert len(set(keys)) == len(keys)
    assert sum(fam.by_card) == len(fam)


def test_every_member_dominates_and_supersets_dominate():
    rng = random.Random(5)
    for _ in range(15):
        g = random_graph(rng, rng.randint(2, 8))
        fam = enumerate_dominating(g, g.n)
        for s in fam.sets:
            assert is_dominating(g, s)
            for v in range(g.n):
                assert is_dominating(g, s.bits | (1 << v))


def test_domination_number_examples():
    assert domination_number(make_family("path", 7)) == 3
    assert domination_number(make_family("complete", 9)) == 1
    assert domination_number(make_family("cycle", 6)) == 2


def test_gamma_formulas_small():
    for n in range(1, 16):
        assert domination_number(make_family("path", n)) == -(-n // 3)
    for n in range(3, 16):
        assert domination_number(make_family("cycle", n)) == -(-n // 3)


def test_upper_domination_examples():
    assert upper_domination_number(make_family("path", 7)) == 4
    assert upper_domination_number(make_family("cycle", 8)) == 4
    assert upper_domination_number(make_family("complete", 5)) == 1


def test_count_minimum_sets_examples():
    assert count_minimum_sets(make_family("path", 6)) == 1
    assert count_minimum_sets(make_family("path", 7)) == 8
    assert count_minimum_sets(make_family("path", 8)) == 4


def test_count_maximal_minimal_sets_oracle_values():
    # P_7 and odd paths have the unique alternating Gamma-set; the even-path
    # and odd-cycle counts below are exhaustive-enumeration facts (published
    # claims of 2 and n are too small from P_6 / C_7 on, see the verify
    # suite's erratum records).
    assert count_maximal_minimal_sets(make_family("path", 7)) == 1
    assert count_maximal_minimal_sets(make_family("path", 2)) == 2
    assert count_maximal_minimal_sets(make_family("path", 4)) == 4
    assert count_maximal_minimal_sets(make_family("path", 6)) == 6
    assert count_maximal_minimal_sets(make_family("path", 8)) == 9
    assert count_maximal_minimal_sets(make_family("cycle", 4)) == 6
    assert count_maximal_minimal_sets(make_family("cycle", 5)) == 5
    assert count_maximal_minimal_sets(make_family("cycle", 6)) == 2
    assert count_maximal_minimal_sets(make_family("cycle", 7)) == 14
    assert count_maximal_minimal_sets(make_family("cycle", 10)) == 2


def test_maximal_minimal_members_are_minimal():
    g = make_family("path", 6)
    fam = enumerate_dominating(g, 6)
    gamma_upper = upper_domination_number(g)
    witnesses = [
        s for s in fam.sets if s.card == gamma_upper and is_minimal_dominating(g, s)
    ]
    assert len(witnesses) == count_maximal_minimal_sets(g)
    assert {s.vertices() for s in witnesses} >= {(1, 3, 5), (2, 4, 6), (1, 4, 5), (1, 3, 6)}


def test_count_by_cardinality_examples():
    assert count_by_cardinality(make_family("path", 5))[3] == 8
    assert count_by_cardinality(make_family("path", 4))[3] == 4
    assert count_by_cardinality(make_family("path", 6))[5] == 6


def test_count_by_cardinality_boundaries():
    for n in (1, 4, 7, 9):
        g = make_family("path", n)
        counts = count_by_cardinality(g)
        gamma = domination_number(g)
        assert all(c == 0 for c in counts[:gamma])
        assert counts[n] == 1
        assert counts[0] == 0


def test_total_count_examples():
    assert total_count(make_family("complete", 4)) == 15
    assert total_count(make_family("path", 4)) == 9
    assert total_count(make_family("cycle", 3)) == 7


def test_total_count_parity_on_random_connected():
    rng = random.Random(11)
    done = 0
    while done < 30:
        g = random_graph(rng, rng.randint(2, 12))
        from domgraph import is_connected

        if not is_connected(g):
            continue
        assert total_count(g) % 2 == 1
        done += 1


def test_counts_csv_format():
    counts = count_by_cardinality(make_family("path", 4))
    assert counts_csv(4, counts) == "n,j,count\n4,2,4\n4,3,4\n4,4,1\n"
