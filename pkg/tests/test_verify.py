import json

import pytest

from domgraph import verify_suite
from domgraph.verify import (
    _labeled_graph_sweep,
    _random_connected_graph,
    report_to_json_obj,
    suite_parity,
)


def by_check(records):
    return {r.check: r for r in records}


def test_complete_suite_all_pass():
    records = verify_suite("complete", max_n=6)
    assert records and all(r.status == "pass" for r in records)


def test_cycles_suite_flags_the_seed_erratum():
    records = by_check(verify_suite("cycles", max_n=8))
    seed = records["cycle/order-seed-erratum"]
    assert seed.status == "erratum"
    assert seed.expected == [[3, 5]]
    assert seed.observed == [[3, 7]]
    assert records["cycle/order-tribonacci"].status == "pass"
    assert records["cycle/triangle"].status == "pass"


def test_cycles_suite_flags_gamma_set_count_errata():
    records = by_check(verify_suite("cycles", max_n=8))
    assert records["cycle/upper-gamma-set-count/odd"].status == "erratum"
    assert records["cycle/upper-gamma-set-count/even"].status == "erratum"
    assert records["cycle/upper-gamma"].status == "pass"


def test_paths_suite_statuses():
    records = verify_suite("paths", max_n=8)
    statuses = {r.check: r.status for r in records}
    errata = {check for check, status in statuses.items() if status == "erratum"}
    assert errata == {
        "path/upper-gamma-set-count/even",
        "path/gamma-plus-one-binding",
        "path/closed-form-constants",
    }
    assert not [c for c, s in statuses.items() if s == "fail"]
    assert statuses["path/triangle"] == "pass"
    assert statuses["path/distance-2-law"] == "pass"
    assert statuses["path/upper-gamma-set-count/odd"] == "pass"


def test_products_suite_passes():
    records = verify_suite("products", max_n=10)
    assert all(r.status == "pass" for r in records)
    labels = {r.check for r in records}
    assert labels == {"product/join", "product/corona", "product/ladder"}


def test_parity_suite_passes():
    records = suite_parity(max_n=5, seed=1, samples=25, random_max_n=10)
    assert all(r.status == "pass" for r in records)


def test_records_always_carry_both_values():
    for r in verify_suite("all", max_n=5):
        assert r.expected is not None and r.observed is not None
        assert r.status in ("pass", "erratum", "fail")


def test_report_json_serializable():
    records = verify_suite("complete", max_n=4)
    obj = report_to_json_obj(records, "complete", 4)
    text = json.dumps(obj)
    parsed = json.loads(text)
    assert parsed["suite"] == "complete"
    assert parsed["counts"]["fail"] == 0
    assert len(parsed["records"]) == len(records)


def test_unknown_suite_and_cap():
    with pytest.raises(ValueError):
        verify_suite("nope", max_n=5)
    with pytest.raises(ValueError):
        verify_suite("paths", max_n=30)


def test_labeled_graph_sweep_small_counts():
    connected, counts = _labeled_graph_sweep(3)
    # graphs on 3 vertices: empty graph has 1 dominating set (all vertices)
    assert counts[0] == 1
    # the triangle (all three edges) has 2^3 - 1 = 7
    assert counts[-1] == 7
    assert int(connected.sum()) == 4


def test_random_connected_graph_is_connected():
    import random

    from domgraph import is_connected

    rng = random.Random(3)
    for _ in range(20):
        g = _random_connected_graph(rng, rng.randint(2, 10))
        assert is_connected(g)
