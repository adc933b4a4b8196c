import pytest

import synpath


def test_encode_and_witness_roundtrip():
    assert synpath.encode("kn", ["0", "1", "3", "4"], "1") == "2,2,4,4"
    x = synpath.witness("kn", "2,2,4,4", "1")
    assert x == ["0", "1", "3", "4"]
    y = synpath.witness("knn", "1,2|1,2")
    assert synpath.encode("knn", y) == "1,2|1,2"


def test_counts_and_distributions():
    assert synpath.count_realizable_paths_kn(4) == 10
    assert synpath.admissible_paths("kn", 4) == 16
    assert synpath.length_distribution("kn", 4) == [1, 1, 2, 3, 3, 3, 1]
    assert sum(synpath.length_distribution("knn", 3)) == 175
    big = synpath.length_distribution("knn", 8)
    assert big[-1] == 12870


def test_simulate_linear():
    seq = synpath.simulate("kn", [0, 2, 5, 9], 1.0)
    assert [e["edge"] for e in seq["events"]] == [[1, 2], [2, 3], [3, 4], [1, 3], [2, 4], [1, 4]]
    assert seq["final_code"] == "4,4,4,4"


def test_errors():
    with pytest.raises(ValueError):
        synpath.witness("kn", "1,3,2")
    with pytest.raises(RuntimeError):
        synpath.length_distribution("kn", 100)


def test_dot_and_verify():
    assert synpath.diagram_dot("kn", 2).startswith("digraph sync_diagram {")
    report = synpath.verify([3], True)
    assert report["checks"][0]["status"] == "pass"
