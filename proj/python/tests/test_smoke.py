import pytest

import carc

C4 = {"n": 4, "arcs": [[0, 3], [2, 5], [4, 7], [6, 1]]}


def test_build_c4():
    scheme, stats = carc.build(C4)
    assert stats["total_intervals"] == 8
    assert stats["ok"]
    assert len(scheme["labels"]) == 8


def test_verify_and_route():
    scheme, _ = carc.build(C4)
    report = carc.verify(C4, scheme)
    assert report["passed"]
    assert carc.route(C4, scheme, 0, 2) in ([0, 1, 2], [0, 3, 2])


def test_tampered_scheme_fails():
    scheme, _ = carc.build(C4)
    labels = scheme["labels"]
    labels["0->1"], labels["0->3"] = labels["0->3"], labels["0->1"]
    assert not carc.verify(C4, scheme)["passed"]


def test_generators():
    assert carc.gen("random", 10, 42) == {
        "n": 10,
        "arcs": [[17, 0], [4, 15], [3, 8], [6, 14], [7, 9], [13, 18], [16, 2], [19, 5], [10, 12], [1, 11]],
    }
    wheel = carc.gen("wheel", 6)
    assert wheel["n"] == 7
    assert len(carc.edges(wheel)) == 12
    assert carc.is_real(wheel)


@pytest.mark.parametrize("n", [5, 10, 30])
def test_random_models_verify(n):
    for seed in range(20):
        model = carc.gen("random", n, seed)
        scheme, stats = carc.build(model)
        assert stats["ok"]
        assert carc.verify(model, scheme, threads=2)["passed"]


def test_oracle():
    assert not carc.oracle1(carc.gen("wheel", 6))["exists"]
    found = carc.oracle1(carc.gen("ring", 5))
    assert found["exists"]
    assert carc.verify(carc.gen("ring", 5), found["witness"])["coverage_ok"]


def test_errors_carry_code():
    with pytest.raises(carc.CarcError) as info:
        carc.build({"n": 3, "arcs": [[0, 1], [2, 3], [4, 5]]})
    assert info.value.args[0] == "not_real_circular_arc"
    with pytest.raises(carc.CarcError):
        carc.gen("hexagon", 5)
    with pytest.raises(carc.CarcError):
        carc.build("{not json")


def test_clique_cycle_dump():
    assert carc.clique_cycle(C4).strip()
