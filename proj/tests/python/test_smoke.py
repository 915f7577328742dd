"""Smoke tests for the python module: a quick pass over every exposed surface."""

import json
import sys

import graphfactor as gf


def test_graph_basics():
    g = gf.parse_graph6("C~")
    assert g.n == 4 and g.total_multiplicity == 6 and g.simple
    assert g.degree(0) == 3
    assert gf.emit_graph6(g) == "C~"
    assert gf.components(g) == [[0, 1, 2, 3]]
    assert gf.odd_components(g, [0]) == 1

    multi = gf.parse_edge_list("2\n0 1 2\n")
    assert multi.multiplicity(0, 1) == 2 and not multi.simple
    assert "0 -- 1" in gf.emit_dot(multi)

    gx, xp = gf.add_pendant(g, 0)
    assert gx.n == 5 and xp == 4 and gx.degree(0) == 4

    loop = gf.Multigraph(1, [(0, 0, 1)])
    assert loop.degree(0) == 2


def test_degree_sets_and_families():
    assert gf.j_set(6).elements() == [1, 3, 5, 6]
    assert gf.j_plus_set(4).elements() == [1, 3, 5]
    assert gf.classify(gf.j_set(6)) == gf.SetClass.PARITY_INTERVAL_PLUS_TOP
    assert gf.j_set(6).display() == "odd[1..5]+{6}"

    fam = gf.HFamily(gf.FSpec([2, 2]))
    assert len(fam) == 4
    assert fam[0].display() == ["odd[1..1]+{2}", "odd[1..1]+{2}"]
    assert fam[3].display() == ["{1,3}", "{1,3}"]

    star = gf.Multigraph(4, [(0, 1, 1), (0, 2, 1), (0, 3, 1)])
    colored = gf.colored_h(gf.FSpec.constant(4, 1), "BRRR", star)
    assert colored.at(0).elements() == [1, 3]

    cut, infeasible = gf.truncate(gf.HFamily(gf.FSpec.constant(4, 5))[0], star)
    assert infeasible is None and cut.at(1).elements() == [1]


def test_matching_and_factors():
    c6 = gf.Multigraph(6, [(i, (i + 1) % 6, 1) for i in range(6)])
    pm = gf.has_perfect_matching(c6)
    assert pm is not None and len(pm) == 3
    assert len(gf.max_matching(c6)) == len(gf.brute_force_max_matching(c6))

    h = gf.HFamily(gf.FSpec.constant(6, 1))[0]
    result = gf.find_h_factor(c6, h)
    assert result.found and result.certificate.degrees == [1] * 6
    assert gf.verify_factor(c6, h, result.certificate.edges)
    oracle = gf.brute_force_h_factor(c6, h)
    assert oracle is not None

    k13 = gf.Multigraph(4, [(0, v, 1) for v in (1, 2, 3)])
    miss = gf.find_h_factor(k13, gf.HFamily(gf.FSpec.constant(4, 1))[0])
    assert not miss.found and miss.reason == "exhausted"


def test_tutte_and_criticality():
    k13 = gf.Multigraph(4, [(0, v, 1) for v in (1, 2, 3)])
    verdict = gf.check_tutte(k13, gf.FSpec.constant(4, 1))
    assert not verdict.holds and verdict.violation == ([0], 3, 1)
    assert json.loads(verdict.to_json())["violation"]["odd"] == 3

    s, value = gf.worst_deficiency(k13, gf.FSpec.constant(4, 1))
    assert s == [0] and value == 2

    f = gf.FSpec.constant(2, 2)
    h = gf.sufficiency_h(f, [0])
    assert h.display() == ["odd[1..1]+{2}", "{1,3}"]
    assert gf.necessity_fprime(f, h).values == [2, 3]

    k3 = gf.parse_graph6("Bw")
    report = gf.is_h_critical(k3, gf.HFamily(gf.FSpec.constant(3, 1))[0])
    assert report.is_critical and not report.has_factor
    assert all(cert is not None for cert in report.per_vertex)


def test_theorem_checks_and_sweep():
    c4 = gf.Multigraph(4, [(i, (i + 1) % 4, 1) for i in range(4)])
    v = gf.check_main_even(c4, gf.FSpec.constant(4, 1), deep=True, crosscheck_max_mult=12)
    assert v.agrees and v.left_side and v.right_side

    k3 = gf.parse_graph6("Bw")
    assert gf.check_main_odd(k3, gf.FSpec.constant(3, 1)).agrees
    assert gf.check_ck(c4, gf.FSpec.constant(4, 3)).agrees
    assert gf.check_colored_even(c4, gf.FSpec.constant(4, 2)).agrees
    assert gf.check_colored_general(k3, gf.FSpec.constant(3, 1)).agrees

    assert len(gf.enumerate_connected_graphs(3)) == gf.connected_graph_count(3) == 4
    samples = gf.sample_multigraphs(5, 3, True, seed=9, count=10)
    assert len(samples) == 10 and all(s.total_multiplicity == 7 for s in samples)

    rep1 = gf.run_sweep([2, 3, 4], ["const:1", "random:2"],
                        ["MAIN_EVEN", "MAIN_ODD", "LW_ODD_COLORED"], seed=5)
    rep2 = gf.run_sweep([2, 3, 4], ["const:1", "random:2"],
                        ["MAIN_EVEN", "MAIN_ODD", "LW_ODD_COLORED"], seed=5, jobs=2)
    assert rep1.clean and rep1.instances > 0
    assert rep1.to_json() == rep2.to_json()
    assert json.loads(rep1.to_json())["clean"] is True


def test_errors():
    try:
        gf.parse_graph6("C")
    except ValueError:
        pass
    else:
        raise AssertionError("truncated graph6 must raise")

    try:
        gf.FSpec([0])
    except Exception:
        pass
    else:
        raise AssertionError("f values must be positive")


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for test in tests:
        test()
        print(f"ok {test.__name__}")
    print(f"{len(tests)} python smoke tests passed")


if __name__ == "__main__":
    sys.exit(main())
