from fractions import Fraction

import pytest

import gwloc


def test_quintic_lines_and_conics():
    lines = gwloc.sum_invariant(gwloc.CITarget(4, [5], 1))
    assert lines.value == 2875
    assert isinstance(lines.value, Fraction)
    assert lines.graph_count == 10
    assert list(lines.weight_seeds) == [1, 2, 3]
    assert gwloc.sum_invariant(gwloc.CITarget(4, [5], 2), seeds=[7, 8]).value == Fraction(4876875, 8)


def test_closed_form_matches_engine_at_shared_weights():
    w = gwloc.sample_weights(3, 5)
    assert len(w) == 6
    target = gwloc.CITarget(5, [3, 3], 1)
    assert gwloc.sum_at_weights(target, w) == gwloc.lines_closed_form(5, [3, 3], w) == 1053


def test_point_counts_on_the_plane():
    counts = gwloc.wdvv_p2(3)
    for d in (1, 2, 3):
        target = gwloc.CITarget(2, [], d, [2] * (3 * d - 1))
        assert gwloc.sum_invariant(target).value == counts[d]


def test_errors_map_to_python_exceptions():
    with pytest.raises(gwloc.DimensionMismatch):
        gwloc.sum_invariant(gwloc.CITarget(4, [5], 1, [2]))
    with pytest.raises(ValueError):
        gwloc.CITarget(4, [5], 0)
    with pytest.raises(gwloc.InvalidInput):
        gwloc.sum_invariant(gwloc.CITarget(4, [5], 1), seeds=[1])
    with pytest.raises(gwloc.UnsupportedDimension):
        gwloc.gw_difference(8, 0, 1)


def test_relations():
    n0 = gwloc.bps0_from_gw0({1: 2875, 2: Fraction(4876875, 8), 3: Fraction(8564575000, 27)})
    assert n0 == {1: 2875, 2: 609250, 3: 317206375}
    assert gwloc.gw0_from_bps0(n0)[3] == Fraction(8564575000, 27)
    n1 = gwloc.bps1_from_gw1({1: Fraction(2875, 12), 2: Fraction(407125, 8), 3: Fraction(243388750, 9)}, n0)
    assert n1 == {1: 0, 2: 0, 3: 609250}
    assert gwloc.gw_difference(6, 0, 2875) == Fraction(2875, 12)
    assert gwloc.expected_dimension(1, 0, 0, 3) == 0


def test_table_audit():
    rows = gwloc.reproduce_table1(4)
    assert [r.consistent for r in rows] == [True, True, True, False]
    assert rows[3].corrected_genus1_gw == Fraction(382833353125, 16)
    assert rows[3].correction_via_reduced == rows[3].correction_via_bps


def test_graphs_and_predicates():
    graphs = gwloc.enumerate_graphs(4, 2)
    assert len(graphs) == 60 == gwloc.count_graphs(4, 2)
    forms = [g.canonical_form() for g in graphs]
    assert forms == sorted(set(forms))
    assert gwloc.is_calabi_yau(gwloc.CITarget(4, [5], 1))
    assert not gwloc.positivity_check(gwloc.CITarget(4, [0], 1))


def test_cli_entry(tmp_path):
    code, out, _ = gwloc.run_cli(["--cache-dir", str(tmp_path), "--quiet", "genus0", "--ambient-dim", "4", "--degrees", "5",
                                  "--curve-degree", "1"])
    assert code == 0
    assert out.strip() == "value: 2875"
    assert gwloc.run_cli(["genus0", "--bogus"])[0] == 1
