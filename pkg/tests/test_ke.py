import pytest

import oracles as o
from conftest import adj_of, random_sample
from critset.fixtures import load
from critset.graphs import complete_graph, cycle_graph, path_graph
from critset.ke import is_ke_via_critical, is_koenig_egervary, ke_identities


def test_recognition_matches_oracle(graphs_n5):
    for g in graphs_n5:
        assert is_koenig_egervary(g) == o.brute_is_ke(g.n, adj_of(g))


def test_both_recognition_routes_agree(graphs_n5):
    for g in graphs_n5[::3]:
        assert is_koenig_egervary(g) == is_ke_via_critical(g)


def test_recognition_on_random_graphs():
    for g in random_sample(40, 8, 12, seed=91):
        assert is_koenig_egervary(g) == o.brute_is_ke(g.n, adj_of(g))


def test_known_classifications():
    assert is_koenig_egervary(path_graph(4))
    assert is_koenig_egervary(cycle_graph(4))
    assert not is_koenig_egervary(cycle_graph(5))
    assert not is_koenig_egervary(complete_graph(4))
    assert not is_koenig_egervary(load("fig22.G1").graph)


def test_identities_reject_non_ke():
    with pytest.raises(ValueError, match="not a König-Egerváry graph"):
        ke_identities(complete_graph(5))
    with pytest.raises(ValueError):
        ke_identities(load("fig22.G1").graph)


@pytest.mark.parametrize("name", ["fig511", "fig333.G1", "fig177", "fig14.G1",
                                  "fig222.G1", "fig17888.G1"])
def test_identities_hold_on_ke_fixtures(name):
    g = load(name).graph
    report = ke_identities(g)
    assert report.is_ke
    assert report.alpha + report.mu == g.n
    assert report.d == report.alpha - report.mu == report.deficiency
    assert all(c.holds for c in report.identity_checks)
    names = {c.name for c in report.identity_checks}
    assert "diadem_eq_corona" in names and "core_is_critical" in names


def test_identities_hold_on_every_small_ke_graph(graphs_n5):
    for g in graphs_n5:
        if not is_koenig_egervary(g):
            continue
        report = ke_identities(g)
        assert all(c.holds for c in report.identity_checks), g.adj


def test_report_sides_are_reusable():
    report = ke_identities(path_graph(5))
    for c in report.identity_checks:
        # every check records both sides; holding means they agree in the
        # sense the check encodes, and for these two it is plain equality
        if c.name in ("diadem_eq_corona", "ncore_eq_complement_of_corona"):
            assert (c.lhs == c.rhs) == c.holds
