from pathlib import Path

import pytest

import oracles as o
from conftest import adj_of
from critset.fixtures import _FILES, fixture_names, load, verify, verify_all
from critset.graphs import bipartition

PKG_DIR = Path(__file__).resolve().parent.parent / "src/critset/fixtures"
MIRROR_DIR = Path(__file__).resolve().parent.parent / "fixtures"


def test_registry_is_complete():
    names = fixture_names()
    assert len(names) == 16
    assert names[0] == "fig511"
    with pytest.raises(ValueError, match="unknown fixture"):
        load("fig999")


def test_every_fixture_verifies():
    for report in verify_all():
        failing = [c["key"] for c in report["checks"] if not c["holds"]]
        assert failing == [], (report["name"], failing)
        assert report["holds"]


@pytest.mark.parametrize("name", fixture_names())
def test_expected_values_match_brute_force(name):
    fx = load(name)
    g = fx.graph
    adj = adj_of(g)
    e = fx.expected

    def labels(mask):
        return sorted(g.label_list(mask))

    assert e["n"] == g.n and e["m"] == g.m
    if "d" in e:
        assert e["d"] == o.brute_d(g.n, adj)
    if "alpha" in e:
        assert e["alpha"] == o.brute_alpha(g.n, adj)
    if "mu" in e:
        assert e["mu"] == o.brute_mu(g.n, adj)
    if "ker" in e:
        assert sorted(e["ker"]) == labels(o.brute_ker(g.n, adj))
    if "diadem" in e:
        assert sorted(e["diadem"]) == labels(o.brute_diadem(g.n, adj))
    if "core" in e:
        assert sorted(e["core"]) == labels(o.brute_core(g.n, adj))
    if "corona" in e:
        assert sorted(e["corona"]) == labels(o.brute_corona(g.n, adj))
    if "ke" in e:
        assert e["ke"] == o.brute_is_ke(g.n, adj)
    if "bipartite" in e:
        assert e["bipartite"] == (bipartition(g) is not None)
    if "deficiency" in e:
        assert e["deficiency"] == o.brute_deficiency(g.n, adj)


@pytest.mark.parametrize("name", fixture_names())
def test_side_expectations_match_brute_force(name):
    fx = load(name)
    g = fx.graph
    e = fx.expected
    if "delta0_a" not in e:
        return
    adj = adj_of(g)
    parts = bipartition(g)
    assert e["delta0_a"] == o.brute_delta0(g.n, adj, parts.side_a)
    assert e["delta0_b"] == o.brute_delta0(g.n, adj, parts.side_b)
    if "ker_a" in e:
        assert sorted(e["ker_a"]) == sorted(
            g.label_list(o.brute_side_kernel(g.n, adj, parts.side_a)))
    if "ker_b" in e:
        assert sorted(e["ker_b"]) == sorted(
            g.label_list(o.brute_side_kernel(g.n, adj, parts.side_b)))
    if "diadem_a" in e:
        assert sorted(e["diadem_a"]) == sorted(
            g.label_list(o.brute_side_diadem(g.n, adj, parts.side_a)))
    if "diadem_b" in e:
        assert sorted(e["diadem_b"]) == sorted(
            g.label_list(o.brute_side_diadem(g.n, adj, parts.side_b)))


def test_strict_inclusion_example():
    fx = load("fig1777")
    g = fx.graph
    adj = adj_of(g)
    ker = o.brute_ker(g.n, adj)
    core = o.brute_core(g.n, adj)
    diadem = o.brute_diadem(g.n, adj)
    corona = o.brute_corona(g.n, adj)
    assert ker & ~core == 0 and ker != core
    assert diadem & ~corona == 0 and diadem != corona


def test_divergence_notes_surface_in_reports():
    r233 = verify("fig233")
    ker_b = next(c for c in r233["checks"] if c["key"] == "ker_b")
    assert ker_b["holds"] and "note" in ker_b
    assert "fails the definition" in ker_b["note"]

    r511 = verify("fig511")
    noted = {c["key"]: c for c in r511["checks"] if "note" in c}
    assert "diadem" in noted
    assert "d_after_delete" in noted


def test_repo_mirror_matches_package_data():
    assert MIRROR_DIR.is_dir()
    stems = sorted(p.name for p in PKG_DIR.iterdir() if p.suffix in
                   (".edges", ".json"))
    assert stems == sorted(p.name for p in MIRROR_DIR.iterdir())
    assert len(stems) == 2 * len(_FILES)
    for name in stems:
        assert (PKG_DIR / name).read_bytes() == (MIRROR_DIR / name).read_bytes()


def test_graphs_parse_with_declared_labels():
    for name in fixture_names():
        fx = load(name)
        assert fx.graph.n == fx.expected["n"]
        assert len(set(fx.graph.labels)) == fx.graph.n
