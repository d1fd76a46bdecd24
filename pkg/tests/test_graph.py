import pytest

from superdegen.catalog import CLOSED_ORBIT_LABEL
from superdegen.certs import ObstructionCert, load_cert_file
from superdegen.graph import (ASSERTED_GENERIC, ContradictionFound, build_graph, dot_diagram,
                              generic_structures, json_diagram, load_undetermined)


def test_sources_match_the_classification(graph):
    assert graph.sources(1) == ["(9|3)"]
    assert sorted(graph.sources(3)) == sorted(ASSERTED_GENERIC[3])
    expected2 = sorted(ASSERTED_GENERIC[2] + ("(6|2)", "(19|1)"))
    assert sorted(graph.sources(2)) == expected2


def test_generic_flags(graph):
    flags2 = dict(generic_structures(graph, 2))
    assert flags2["(6|2)"] == "undetermined"
    assert flags2["(19|1)"] == "undetermined"
    for label in ASSERTED_GENERIC[2]:
        assert flags2[label] in ("confirmed", "paper")
    flags3 = dict(generic_structures(graph, 3))
    assert all(f in ("confirmed", "paper") for f in flags3.values())
    assert dict(generic_structures(graph, 1)) == {"(9|3)": "confirmed"}


def test_component4_is_asserted_data(graph):
    gen4 = generic_structures(graph, 4)
    assert [l for l, _ in gen4] == list(ASSERTED_GENERIC[4])
    assert all(flag == "external-data" for _, flag in gen4)


def test_twenty_generic_structures(graph):
    total = 0
    for comp in (1, 2, 3, 4):
        total += sum(1 for _, flag in generic_structures(graph, comp) if flag != "undetermined")
    assert total == 20


def test_undetermined_pairs_are_the_registered_ones(graph):
    assert sorted(load_undetermined()) == graph.undetermined
    comp2 = [(s, t) for (s, t) in graph.undetermined if graph.nodes[s].component == 2]
    assert len(comp2) == 6
    comp3 = [(s, t) for (s, t) in graph.undetermined if graph.nodes[s].component == 3]
    assert comp3 == [("(2|2)", "(6|1)")]


def test_every_node_reaches_the_closed_orbit(graph):
    for label, node in graph.nodes.items():
        assert graph.reaches(label, CLOSED_ORBIT_LABEL[node.component]), label


def test_edges_stay_within_components(graph):
    for (s, t) in graph.edges:
        assert graph.nodes[s].component == graph.nodes[t].component


def test_orbit_dimension_drops_along_edges(graph):
    for (s, t), tag in graph.edges.items():
        ns, nt = graph.nodes[s], graph.nodes[t]
        if ns.is_family:
            assert ns.orbit_dim >= nt.orbit_dim, (s, t, tag)
        else:
            assert ns.orbit_dim > nt.orbit_dim, (s, t, tag)


def test_no_edge_between_same_algebra_gradings(graph):
    # empirical check: no verified degeneration connects two different
    # gradings of one underlying algebra
    for (s, t) in graph.edges:
        fam_s = s.split("|")[0]
        fam_t = t.split("|")[0]
        assert fam_s != fam_t, (s, t)


def test_contradiction_aborts(catalog):
    specs = load_cert_file("spec_dim3") + load_cert_file("spec_dim2")
    fams = load_cert_file("family_limits")
    # (7|1) -> (8|1) is a verified edge; a fabricated "obstruction" for the
    # same pair must abort assembly (method A does hold for this pair's
    # source... use OD which does not, so craft a pair that verifies:
    # (3|1) in A and (8|1)... (8|1) is in A too; use B: (13|1) in B, (14|2) in B)
    bogus = ObstructionCert("(7|1)", "(8|1)", "DIM0")
    # DIM0 fails (same component) and would be rejected, so use a set method
    # that genuinely verifies on a pair that also has an edge:
    # (16|3) -> (8|3) is an edge; is (16|3) in A? no (odd square is XY).
    # (11|2) -> (12|1) is an edge; (11|2) in A, (12|1) in A -> no.
    # (3|2) -> (7|2): (3|2) in A, (7|2)? odd part {Y, XY} squares to zero -> in A.
    # Fall back to a synthetic always-true method: UNDERLYING with a table.
    bogus = ObstructionCert("(7|1)", "(8|1)", "UNDERLYING")
    with pytest.raises(ContradictionFound):
        build_graph(catalog, specs, fams, [bogus], load_undetermined(),
                    underlying={("7", "8"): True})


def test_dot_and_json_are_deterministic(graph):
    d1, d2 = dot_diagram(graph, 3), dot_diagram(graph, 3)
    assert d1 == d2
    assert '"(1|1)"' in d1 and "digraph" in d1
    j = json_diagram(graph, 2)
    assert j["sources"] == graph.sources(2)
    assert len(j["undetermined"]) == 6
    j4 = json_diagram(graph, 4)
    assert "note" in j4


def test_dot_styles(graph):
    d = dot_diagram(graph, 2)
    assert "style=dashed" in d   # family limits
    assert "style=dotted" in d   # undetermined pairs
    assert "style=solid" in d


def test_component_node_counts(graph):
    assert len(json_diagram(graph, 3)["nodes"]) == 17
    assert len(json_diagram(graph, 1)["nodes"]) == 1
    assert len(json_diagram(graph, 2)["nodes"]) == 24
    assert len(json_diagram(graph, 4)["nodes"]) == 19
