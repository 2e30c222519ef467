"""Statement registry, figure reproduction and isomorphism consequences."""

from types import SimpleNamespace

import pytest

from lie_ncg.catalog import catalog_entry
from lie_ncg.errors import UnknownStatement
from lie_ncg.gf import field_new
from lie_ncg.graphs import Graph
from lie_ncg.liealg import LieAlgebra
from lie_ncg.refgraphs import FIGURE_IDS, figure_graph
from lie_ncg.verifier import (
    STATEMENT_IDS,
    STATEMENTS,
    Instance,
    TheoremReport,
    catalog_instances,
    check_all_statements,
    check_figures,
    check_iso_theorems,
    check_statement,
    enumeration_instances,
    explore_conjecture,
)


def l2_f3():
    """dim-3 algebra over F_3 with [x, y] = x; same graph shape as Heisenberg."""
    return LieAlgebra(field_new(3), 3, {(0, 1): (1, 0, 0)})


def test_statement_registry_shape():
    assert len(STATEMENT_IDS) == 22
    for sid, (quote, checker) in STATEMENTS.items():
        assert isinstance(quote, str) and quote
        assert callable(checker)


def test_unknown_statement():
    with pytest.raises(UnknownStatement):
        check_statement("Thm9.9", [])


def test_catalog_instances():
    instances = catalog_instances()
    assert len(instances) == 9
    names = [inst.name for inst in instances]
    assert "heisenberg_f2" in names and "split_pairs_f2" in names


def test_all_statements_pass_on_catalog():
    instances = catalog_instances()
    for report in check_all_statements(instances):
        assert report.status == "pass", (report.statement_id, report.failures)
        assert report.instances_checked == len(instances)


def test_every_statement_fires_non_vacuously_somewhere():
    # Lem3.1 asserts a non-existence, so it can only ever pass vacuously
    instances = catalog_instances() + enumeration_instances(3, 2)
    for report in check_all_statements(instances):
        if report.statement_id == "Lem3.1":
            continue
        assert report.vacuous_count < report.instances_checked, report.statement_id


def test_all_statements_pass_on_enumeration_n2_q2():
    instances = enumeration_instances(2, 2)
    assert len(instances) == 3
    for report in check_all_statements(instances):
        assert report.status == "pass", (report.statement_id, report.failures)


def test_report_status_rules():
    empty = TheoremReport(statement_id="X", quote="q")
    assert empty.status == "fail"  # nothing checked is not a pass
    failing = TheoremReport(statement_id="X", quote="q", instances_checked=1)
    failing.failures.append(("inst", "detail"))
    assert failing.status == "fail"
    d = failing.to_dict()
    assert d["status"] == "fail" and d["failures"] == [["inst", "detail"]]


def test_failure_is_recorded_for_a_star_shaped_counterexample():
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    fake = SimpleNamespace(
        name="star-control",
        graph=star,
        degrees=star.degrees(),
        connectivity=(True, 2),
    )
    report = check_statement("Cor2.11", [fake])
    assert report.status == "fail"
    # a star is also a tree; either wording is a correct rejection
    assert report.failures[0][0] == "star-control"
    assert report.failures[0][1] in ("graph is a tree", "graph is a star")


def test_gamma_one_iff_both_directions():
    # aff1_f2: K_3, gamma 1, and |C(x)| = 2 for every vertex
    inst = Instance("aff1_f2", catalog_entry("aff1_f2").algebra())
    assert check_statement("Thm2.18", [inst]).status == "pass"
    assert inst.has_dominating_vertex
    # heisenberg_f3: 18-regular on 24 vertices, no dominating vertex and
    # every centralizer has order 9
    inst = Instance("heisenberg_f3", catalog_entry("heisenberg_f3").algebra())
    assert not inst.has_dominating_vertex
    assert set(inst.centralizer_orders) == {9}
    assert check_statement("Thm2.18", [inst]).status == "pass"


def test_figures_are_reproduced_by_enumeration():
    report = check_figures()
    assert report.status == "pass", report.failures
    notes = set(report.notes)
    assert "F1: realized by 42 structure tensors" in notes
    assert "F2: realized by 28 structure tensors" in notes
    assert "F3: realized by 49 structure tensors" in notes


def test_figure_graphs_basic_shapes():
    assert set(FIGURE_IDS) == {"F1", "F2", "F3", "F4", "F5", "F6", "F7"}
    assert figure_graph("F2").edge_count() == 21  # K_7
    f3 = figure_graph("F3")
    assert (f3.n, f3.edge_count()) == (6, 12)  # octahedron
    assert figure_graph("F4").n == 3  # K_3
    f6 = figure_graph("F6")
    assert (f6.n, f6.edge_count()) == (6, 9)  # K_{3,3}
    with pytest.raises(KeyError):
        figure_graph("F9")


def test_iso_theorems_self_pairs_and_notes():
    heis3 = catalog_entry("heisenberg_f3").algebra()
    aff3 = catalog_entry("aff1_f3").algebra()
    report = check_iso_theorems(
        [
            ("heisenberg_f3", heis3, "l2_f3", l2_f3()),
            ("aff1_f3", aff3, "aff1_f3", aff3),
        ]
    )
    assert report.status == "pass", report.failures
    # heisenberg_f3 and l2_f3 are non-isomorphic algebras with isomorphic
    # graphs and degree 18 = 2 * 3^2; only order equality is asserted there
    assert any("outside the |L|=9 case analysis" in n for n in report.notes)


def test_iso_theorems_vacuous_on_non_isomorphic_pair():
    report = check_iso_theorems(
        [
            (
                "aff1_f2",
                catalog_entry("aff1_f2").algebra(),
                "heisenberg_f2",
                catalog_entry("heisenberg_f2").algebra(),
            )
        ]
    )
    assert report.status == "pass"
    assert report.vacuous_count == 1


def test_iso_theorems_accepts_bare_pairs():
    L = catalog_entry("heisenberg_f2").algebra()
    report = check_iso_theorems([(L, L)])
    assert report.status == "pass"
    assert report.instances_checked == 1


def test_explore_conjecture_dim2():
    summary = explore_conjecture(n_max=2, qs=(2,))
    assert summary["instances"] == 3
    assert summary["pairs"] == 3
    assert summary["cells"] == {
        "iso/equal": 3,
        "iso/unequal": 0,
        "non-iso/equal": 0,
        "non-iso/unequal": 0,
    }
