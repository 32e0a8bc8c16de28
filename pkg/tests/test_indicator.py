"""
Tests for function tables, indicator instances, F-graphs and quotient checks
"""
import pytest

from src.conditions.builders import sigma_of_graph, siggers
from src.conditions.combine import combine
from src.config import settings
from src.errors import CertificateError, InputError, ResourceGuardError
from src.graphs.model import (
    Graph,
    complete_graph,
    cycle_graph,
    graph_template,
    loop_graph,
    nae_template,
    one_element_template,
    ordered_template,
)
from src.indicator.fgraph import build_f_graph, minion_hom_to_p, ternary_polymorphisms, verify_f_edge
from src.indicator.polymorphisms import (
    EDGE_SWAP,
    extract_homomorphism,
    indicator_instance,
    is_polymorphism,
    satisfies,
    transfer_witness,
    verify_tables,
)
from src.indicator.quotient_check import qnu_quotient_check
from src.indicator.tables import FunctionTable
from src.solver.checker import check_coloring, check_homomorphism
from src.solver.csp import CertificateKind


class TestFunctionTable:

    def test_projection_and_call(self):
        t = FunctionTable.projection(3, 3, 1)
        assert t(2, 0, 1) == 0
        assert len(t.values) == 27

    def test_shape_is_validated(self):
        with pytest.raises(InputError):
            FunctionTable(2, 2, (0, 1, 1))
        with pytest.raises(InputError):
            FunctionTable(2, 1, (0, 2))

    def test_minor(self):
        t = FunctionTable.from_function(3, 2, lambda x, y: (x + 2 * y) % 3)
        m = t.minor((1, 1), 2)
        assert all(m(x, y) == t(y, y) for x in range(3) for y in range(3))
        with pytest.raises(InputError):
            t.minor((0,), 1)

    def test_edge_swap_exchanges_diagonals(self):
        t = FunctionTable.from_function(2, 6, lambda *xs: xs[0] & xs[3] | xs[5])
        swapped = t.minor(EDGE_SWAP, 6)
        assert all(swapped(*xs) == t(xs[1], xs[0], xs[3], xs[2], xs[5], xs[4])
                   for xs in [(0, 1, 0, 1, 1, 0), (1, 0, 0, 1, 0, 1), (1, 1, 0, 0, 1, 0)])


class TestPolymorphisms:

    def test_projections_preserve_every_template(self):
        for b in (graph_template(complete_graph(3)), nae_template(), ordered_template()):
            for i in range(3):
                assert is_polymorphism(FunctionTable.projection(b.domain_size, 3, i), b)

    def test_constant_breaks_k3(self):
        assert not is_polymorphism(FunctionTable.from_function(3, 2, lambda x, y: 0), graph_template(complete_graph(3)))

    def test_min_preserves_order(self):
        assert is_polymorphism(FunctionTable.from_function(2, 2, min), ordered_template())
        assert not is_polymorphism(FunctionTable.from_function(2, 2, lambda x, y: 1 - x), ordered_template())

    def test_row_guard(self, monkeypatch):
        monkeypatch.setattr(settings, "max_constraints", 10)
        with pytest.raises(ResourceGuardError):
            is_polymorphism(FunctionTable.projection(3, 3, 0), graph_template(complete_graph(3)))

    def test_domain_mismatch(self):
        assert not is_polymorphism(FunctionTable.projection(2, 1, 0), graph_template(complete_graph(3)))


class TestSatisfies:

    def test_triangle_condition_in_triangle(self, k3):
        b = graph_template(k3)
        c = sigma_of_graph(k3)
        result = satisfies(b, c)
        assert result.satisfied
        assert verify_tables(b, c, result.tables) == []
        hom = extract_homomorphism(k3, result.tables, (0, 1, 2))
        assert check_homomorphism(k3, k3, hom) == []

    def test_k4_condition_fails_in_triangle(self, k3, k4):
        result = satisfies(graph_template(k3), sigma_of_graph(k4))
        assert not result.satisfied
        assert result.certificate.kind == CertificateKind.EXHAUSTED

    def test_siggers_fails_in_triangle(self, k3):
        assert not satisfies(graph_template(k3), siggers()).satisfied

    def test_siggers_holds_in_ordered_template(self):
        b = ordered_template()
        result = satisfies(b, siggers())
        assert result.satisfied
        assert verify_tables(b, siggers(), result.tables) == []

    def test_domain_cap_applies_to_six_ary_symbols(self, k4):
        with pytest.raises(ResourceGuardError):
            satisfies(graph_template(k4), siggers())
        built = indicator_instance(graph_template(k4), sigma_of_graph(complete_graph(1)))
        assert built.instance.var_count == 64

    def test_variable_cap(self, k3):
        with pytest.raises(ResourceGuardError) as info:
            satisfies(graph_template(k3), sigma_of_graph(k3), max_vars=100)
        assert info.value.estimated == 3 * 27 + 3 * 729

    def test_constraint_rows_are_guarded(self):
        # 4096 variables pass, but each 12-ary symbol needs 6^12 rows of NAE scopes
        with pytest.raises(ResourceGuardError) as info:
            satisfies(nae_template(), combine(siggers(), siggers()))
        assert info.value.what == "indicator constraints"
        assert info.value.estimated == 6 ** 12
        with pytest.raises(ResourceGuardError):
            satisfies(nae_template(), siggers(), max_constraints=1000)

    def test_one_element_template_satisfies_everything(self, k4):
        result = satisfies(one_element_template(), sigma_of_graph(k4))
        assert result.satisfied

    def test_verify_tables_reports_problems(self, k3):
        b = graph_template(k3)
        c = sigma_of_graph(k3)
        tables = satisfies(b, c).tables
        broken = dict(tables)
        del broken["f0"]
        assert verify_tables(b, c, broken)
        broken = dict(tables)
        broken["f0"] = FunctionTable.projection(3, 3, 0)
        broken["f1"] = FunctionTable.projection(3, 3, 0)
        assert verify_tables(b, c, broken)


class TestWitnessTransfer:

    def test_transfer_along_coloring(self, k3):
        b = graph_template(k3)
        tables = satisfies(b, sigma_of_graph(k3)).tables
        g = cycle_graph(6)
        hom = (0, 1, 2, 0, 1, 2)
        assert check_homomorphism(g, k3, hom) == []
        moved = transfer_witness(g, k3, hom, tables)
        assert verify_tables(b, sigma_of_graph(g), moved) == []

    def test_transfer_with_reversed_edges(self, k3):
        b = graph_template(k3)
        tables = satisfies(b, sigma_of_graph(k3)).tables
        g = complete_graph(3)
        hom = (2, 1, 0)
        moved = transfer_witness(g, k3, hom, tables)
        assert verify_tables(b, sigma_of_graph(g), moved) == []


class TestFGraph:

    def test_one_element_template(self):
        fgraph, coloring = minion_hom_to_p(one_element_template())
        assert len(fgraph.vertices) == 1
        assert (0, 0) in fgraph.edges
        assert coloring is None

    def test_nae_template(self):
        fgraph, coloring = minion_hom_to_p(nae_template())
        assert len(fgraph.vertices) == 6
        assert len(fgraph.edges) == 6
        assert fgraph.graph.is_loopless()
        assert coloring is not None
        assert check_coloring(fgraph.graph, coloring) == []
        for i, j in fgraph.edges:
            assert verify_f_edge(fgraph, i, j)
            assert verify_f_edge(fgraph, j, i)

    def test_ordered_template(self):
        fgraph, coloring = minion_hom_to_p(ordered_template())
        assert len(fgraph.vertices) == 18
        assert coloring is None

    def test_vertices_are_ternary_polymorphisms(self):
        b = nae_template()
        for t in ternary_polymorphisms(b):
            assert t.arity == 3
            assert is_polymorphism(t, b)

    def test_domain_cap(self, k3):
        with pytest.raises(ResourceGuardError):
            build_f_graph(graph_template(k3))


class TestQuotientCheck:

    def test_k4_into_power_of_triangle(self, k3, k4):
        verdict = qnu_quotient_check(k4, k3, 7)
        assert not verdict.has_hom
        assert verdict.classes.source_size == 3 ** 7

    def test_triangle_maps_through_constants(self, k3):
        verdict = qnu_quotient_check(k3, k3, 2)
        assert verdict.has_hom
        assert check_homomorphism(k3, verdict.quotient, verdict.hom) == []

    def test_pattern_requirements(self, k3):
        with pytest.raises(InputError):
            qnu_quotient_check(loop_graph(), k3, 2)
        with pytest.raises(InputError):
            qnu_quotient_check(Graph.from_edges(4, [(0, 1), (1, 2), (0, 2)]), k3, 2)

    def test_contradiction_with_the_host_is_an_error(self, monkeypatch, k3, k4):
        monkeypatch.setattr(
            "src.indicator.quotient_check.qnu_quotient",
            lambda h, n, max_vertices=None: (loop_graph(), None),
        )
        with pytest.raises(CertificateError):
            qnu_quotient_check(k4, k3, 7)
