"""
Tests for the CSP engine, certificates and homomorphism search
"""
import pytest
from hypothesis import given

from src.errors import CertificateError, InputError
from src.graphs.model import Graph, complete_graph, cycle_graph, loop_graph, petersen_graph
from src.solver.checker import (
    brute_force_solve,
    check_assignment,
    check_coloring,
    check_homomorphism,
    verify_certificate,
)
from src.solver.csp import (
    BacktrackingSolver,
    Certificate,
    CertificateKind,
    Constraint,
    CspInstance,
    solve,
)
from src.solver.homomorphism import find_hom, hom_instance, is_3colorable, three_color
from strategies import csp_instances, small_graphs

NOT_EQUAL_3 = [(a, b) for a in range(3) for b in range(3) if a != b]


class TestCspInstance:

    def test_scope_out_of_range(self):
        with pytest.raises(InputError):
            CspInstance(2, 2, (Constraint.of((0, 2), [(0, 0)]),))

    def test_row_length_mismatch(self):
        with pytest.raises(InputError):
            CspInstance(2, 2, (Constraint.of((0, 1), [(0,)]),))

    def test_digest_ignores_constraint_order(self):
        c1 = Constraint.of((0, 1), NOT_EQUAL_3)
        c2 = Constraint.of((1, 2), NOT_EQUAL_3)
        assert CspInstance(3, 3, (c1, c2)).digest() == CspInstance(3, 3, (c2, c1)).digest()
        assert CspInstance(3, 3, (c1,)).digest() != CspInstance(3, 3, (c2,)).digest()


class TestSolver:

    @given(csp_instances())
    def test_agrees_with_brute_force(self, instance):
        cert = solve(instance)
        oracle = brute_force_solve(instance)
        assert cert.satisfiable == (oracle is not None)
        if cert.satisfiable:
            assert check_assignment(instance, cert.payload) == []
        else:
            assert cert.digest == instance.digest()

    @given(csp_instances())
    def test_equality_merging_does_not_change_the_answer(self, instance):
        merged = solve(instance, equality_merging=True)
        plain = solve(instance, equality_merging=False)
        assert merged.satisfiable == plain.satisfiable

    @given(csp_instances())
    def test_deterministic(self, instance):
        assert solve(instance) == solve(instance)

    def test_equalities_are_enforced(self):
        instance = CspInstance(
            3, 3,
            (Constraint.of((0, 1), NOT_EQUAL_3),),
            equalities=((1, 2), (0, 2)),
        )
        assert not solve(instance).satisfiable
        assert not solve(instance, equality_merging=False).satisfiable

    def test_repeated_scope_variables(self):
        instance = CspInstance(1, 2, (Constraint.of((0, 0), [(0, 1), (1, 1)]),))
        assert solve(instance).payload == (1,)

    def test_empty_domain(self):
        assert not solve(CspInstance(1, 0)).satisfiable

    def test_counts_nodes(self):
        solver = BacktrackingSolver()
        solver.solve(hom_instance(complete_graph(4), complete_graph(3)))
        assert solver.nodes > 0


class TestCertificates:

    def test_round_trip(self):
        cert = Certificate(CertificateKind.COLORING, (0, 1, 2), "abc")
        assert Certificate.from_dict(cert.to_dict()) == cert

    def test_verify_assignment(self):
        instance = CspInstance(2, 3, (Constraint.of((0, 1), NOT_EQUAL_3),))
        verify_certificate(instance, solve(instance))
        with pytest.raises(CertificateError):
            verify_certificate(instance, Certificate(CertificateKind.ASSIGNMENT, (1, 1)))

    def test_verify_exhaustion(self):
        instance = hom_instance(complete_graph(4), complete_graph(3))
        cert = solve(instance)
        assert cert.kind == CertificateKind.EXHAUSTED
        verify_certificate(instance, cert)
        other = hom_instance(complete_graph(3), complete_graph(3))
        with pytest.raises(CertificateError):
            verify_certificate(other, cert)
        forged = Certificate(CertificateKind.EXHAUSTED, None, other.digest())
        with pytest.raises(CertificateError):
            verify_certificate(other, forged)

    def test_relabel_keeps_exhaustion(self):
        cert = Certificate(CertificateKind.EXHAUSTED, None, "d")
        assert cert.relabel(CertificateKind.COLORING) is cert


class TestHomomorphisms:

    def test_odd_cycle_to_k2(self):
        assert find_hom(cycle_graph(5), complete_graph(2)) is None
        assert find_hom(cycle_graph(6), complete_graph(2)) is not None

    def test_loops_must_land_on_loops(self):
        assert find_hom(complete_graph(2), loop_graph()) == (0, 0)
        assert find_hom(loop_graph(), complete_graph(2)) is None

    def test_petersen_is_3_colorable(self):
        coloring = three_color(petersen_graph())
        assert check_coloring(petersen_graph(), coloring) == []

    def test_pins(self, k3):
        coloring = three_color(k3, {0: 2, 1: 0})
        assert coloring == (2, 0, 1)
        assert three_color(k3, {0: 1, 1: 1}) is None

    def test_check_homomorphism_reports_problems(self, k3):
        assert check_homomorphism(k3, k3, (0, 0, 1))
        assert check_homomorphism(k3, k3, (0, 1)) == ["map has 2 entries for 3 vertices"]
        assert check_homomorphism(k3, k3, (0, 1, 5))

    @given(small_graphs(max_n=6, loops=True), small_graphs(max_n=3, loops=True))
    def test_matches_brute_force(self, g, h):
        hom = find_hom(g, h)
        oracle = brute_force_solve(hom_instance(g, h))
        assert (hom is None) == (oracle is None)
        if hom is not None:
            assert check_homomorphism(g, h, hom) == []

    def test_k4_is_not_3_colorable(self, k4):
        assert not is_3colorable(k4)
        assert is_3colorable(Graph(5))
