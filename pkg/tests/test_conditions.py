"""
Tests for height-1 conditions: builders, triviality, combination and files
"""
import itertools
import json

import pytest
from hypothesis import given, settings as hsettings

from src.conditions.builders import S_PATTERN, T_PATTERN, sigma_of_graph, sigma_qnu, siggers
from src.conditions.combine import combine, implies_via_hom, pair_symbol
from src.conditions.io import condition_from_dict, condition_to_dict, read_condition, write_condition
from src.conditions.model import HeightOneCondition, Identity, Symbol, Term
from src.conditions.triviality import ProjectionWitness, is_trivial, verify_projection_witness
from src.errors import InputError, ParseError
from src.graphs.model import Graph, complete_graph, cycle_graph, loop_graph
from src.solver.checker import check_homomorphism
from src.solver.homomorphism import three_color
from strategies import small_conditions


def all_graphs(max_n: int):
    for n in range(1, max_n + 1):
        pairs = list(itertools.combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            yield Graph.from_edges(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def renamed(c: HeightOneCondition, prefix: str) -> HeightOneCondition:
    name = {s.name: f"{prefix}{s.name}" for s in c.symbols}
    return HeightOneCondition.build(
        [Symbol(name[s.name], s.arity) for s in c.symbols],
        [
            Identity(i.var_count, Term(name[i.lhs.symbol], i.lhs.args), Term(name[i.rhs.symbol], i.rhs.args))
            for i in c.identities
        ],
    )


class TestModel:

    def test_validation(self):
        with pytest.raises(InputError):
            HeightOneCondition((Symbol("f", 2), Symbol("f", 3)))
        with pytest.raises(InputError):
            HeightOneCondition((Symbol("f", 0),))
        with pytest.raises(InputError):
            HeightOneCondition((Symbol("f", 2),), (Identity(2, Term("f", (0,)), Term("f", (0, 1))),))
        with pytest.raises(InputError):
            HeightOneCondition((Symbol("f", 1),), (Identity(1, Term("f", (1,)), Term("f", (0,))),))
        with pytest.raises(InputError):
            HeightOneCondition((Symbol("f", 1),), (Identity(1, Term("g", (0,)), Term("f", (0,))),))

    def test_normal_form(self):
        ident = Identity(2, Term("f", (0, 1)), Term("f", (1, 0)))
        c = HeightOneCondition((Symbol("g", 1), Symbol("f", 2)), (ident, ident))
        assert c.normalized().symbol_names == ["f", "g"]
        assert len(c.normalized().identities) == 1


class TestBuilders:

    def test_sigma_of_triangle(self, k3):
        c = sigma_of_graph(k3)
        assert sorted(c.arities.values()) == [3, 3, 3, 6, 6, 6]
        assert len(c.identities) == 6

    def test_sigma_of_loop(self):
        c = sigma_of_graph(loop_graph())
        assert c.symbol_names == ["f0", "g0_0"]
        assert len(c.identities) == 2

    def test_diagonals_never_agree(self):
        assert all(t != s for t, s in zip(T_PATTERN, S_PATTERN))

    def test_siggers(self):
        c = siggers()
        assert c.arities == {"s": 6}
        assert len(c.identities) == 1

    def test_qnu(self):
        c = sigma_qnu(3)
        assert c.arities == {"f": 3}
        assert len(c.identities) == 3
        with pytest.raises(InputError):
            sigma_qnu(1)


class TestTriviality:

    def test_triangle_condition_is_trivial(self, k3):
        witness = is_trivial(sigma_of_graph(k3))
        assert witness is not None
        assert verify_projection_witness(sigma_of_graph(k3), witness) == []
        coords = [witness.as_dict()[f"f{v}"] for v in range(3)]
        assert sorted(coords) == [0, 1, 2]

    def test_nontrivial_conditions(self, k4):
        assert is_trivial(sigma_of_graph(k4)) is None
        assert is_trivial(siggers()) is None
        assert is_trivial(sigma_qnu(4)) is None
        assert is_trivial(sigma_of_graph(loop_graph())) is None

    def test_no_identities_is_trivial(self):
        c = HeightOneCondition.build([Symbol("f", 2)], [])
        assert is_trivial(c).as_dict() == {"f": 0}

    def test_rejects_bad_witness(self, k3):
        c = sigma_of_graph(k3)
        bad = ProjectionWitness.of({name: 0 for name in c.symbol_names})
        assert verify_projection_witness(c, bad)
        missing = ProjectionWitness.of({"f0": 0})
        assert verify_projection_witness(c, missing)

    def test_agrees_with_3_coloring_on_small_graphs(self):
        checked = 0
        for g in all_graphs(5):
            c = sigma_of_graph(g)
            witness = is_trivial(c)
            assert (witness is None) == (three_color(g) is None), g.sorted_edges
            if witness is not None:
                assert verify_projection_witness(c, witness) == []
                # The chosen coordinates form a 3-coloring
                choice = witness.as_dict()
                coloring = [choice[f"f{v}"] for v in range(g.n)]
                assert check_homomorphism(g, complete_graph(3), coloring) == []
            checked += 1
        assert checked == 1 + 2 + 8 + 64 + 1024

    @given(small_conditions())
    def test_invariant_under_renaming(self, c):
        assert (is_trivial(c) is None) == (is_trivial(renamed(c, "r_")) is None)


class TestCombine:

    def test_siggers_squared(self):
        c = combine(siggers(), siggers())
        assert c.arities == {pair_symbol("s", "s"): 12}
        assert len(c.identities) == 2

    def test_padding(self):
        a = HeightOneCondition.build([Symbol("f", 1)], [Identity(1, Term("f", (0,)), Term("f", (0,)))])
        b = HeightOneCondition.build([Symbol("g", 2)], [Identity(2, Term("g", (0, 1)), Term("g", (1, 0)))])
        c = combine(a, b)
        assert c.arities == {"f|g": 3}
        lhs = sorted((i.var_count, i.lhs.args, i.rhs.args) for i in c.identities)
        assert lhs == [(3, (0, 1, 2), (0, 1, 2)), (3, (0, 1, 2), (0, 2, 1))]

    def test_battery(self, k3, k4):
        battery = [
            sigma_of_graph(k3),
            sigma_of_graph(k4),
            sigma_of_graph(cycle_graph(5)),
            sigma_of_graph(complete_graph(2)),
            sigma_of_graph(loop_graph()),
            siggers(),
            sigma_qnu(2),
            sigma_qnu(3),
            HeightOneCondition.build([Symbol("f", 2)], []),
            HeightOneCondition.build([Symbol("f", 2)], [Identity(2, Term("f", (0, 1)), Term("f", (1, 0)))]),
            HeightOneCondition.build([Symbol("f", 3)], [Identity(2, Term("f", (0, 0, 1)), Term("f", (0, 1, 1)))]),
            HeightOneCondition.build(
                [Symbol("f", 1), Symbol("g", 2)],
                [Identity(2, Term("f", (0,)), Term("g", (0, 1)))],
            ),
        ]
        pairs = 0
        for a in battery:
            for b in battery:
                if len(a.symbols) * len(b.symbols) > 40:
                    continue
                expected = is_trivial(a) is not None or is_trivial(b) is not None
                assert (is_trivial(combine(a, b)) is not None) == expected
                pairs += 1
        assert pairs >= 20

    @hsettings(max_examples=80)
    @given(small_conditions(), small_conditions())
    def test_combination_law(self, a, b):
        expected = is_trivial(a) is not None or is_trivial(b) is not None
        assert (is_trivial(combine(a, b)) is not None) == expected

    def test_implication_through_homomorphism(self, k3):
        hom = implies_via_hom(cycle_graph(5), k3)
        assert check_homomorphism(cycle_graph(5), k3, hom) == []
        assert implies_via_hom(complete_graph(4), k3) is None


class TestConditionFiles:

    def test_round_trip(self, k3):
        c = sigma_of_graph(k3)
        assert read_condition(write_condition(c)) == c
        assert condition_from_dict(condition_to_dict(siggers())) == siggers()

    def test_format(self):
        data = json.loads(write_condition(siggers()))
        assert data["symbols"] == [{"name": "s", "arity": 6}]
        assert data["identities"][0]["vars"] == 3

    def test_errors(self):
        with pytest.raises(ParseError):
            read_condition("{not json")
        with pytest.raises(ParseError):
            condition_from_dict({"symbols": [{"name": "f", "arity": 0}]})
        with pytest.raises(ParseError):
            condition_from_dict({
                "symbols": [{"name": "f", "arity": 1}],
                "identities": [{"vars": 1, "lhs": {"symbol": "g", "args": [0]}, "rhs": {"symbol": "f", "args": [0]}}],
            })
