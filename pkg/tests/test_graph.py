import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from gradarg import (
    ArgGraph,
    build_graph,
    circular_indegree,
    hereditarily_circular,
    indegree,
    influence,
    is_bounded_support_graph,
    is_isomorphic,
    isolate,
    neighbors,
    parent_row,
    permute,
    union,
)
from gradarg.errors import (
    DimensionMismatch,
    DuplicateArgument,
    DuplicateEdge,
    IndexOutOfRange,
    NonFiniteWeight,
    SharedComponent,
    SizeMismatch,
    UnknownEndpoint,
)
from conftest import chain, random_signed_graph


class TestBuildGraph:
    def test_four_argument_example(self, four_args):
        expected = np.array([
            [0, 0, 0, 0],
            [1, 1, -1, -1],
            [1, 1, 0, -1],
            [0, 0, 0, 0],
        ])
        assert np.array_equal(four_args.incidence, expected)
        assert np.array_equal(four_args.weights, [0.5, 2, 2, 1])

    def test_single_argument_no_edges(self):
        g = build_graph(["a"], [], {"a": 1.0})
        assert g.n == 1
        assert np.array_equal(g.incidence, [[0]])

    def test_unknown_endpoint(self):
        with pytest.raises(UnknownEndpoint):
            build_graph(["a"], [("a", "x", "support")], {"a": 1.0})

    def test_duplicate_argument(self):
        with pytest.raises(DuplicateArgument):
            build_graph(["a", "a"], [], {"a": 1.0})

    def test_duplicate_edge_even_with_same_polarity(self):
        with pytest.raises(DuplicateEdge):
            build_graph(["a", "b"], [("a", "b", 1), ("a", "b", 1)], {"a": 1, "b": 1})

    def test_simultaneous_support_and_attack_rejected(self):
        with pytest.raises(DuplicateEdge):
            build_graph(["a", "b"], [("a", "b", 1), ("a", "b", -1)], {"a": 1, "b": 1})

    def test_non_finite_weight(self):
        with pytest.raises(NonFiniteWeight):
            build_graph(["a"], [], {"a": float("nan")})

    def test_missing_weight(self):
        with pytest.raises(NonFiniteWeight):
            build_graph(["a", "b"], [], {"a": 1.0})

    def test_weight_for_undeclared_argument(self):
        with pytest.raises(UnknownEndpoint):
            build_graph(["a"], [], {"a": 1.0, "ghost": 2.0})

    def test_bad_incidence_entry(self):
        with pytest.raises(DimensionMismatch):
            ArgGraph(("a",), np.array([[2]]), np.array([1.0]))

    def test_immutable(self, four_args):
        with pytest.raises(ValueError):
            four_args.incidence[0, 0] = 1
        with pytest.raises(ValueError):
            four_args.weights[0] = 9.0


def closure_oracle(graph, a):
    """Brute-force fixpoint of the two defining set equations."""
    supp = {i: set(np.flatnonzero(graph.incidence[i] == 1).tolist()) for i in range(graph.n)}
    att = {i: set(np.flatnonzero(graph.incidence[i] == -1).tolist()) for i in range(graph.n)}
    back, detr = set(supp[a]), set(att[a])
    while True:
        new_back = set(supp[a])
        new_detr = set(att[a])
        for x in back:
            new_back |= supp[x]
            new_detr |= att[x]
        for x in detr:
            new_back |= att[x]
            new_detr |= supp[x]
        if new_back == back and new_detr == detr:
            return back, detr
        back, detr = back | new_back, detr | new_detr


class TestNeighbors:
    def test_direct_sets(self, four_args):
        nb = neighbors(four_args, 1)
        assert nb.attackers == {2, 3}
        assert nb.supporters == {0, 1}

    def test_no_edges(self):
        g = build_graph(["a", "b"], [], {"a": 1, "b": 2})
        nb = neighbors(g, 0)
        assert nb.attackers == nb.supporters == nb.backers == nb.detractors == frozenset()

    def test_closure_matches_oracle_on_example(self, four_args):
        # a3 is backed and detracted by everything: a2 attacks itself via a3,
        # so signs mix through the a2 self-support cycle
        back, detr = closure_oracle(four_args, 2)
        nb = neighbors(four_args, 2)
        assert nb.backers == frozenset(back) == frozenset({0, 1, 2, 3})
        assert nb.detractors == frozenset(detr) == frozenset({0, 1, 2, 3})

    def test_closure_matches_oracle_randomized(self):
        rng = np.random.default_rng(5)
        for _ in range(150):
            g = random_signed_graph(rng, n_max=8, density=0.3)
            for a in range(g.n):
                back, detr = closure_oracle(g, a)
                nb = neighbors(g, a)
                assert nb.backers == frozenset(back)
                assert nb.detractors == frozenset(detr)

    def test_out_of_range(self, four_args):
        with pytest.raises(IndexOutOfRange):
            neighbors(four_args, 4)

    def test_direct_sets_partition_parent_row(self):
        rng = np.random.default_rng(11)
        for _ in range(50):
            g = random_signed_graph(rng, n_max=6, density=0.4)
            for i in range(g.n):
                nb = neighbors(g, i)
                row = parent_row(g, i)
                assert nb.supporters & nb.attackers == frozenset()
                assert nb.supporters | nb.attackers == frozenset(
                    np.flatnonzero(row != 0).tolist())


class TestInfluence:
    def test_weighted_example(self, four_args):
        # supporters minus attackers of a2: 0.5 + 2 - 2 - 1
        result = influence(four_args, four_args.weights)
        manual = []
        for i in range(4):
            total = 0.0
            for j in range(4):
                total += four_args.incidence[i, j] * four_args.weights[j]
            manual.append(total)
        assert result[1] == pytest.approx(-0.5, abs=1e-12)
        assert np.allclose(result, manual, atol=0)

    def test_zero_vector(self, four_args):
        assert np.array_equal(influence(four_args, np.zeros(4)), np.zeros(4))

    def test_edgeless(self):
        g = build_graph(["a", "b"], [], {"a": 3, "b": -2})
        assert np.array_equal(influence(g, [5.0, 7.0]), np.zeros(2))

    def test_dimension_mismatch(self, four_args):
        with pytest.raises(DimensionMismatch):
            influence(four_args, [1.0, 2.0])

    @given(st.integers(0, 2**32 - 1), st.floats(-3, 3), st.floats(-3, 3))
    @settings(max_examples=60, deadline=None)
    def test_linearity(self, seed, alpha, beta):
        rng = np.random.default_rng(seed)
        g = random_signed_graph(rng, n_max=6, density=0.5)
        u = rng.uniform(-1, 1, g.n)
        v = rng.uniform(-1, 1, g.n)
        lhs = influence(g, alpha * u + beta * v)
        rhs = alpha * influence(g, u) + beta * influence(g, v)
        assert np.max(np.abs(lhs - rhs)) <= 1e-12


class TestUnion:
    def test_block_diagonal(self):
        g1 = build_graph(["a", "b"], [("a", "b", 1)], {"a": 1, "b": 2})
        g2 = build_graph(["c", "d", "e"], [("c", "d", -1)], {"c": 3, "d": 4, "e": 5})
        u = union(g1, g2)
        assert u.n == 5
        assert np.array_equal(u.incidence[:2, :2], g1.incidence)
        assert np.array_equal(u.incidence[2:, 2:], g2.incidence)
        assert not u.incidence[:2, 2:].any()
        assert not u.incidence[2:, :2].any()

    def test_union_with_empty(self):
        g1 = build_graph(["a", "b"], [("b", "a", -1)], {"a": 1, "b": 2})
        empty = ArgGraph((), np.zeros((0, 0)), np.zeros(0))
        u = union(g1, empty)
        assert u.arguments == g1.arguments
        assert np.array_equal(u.incidence, g1.incidence)
        assert np.array_equal(u.weights, g1.weights)

    def test_shared_component(self):
        g1 = build_graph(["a"], [], {"a": 1})
        g2 = build_graph(["a"], [], {"a": 2})
        with pytest.raises(SharedComponent):
            union(g1, g2)

    def test_associative_and_indegree(self):
        rng = np.random.default_rng(3)
        for _ in range(25):
            gs = []
            for k in range(3):
                g = random_signed_graph(rng, n_max=4, density=0.5)
                gs.append(ArgGraph(tuple(f"g{k}_{a}" for a in g.arguments),
                                   g.incidence, g.weights))
            g1, g2, g3 = gs
            left = union(union(g1, g2), g3)
            right = union(g1, union(g2, g3))
            assert left.arguments == right.arguments
            assert np.array_equal(left.incidence, right.incidence)
            assert np.array_equal(left.weights, right.weights)
            assert indegree(union(g1, g2)) == max(indegree(g1), indegree(g2))


class TestIsolate:
    def test_zeroes_row_column_and_weight(self, four_args):
        isolated = isolate(four_args, 1)
        assert not isolated.incidence[1, :].any()
        assert not isolated.incidence[:, 1].any()
        assert isolated.weights[1] == 0.0
        # the elementwise definition, checked independently
        for i in range(4):
            for j in range(4):
                expected = 0 if (i == 1 or j == 1) else four_args.incidence[i, j]
                assert isolated.incidence[i, j] == expected

    def test_untouched_entries_bit_identical(self, four_args):
        isolated = isolate(four_args, 1)
        keep = [0, 2, 3]
        assert np.array_equal(isolated.incidence[np.ix_(keep, keep)],
                              four_args.incidence[np.ix_(keep, keep)])
        assert np.array_equal(isolated.weights[keep], four_args.weights[keep])

    def test_idempotent_on_structure(self):
        g = build_graph(["a", "b"], [], {"a": 5, "b": 2})
        once = isolate(g, 0)
        assert np.array_equal(once.incidence, g.incidence)
        assert once.weights[0] == 0.0

    def test_order_independent(self, four_args):
        both = isolate(four_args, [0, 1])
        ab = isolate(isolate(four_args, 0), 1)
        ba = isolate(isolate(four_args, 1), 0)
        for other in (ab, ba):
            assert np.array_equal(both.incidence, other.incidence)
            assert np.array_equal(both.weights, other.weights)

    def test_neutral_weight_parameter(self, four_args):
        isolated = isolate(four_args, 2, neutral_weight=0.5)
        assert isolated.weights[2] == 0.5


class TestIsomorphism:
    def test_identity(self, four_args):
        assert is_isomorphic(four_args, four_args, list(range(4)))

    def test_swapped_two_cycle(self):
        g1 = build_graph(["a", "b"], [("a", "b", 1), ("b", "a", 1)], {"a": 1, "b": 2})
        g2 = build_graph(["x", "y"], [("x", "y", 1), ("y", "x", 1)], {"x": 2, "y": 1})
        assert is_isomorphic(g1, g2, [1, 0])

    def test_polarity_mismatch(self):
        g1 = build_graph(["a", "b"], [("a", "b", 1)], {"a": 1, "b": 1})
        g2 = build_graph(["a", "b"], [("a", "b", -1)], {"a": 1, "b": 1})
        assert not is_isomorphic(g1, g2, [0, 1])

    def test_size_mismatch(self):
        g1 = build_graph(["a"], [], {"a": 1})
        g2 = build_graph(["a", "b"], [], {"a": 1, "b": 1})
        with pytest.raises(SizeMismatch):
            is_isomorphic(g1, g2, [0])

    def test_non_bijection(self, four_args):
        with pytest.raises(SizeMismatch):
            is_isomorphic(four_args, four_args, [0, 0, 1, 2])

    def test_dict_mapping_accepted(self):
        g1 = build_graph(["a", "b"], [("a", "b", 1)], {"a": 1, "b": 2})
        g2 = build_graph(["x", "y"], [("y", "x", 1)], {"x": 2, "y": 1})
        assert is_isomorphic(g1, g2, {0: 1, 1: 0})

    def test_permute_produces_isomorphic_graph(self):
        rng = np.random.default_rng(17)
        for _ in range(25):
            g = random_signed_graph(rng, n_max=6, density=0.5)
            perm = list(rng.permutation(g.n))
            assert is_isomorphic(g, permute(g, perm), perm)


class TestIndegree:
    def test_example(self, four_args):
        assert indegree(four_args) == 4

    def test_edgeless(self):
        assert indegree(build_graph(["a", "b"], [], {"a": 1, "b": 1})) == 0

    def test_single_self_attack(self, self_attack):
        assert indegree(self_attack) == 1


class TestHereditarilyCircular:
    def test_acyclic_chain(self):
        g = chain([1, 1])
        assert hereditarily_circular(g) == frozenset()
        assert circular_indegree(g) == 0

    def test_self_attack_spreads_downstream(self):
        g = build_graph(["a", "b"], [("a", "a", -1), ("a", "b", 1)], {"a": 1, "b": 1})
        assert hereditarily_circular(g) == frozenset({0, 1})
        assert circular_indegree(g) == 1

    def test_school_all_circular(self, school):
        assert hereditarily_circular(school) == frozenset(range(4))
        assert circular_indegree(school) == 2

    def test_matches_scc_oracle(self):
        rng = np.random.default_rng(23)
        for _ in range(80):
            g = random_signed_graph(rng, n_max=7, density=0.3)
            # oracle: path matrix by repeated squaring of |G| in influence
            # direction, then cycles = nodes reaching themselves
            adj = (np.abs(g.incidence).T > 0)
            reach = adj.copy()
            for _k in range(g.n):
                reach = reach | (reach @ adj)
            on_cycle = {i for i in range(g.n) if reach[i, i]}
            expected = {j for j in range(g.n)
                        if any(reach[i, j] for i in on_cycle)} | on_cycle
            assert hereditarily_circular(g) == frozenset(expected)


class TestBoundedSupport:
    def test_mixed_graph_is_not(self, four_args):
        assert not is_bounded_support_graph(four_args)

    def test_support_only_unit_weights(self):
        g = build_graph(["a", "b"], [("a", "b", 1)], {"a": 0.5, "b": 0.5})
        assert is_bounded_support_graph(g)

    def test_weight_above_one(self):
        g = build_graph(["a", "b"], [("a", "b", 1)], {"a": 0.5, "b": 1.5})
        assert not is_bounded_support_graph(g)
