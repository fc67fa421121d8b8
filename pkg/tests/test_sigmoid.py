import numpy as np
import pytest

from gradarg import (
    ArgGraph,
    build_graph,
    isolate,
    propagation_matrix,
    sigmoid,
    sigmoid_evaluate,
    sigmoid_inverse,
    solve_evaluate,
)
from gradarg.errors import DampingTooSmall, OutOfOpenUnitInterval, UnknownSigmoid, WeightOnBoundary

KINDS = ("logistic", "arctan", "fraction")


def unit_graph(ids, edges, weights):
    return build_graph(ids, edges, weights)


class TestSigmoidFunctions:
    @pytest.mark.parametrize("kind", KINDS)
    def test_half_at_zero(self, kind):
        assert sigmoid(kind, 0.0) == pytest.approx(0.5, abs=1e-15)

    @pytest.mark.parametrize("kind", KINDS)
    def test_inverse_of_half_is_zero(self, kind):
        assert sigmoid_inverse(kind, 0.5) == pytest.approx(0.0, abs=1e-15)

    def test_fraction_closed_form_at_one(self):
        # (1 + |1| + 1) / (2 (1 + |1|))
        assert sigmoid("fraction", 1.0) == pytest.approx(0.75, abs=0)

    @pytest.mark.parametrize("kind", ("arctan", "fraction"))
    def test_round_trip_wide(self, kind):
        xs = np.linspace(-30, 30, 401)
        back = sigmoid_inverse(kind, sigmoid(kind, xs))
        assert np.max(np.abs(back - xs)) <= 1e-9 * (1 + np.max(np.abs(xs)))

    def test_round_trip_logistic(self):
        # exponential saturation: sigma(30) sits 9e-14 below 1.0, so a half
        # ulp of the stored value already costs ~6e-4 on the way back; 1e-9
        # round trips are only achievable in float64 up to |x| ~ 17
        xs = np.linspace(-17, 17, 401)
        back = sigmoid_inverse("logistic", sigmoid("logistic", xs))
        assert np.max(np.abs(back - xs)) <= 1e-9 * (1 + np.max(np.abs(xs)))
        wide = np.linspace(-30, 30, 401)
        back = sigmoid_inverse("logistic", sigmoid("logistic", wide))
        assert np.max(np.abs(back - wide)) <= 2e-3

    @pytest.mark.parametrize("kind", KINDS)
    def test_strictly_increasing_into_unit_interval(self, kind):
        xs = np.linspace(-30, 30, 401)
        ys = sigmoid(kind, xs)
        assert np.all(np.diff(ys) > 0)
        assert np.all(ys > 0) and np.all(ys < 1)

    @pytest.mark.parametrize("kind", KINDS)
    def test_inverse_rejects_boundary(self, kind):
        for bad in (0.0, 1.0, -0.2, 1.7):
            with pytest.raises(OutOfOpenUnitInterval):
                sigmoid_inverse(kind, bad)

    def test_unknown_kind(self):
        with pytest.raises(UnknownSigmoid):
            sigmoid("step", 0.0)


class TestSigmoidEvaluate:
    def test_all_weights_half_fixed_at_half(self):
        g = unit_graph(
            ["a", "b", "c"],
            [("a", "b", "support"), ("b", "c", "attack"), ("c", "a", "support")],
            {"a": 0.5, "b": 0.5, "c": 0.5},
        )
        for kind in KINDS:
            out = sigmoid_evaluate(g, 3, kind)
            assert np.allclose(out.degrees, 0.5, atol=1e-12)

    def test_edgeless_conservativity(self):
        g = unit_graph(["a", "b"], [], {"a": 0.2, "b": 0.9})
        out = sigmoid_evaluate(g, 2)
        assert np.allclose(out.degrees, [0.2, 0.9], atol=1e-12)

    def test_single_support_logistic_example(self):
        # weights (sigma(1), 1/2); the transformed solve gives (1, 1/2),
        # mapping back to (sigma(1), sigma(1/2))
        w_a = sigmoid("logistic", 1.0)
        g = unit_graph(["a", "b"], [("a", "b", "support")], {"a": w_a, "b": 0.5})
        out = sigmoid_evaluate(g, 2, "logistic")
        assert out.degrees[0] == pytest.approx(w_a, abs=1e-12)
        assert out.degrees[1] == pytest.approx(sigmoid("logistic", 0.5), abs=1e-12)
        assert out.degrees[0] == pytest.approx(0.73106, abs=1e-5)
        assert out.degrees[1] == pytest.approx(0.62246, abs=1e-5)

    def test_boundary_weight_rejected_not_clamped(self):
        g = unit_graph(["a"], [], {"a": 1.0})
        with pytest.raises(WeightOnBoundary):
            sigmoid_evaluate(g, 2)
        g = unit_graph(["a"], [], {"a": 1e-13})
        with pytest.raises(WeightOnBoundary):
            sigmoid_evaluate(g, 2)

    def test_damping_guard(self):
        g = unit_graph(["a"], [("a", "a", "attack")], {"a": 0.7})
        with pytest.raises(DampingTooSmall):
            sigmoid_evaluate(g, 1)

    def test_conjugacy_with_real_solve(self):
        rng = np.random.default_rng(41)
        for kind in KINDS:
            for _ in range(40):
                n = int(rng.integers(1, 7))
                incidence = np.where(
                    rng.random((n, n)) < 0.4,
                    rng.choice(np.array([-1, 1], dtype=np.int8), size=(n, n)),
                    np.zeros((n, n), dtype=np.int8)).astype(np.int8)
                weights = rng.uniform(0.1, 0.9, n)
                g = ArgGraph(tuple(f"a{i}" for i in range(n)), incidence, weights)
                out = sigmoid_evaluate(g, 8, kind)
                z = sigmoid_inverse(kind, weights)
                inner = solve_evaluate(ArgGraph(g.arguments, incidence, z), 8)
                assert np.max(np.abs(out.degrees - sigmoid(kind, inner.degrees))) <= 1e-8
                assert np.all(out.degrees > 0) and np.all(out.degrees < 1)

    def test_fixed_point_identity(self):
        rng = np.random.default_rng(43)
        for _ in range(30):
            n = int(rng.integers(1, 6))
            incidence = np.where(
                rng.random((n, n)) < 0.4,
                rng.choice(np.array([-1, 1], dtype=np.int8), size=(n, n)),
                np.zeros((n, n), dtype=np.int8)).astype(np.int8)
            weights = rng.uniform(0.15, 0.85, n)
            g = ArgGraph(tuple(f"a{i}" for i in range(n)), incidence, weights)
            deg = sigmoid_evaluate(g, 8, "logistic").degrees
            recomposed = sigmoid(
                "logistic",
                sigmoid_inverse("logistic", weights)
                + incidence @ sigmoid_inverse("logistic", deg) / 8.0)
            assert np.max(np.abs(deg - recomposed)) <= 1e-8

    def test_neutral_half_isolation(self):
        g = unit_graph(
            ["a", "b", "c"],
            [("a", "b", "support"), ("a", "c", "attack"), ("b", "c", "support")],
            {"a": 0.5, "b": 0.3, "c": 0.8},
        )
        out = sigmoid_evaluate(g, 4)
        assert out.degrees[0] == pytest.approx(0.5, abs=1e-12)
        stripped = sigmoid_evaluate(isolate(g, 0, neutral_weight=0.5), 4)
        assert np.max(np.abs(out.degrees - stripped.degrees)) <= 1e-8

    def test_strict_monotony_in_own_weight(self):
        g = unit_graph(
            ["a", "b"], [("a", "b", "support"), ("b", "a", "attack")],
            {"a": 0.4, "b": 0.6},
        )
        lower = sigmoid_evaluate(g, 3).degrees
        g2 = unit_graph(
            ["a", "b"], [("a", "b", "support"), ("b", "a", "attack")],
            {"a": 0.55, "b": 0.6},
        )
        higher = sigmoid_evaluate(g2, 3).degrees
        assert higher[0] > lower[0]

    def test_nonlinearity_witness(self):
        # asymmetric probe points: a symmetric pair around 1/2 would land on
        # the midpoint exactly because sigma(t) + sigma(-t) = 1
        edges = [("a", "b", "support")]
        w1 = {"a": 0.2, "b": 0.5}
        w2 = {"a": 0.7, "b": 0.5}
        mid = {"a": 0.45, "b": 0.5}
        d1 = sigmoid_evaluate(unit_graph(["a", "b"], edges, w1), 2).degrees
        d2 = sigmoid_evaluate(unit_graph(["a", "b"], edges, w2), 2).degrees
        dm = sigmoid_evaluate(unit_graph(["a", "b"], edges, mid), 2).degrees
        assert abs(dm[1] - (d1[1] + d2[1]) / 2) > 1e-3

    def test_signed_interval_variant(self):
        g = build_graph(["a", "b"], [("a", "b", "support")], {"a": 0.0, "b": 0.0})
        out = sigmoid_evaluate(g, 2, signed=True)
        # neutral weights stay at the signed neutral value 0
        assert np.allclose(out.degrees, 0.0, atol=1e-12)
        g2 = build_graph(["a", "b"], [("a", "b", "support")], {"a": 0.5, "b": 0.0})
        out2 = sigmoid_evaluate(g2, 2, signed=True)
        assert out2.degrees[1] > 0
        assert np.all(out2.degrees > -1) and np.all(out2.degrees < 1)
        with pytest.raises(WeightOnBoundary):
            sigmoid_evaluate(build_graph(["a"], [], {"a": 1.0}), 2, signed=True)
