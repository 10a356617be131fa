"""Gauge oracles, exact sign balancing, and the dyadic decomposition."""

from __future__ import annotations

import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gaussbalance.balancing import (
    LpBall,
    Polytope,
    Scaled,
    ShiftedCone,
    Slab,
    Translated,
    VectorTuple,
    beta_subset,
    body_from_dict,
    dyadic_decompose,
    gauge_norm,
    min_sign_balance,
)
from gaussbalance.errors import BudgetError, DomainError


def e(i: int, n: int) -> np.ndarray:
    v = np.zeros(n)
    v[i] = 1.0
    return v


class TestGauge:
    def test_euclidean(self):
        assert gauge_norm(LpBall(2, 2.0), [2.0, 0.0]) == pytest.approx(2.0, abs=1e-14)

    def test_slab_projection(self):
        body = Slab(normal=[0.0, 1.0], half_width=0.8)
        assert gauge_norm(body, [5.0, 0.4]) == pytest.approx(0.5, abs=1e-14)

    def test_polytope_bisection_matches_closed_form(self):
        # Unit square as H-polytope: gauge is the sup norm.
        A = np.vstack([np.eye(2), -np.eye(2)])
        b = np.ones(4)
        box = Polytope(A, b, symmetric=True)
        rng = np.random.default_rng(12)
        for _ in range(50):
            x = rng.uniform(-3, 3, 2)
            assert gauge_norm(box, x) == pytest.approx(np.max(np.abs(x)), abs=1e-9)

    def test_shifted_cone_vertical_blowup(self):
        body = ShiftedCone(d=6.0, t=1.0, s=0.01)
        # point on the axis below the apex: must climb 1/(t*s) scalings
        x = np.array([1.0, 0.0])
        assert gauge_norm(body, x) == pytest.approx((1.0 - 0.0) / (1.0 * 0.01), rel=1e-6)

    def test_batch_matches_scalar(self):
        bodies = [
            LpBall(2, 1.0),
            LpBall(2, math.inf),
            Slab([1.0, 0.3], 0.5),
            ShiftedCone(d=5.0, t=1.3, s=0.4),
            Translated(LpBall(2, 2.0), [0.2, -0.1]),
        ]
        rng = np.random.default_rng(77)
        X = rng.uniform(-2, 2, size=(40, 2))
        for body in bodies:
            batch = body.gauge_many(X)
            for i, x in enumerate(X):
                assert batch[i] == pytest.approx(body.gauge(x), abs=1e-8), type(body)

    @given(st.floats(0.1, 50.0))
    @settings(max_examples=100)
    def test_positive_homogeneity(self, a):
        body = ShiftedCone(d=5.0, t=1.3, s=0.4)
        x = np.array([0.3, 0.7])
        assert gauge_norm(body, a * x) == pytest.approx(a * gauge_norm(body, x), rel=1e-7)

    def test_membership_iff_gauge_below_one(self):
        rng = np.random.default_rng(4)
        body = ShiftedCone(d=5.0, t=1.3, s=0.4)
        for _ in range(100):
            x = rng.uniform(-3, 5, 2)
            g = body.gauge(x)
            if g < 1.0 - 1e-9:
                assert body.membership(x)
            if g > 1.0 + 1e-9:
                assert not body.membership(x)

    def test_symmetric_gauge_even(self):
        rng = np.random.default_rng(9)
        for body in (LpBall(3, 1.5), Slab([1.0, -1.0, 0.5], 0.7)):
            for _ in range(20):
                x = rng.uniform(-2, 2, 3)
                assert body.gauge(x) == pytest.approx(body.gauge(-x), rel=1e-12)

    def test_translated_requires_origin(self):
        with pytest.raises(DomainError):
            Translated(LpBall(2, 2.0), [3.0, 0.0])

    def test_body_from_dict(self):
        body = body_from_dict({"kind": "lp_ball", "n": 3, "p": 2.0})
        assert isinstance(body, LpBall)
        body = body_from_dict({"kind": "shifted_cone", "d": 4.0, "t": 1.0, "s": 0.2})
        assert isinstance(body, ShiftedCone)
        with pytest.raises(DomainError):
            body_from_dict({"kind": "mystery"})


class TestMinSignBalance:
    def test_cancellation(self):
        val, _ = min_sign_balance([e(0, 2), e(0, 2)], LpBall(2, 2.0))
        assert val == pytest.approx(0.0, abs=1e-14)

    def test_orthogonal_pair(self):
        val, signs = min_sign_balance([e(0, 2), e(1, 2)], LpBall(2, 2.0))
        assert val == pytest.approx(math.sqrt(2.0), abs=1e-14)
        assert len(signs) == 2

    def test_three_vectors_against_sup_ball(self):
        vecs = np.array([[1.0, 0.0], [0.0, 1.0], [1.0 / math.sqrt(2.0)] * 2])
        val, signs = min_sign_balance(vecs, LpBall(2, math.inf))
        # brute force over all eight assignments
        brute = min(
            float(np.max(np.abs(eps @ vecs)))
            for eps in itertools.product((1.0, -1.0), repeat=3)
            for eps in [np.array(eps)]
        )
        assert val == pytest.approx(brute, abs=1e-14)
        assert np.max(np.abs(np.array(signs) @ vecs)) == pytest.approx(val, abs=1e-12)

    def test_orthonormal_tuple_is_sqrt_n(self):
        for n in range(1, 7):
            val, _ = min_sign_balance(np.eye(n), LpBall(n, 2.0))
            assert val == pytest.approx(math.sqrt(n), abs=1e-12)

    def test_random_unit_tuples_averaging_bound(self):
        rng = np.random.default_rng(31)
        for n in (2, 3, 4, 5):
            for _ in range(10):
                vecs = rng.standard_normal((n, n))
                vecs /= np.linalg.norm(vecs, axis=1, keepdims=True)
                val, _ = min_sign_balance(vecs, LpBall(n, 2.0))
                assert val * val <= n + 1e-9

    def test_permutation_and_flip_invariance(self):
        rng = np.random.default_rng(55)
        vecs = rng.standard_normal((4, 3))
        body = LpBall(3, 2.0)
        base, _ = min_sign_balance(vecs, body)
        perm = rng.permutation(4)
        val_perm, _ = min_sign_balance(vecs[perm], body)
        flipped = vecs.copy()
        flipped[2] = -flipped[2]
        val_flip, _ = min_sign_balance(flipped, body)
        assert val_perm == pytest.approx(base, abs=1e-12)
        assert val_flip == pytest.approx(base, abs=1e-12)

    def test_scaling_body_divides_value(self):
        vecs = np.array([[1.0, 0.2], [0.3, -1.0]])
        body = LpBall(2, 2.0)
        base, _ = min_sign_balance(vecs, body)
        scaled, _ = min_sign_balance(vecs, Scaled(body, 2.5))
        assert scaled == pytest.approx(base / 2.5, rel=1e-12)

    def test_matches_shuffled_recomputation(self):
        rng = np.random.default_rng(100)
        vecs = rng.standard_normal((6, 2))
        body = LpBall(2, 1.0)
        a, _ = min_sign_balance(vecs, body)
        b, _ = min_sign_balance(vecs[rng.permutation(6)], body)
        assert a == pytest.approx(b, abs=1e-12)

    def test_budget(self):
        with pytest.raises(BudgetError):
            min_sign_balance(np.zeros((25, 2)), LpBall(2, 2.0))


class TestBetaSubset:
    def test_orthogonal_pair(self):
        val = beta_subset([e(0, 2), e(1, 2)], LpBall(2, 2.0))
        assert val == pytest.approx(math.sqrt(2.0), abs=1e-14)

    def test_singleton(self):
        assert beta_subset([e(0, 2)], LpBall(2, 2.0)) == pytest.approx(1.0, abs=1e-14)

    def test_opposite_pair_reduces_to_singleton(self):
        u = np.array([0.6, 0.3])
        val = beta_subset([u, -u], LpBall(2, 2.0))
        assert val == pytest.approx(float(np.linalg.norm(u)), abs=1e-12)

    def test_dominates_full_tuple_balance(self):
        rng = np.random.default_rng(42)
        for _ in range(20):
            vecs = rng.standard_normal((4, 2))
            body = LpBall(2, 2.0)
            full, _ = min_sign_balance(vecs, body)
            assert beta_subset(vecs, body) >= full - 1e-12


class TestDyadicDecompose:
    def test_vertex_is_fixed_point(self):
        U = np.eye(2)
        body = LpBall(2, 2.0)
        z0, v = dyadic_decompose(U, body, [1.0, 0.0], 3)
        assert np.allclose(z0, [1.0, 0.0], atol=1e-12)
        assert np.allclose(v, 0.0, atol=1e-12)

    def test_center_at_depth_one(self):
        U = np.array([[1.0, 0.0], [0.0, 1.0]])
        body = LpBall(2, 2.0)
        bound = beta_subset(U, body)
        y = 0.5 * (U[0] + U[1])
        z0, v = dyadic_decompose(U, body, y, 1, bound=bound)
        assert np.allclose(z0 + v, y, atol=1e-12)
        assert body.gauge(v) <= 0.5 * bound + 1e-9

    def test_full_grid_depth_four(self):
        U = np.eye(2)
        body = LpBall(2, 2.0)
        bound = beta_subset(U, body)
        k = 4
        for i in range(2**k + 1):
            for j in range(2**k + 1):
                y = np.array([i, j]) / 2**k
                z0, v = dyadic_decompose(U, body, y, k, bound=bound)
                assert np.allclose(z0 + v, y, atol=1e-12)
                assert body.gauge(v) <= bound * (1.0 - 2.0**-k) + 1e-9

    def test_skew_tuple_grid(self):
        U = np.array([[1.0, 0.1], [-0.2, 0.9]])
        body = LpBall(2, math.inf)
        bound = beta_subset(U, body)
        k = 3
        for i in range(2**k + 1):
            for j in range(2**k + 1):
                y = (np.array([i, j]) / 2**k) @ U
                z0, v = dyadic_decompose(U, body, y, k, bound=bound)
                assert np.allclose(z0 + v, y, atol=1e-12)
                assert body.gauge(v) <= bound * (1.0 - 2.0**-k) + 1e-9

    def test_rejects_non_dyadic(self):
        with pytest.raises(DomainError):
            dyadic_decompose(np.eye(2), LpBall(2, 2.0), [1.0 / 3.0, 0.0], 4)

    def test_depth_budget(self):
        with pytest.raises(BudgetError):
            dyadic_decompose(np.eye(2), LpBall(2, 2.0), [0.5, 0.5], 13)


class TestVectorTuple:
    def test_budget(self):
        with pytest.raises(BudgetError):
            VectorTuple(np.zeros((25, 2)))

    def test_shape(self):
        vt = VectorTuple(np.eye(3))
        assert vt.t == 3 and vt.n == 3
