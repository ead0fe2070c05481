"""Randomized exactness checks for the Z_{p^e} linear algebra core."""

from __future__ import annotations

import itertools

import numpy as np
import pytest

from superbrauer.modlinalg import (
    cokernel_mod,
    kernel_mod,
    prime_power_factors,
    snf_mod,
    solve_mod,
)


def test_prime_power_factors():
    assert prime_power_factors(1) == []
    assert prime_power_factors(192) == [(2, 6), (3, 1)]
    assert prime_power_factors(360) == [(2, 3), (3, 2), (5, 1)]


@pytest.mark.parametrize("p,e", [(2, 1), (2, 3), (2, 6), (3, 1), (3, 2), (5, 1)])
def test_snf_transforms_random(p, e):
    q = p**e
    rng = np.random.default_rng(p * 100 + e)
    for _ in range(25):
        rows, cols = rng.integers(1, 13, 2)
        M = rng.integers(0, q, (rows, cols)).astype(np.int64)
        snf = snf_mod(M, p, e, want_l=True, want_linv=True, want_r=True, want_rinv=True)
        D = np.zeros((rows, cols), dtype=np.int64)
        for i, a in enumerate(snf.diag):
            D[i, i] = p**a % q
        assert ((snf.L @ M @ snf.R) % q == D % q).all()
        assert ((snf.L @ snf.Linv) % q == np.eye(rows, dtype=np.int64)).all()
        assert ((snf.R @ snf.Rinv) % q == np.eye(cols, dtype=np.int64)).all()


@pytest.mark.parametrize("p,e", [(2, 2), (2, 3), (3, 1)])
def test_kernel_complete_small(p, e):
    q = p**e
    rng = np.random.default_rng(11 * p + e)
    for _ in range(20):
        rows = int(rng.integers(1, 4))
        cols = int(rng.integers(1, 4))
        M = rng.integers(0, q, (rows, cols)).astype(np.int64)
        K = kernel_mod(M, p, e)
        assert ((M @ K) % q == 0).all()
        brute = {
            v
            for v in itertools.product(range(q), repeat=cols)
            if not ((M @ np.array(v, dtype=np.int64)) % q).any()
        }
        span = set()
        kk = K.shape[1]
        for coef in itertools.product(range(q), repeat=kk):
            vec = (K @ np.array(coef, dtype=np.int64)) % q if kk else np.zeros(cols, dtype=np.int64)
            span.add(tuple(int(x) for x in vec))
        assert span == brute


def test_solve_consistency():
    rng = np.random.default_rng(5)
    for p, e in [(2, 4), (3, 2)]:
        q = p**e
        for _ in range(20):
            rows, cols = rng.integers(1, 10, 2)
            M = rng.integers(0, q, (rows, cols)).astype(np.int64)
            X = rng.integers(0, q, (cols, 3)).astype(np.int64)
            B = (M @ X) % q
            S = solve_mod(M, B, p, e)
            assert S is not None
            assert ((M @ S) % q == B).all()


def test_solve_detects_unsolvable():
    # x * 2 = 1 has no solution mod 4
    M = np.array([[2]], dtype=np.int64)
    assert solve_mod(M, np.array([1]), 2, 2) is None


def test_cokernel_invariants():
    # Z_8^2 / <(2,0), (0,1)> = Z_2
    ck = cokernel_mod(np.array([[2, 0], [0, 1]]).T, 2, 3)
    assert sorted(ck.nontrivial_orders()) == [2]
    assert ck.class_coords(np.array([2, 0])) == (0,)
    # Z_8^2 / <(4,0), (0,1)> = Z_4 and the generator has order 4
    ck = cokernel_mod(np.array([[4, 0], [0, 1]]).T, 2, 3)
    assert sorted(ck.nontrivial_orders()) == [4]
    assert ck.class_coords(np.array([4, 0])) == (0,)
    gen = ck.basis_vectors()[0]
    seen = {ck.class_coords((k * gen) % 8) for k in range(4)}
    assert len(seen) == 4
