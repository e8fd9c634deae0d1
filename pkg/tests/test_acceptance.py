"""Acceptance gate: nine end-to-end criteria, one test (= one report line) each.

Run with `pytest -v tests/test_acceptance.py` to get a pass/fail line per
criterion.  Each test carries its own wall-clock budget where one applies.
"""

import time
from fractions import Fraction

from rsmld.bivar import hasse_constraints, hasse_derivative_value, koetter_interpolate
from rsmld.code import RSCode, Word, corrupt, random_word
from rsmld.division import decode_minimal, decode_minimal_reencoded, level_shapes
from rsmld.fields import Field
from rsmld.groebner import mgb_euclid, mgb_iterative
from rsmld.polys import Polynomial
from rsmld.rational import anchor_points, decode_rational, rational_factorize
from rsmld.ratparams import (multiplicity_scan, optimize_params,
                             single_multiplicity_params, wu_params)
from rsmld.rng import XorShift64Star

F7 = Field(7)
F16 = Field(2, 4)


def test_criterion_1_single_error_example():
    start = time.monotonic()
    code = RSCode(F7, 7, 5)
    r = Word(code, (3, 2, 6, 3, 4, 2, 4))
    pair = mgb_iterative(code, r)
    assert (pair.ell1, pair.ell2) == (6, 5)
    # the reference basis element (2x^3 - x^2 + 2x - 3, -x + 1), up to the
    # monic normalization scalar
    ref = (Polynomial(F7, [4, 2, 6, 2]), Polynomial(F7, [1, 6]))
    c = F7.div(pair.g2.f2.leading(), ref[1].leading())
    assert pair.g2.f1 == ref[0].scale(c)
    assert pair.g2.f2 == ref[1].scale(c)

    expected = [[3, 1, 2]]                       # 2x^2 + x + 3
    for fn in (decode_minimal, decode_minimal_reencoded, decode_rational):
        out = fn(code, r)
        assert out.min_distance == 1
        assert out.message_coeff_lists() == expected
    assert time.monotonic() - start < 1.0


def test_criterion_2_two_error_example():
    start = time.monotonic()
    code = RSCode(F7, 7, 4)
    r = Word(code, (3, 2, 6, 3, 2, 2, 4))
    pair = mgb_iterative(code, r)
    assert (pair.ell1, pair.ell2) == (5, 5)

    # {2x^2 + x + 3, 3x^3 + 5x^2 + 3x + 5, 5x^3 + 5x^2 + 3x + 3}
    expected = [[3, 1, 2], [3, 3, 5, 5], [5, 3, 5, 3]]
    for fn in (decode_minimal, decode_minimal_reencoded, decode_rational):
        out = fn(code, r)
        assert out.min_distance == 2
        assert out.message_coeff_lists() == expected
    assert time.monotonic() - start < 1.0


def test_criterion_3_optimizer_large_code():
    start = time.monotonic()
    res = optimize_params(127, 24, 64, 15, 9)
    assert res.s_min == 2
    assert [(p.M, p.rho, p.U) for p in res.rows] == [
        (4, 88, 385), (5, 78, 384), (6, 72, 385)]
    assert (res.best.M, res.best.rho, res.best.U) == (4, 88, 385)

    wu = wu_params(127, 24, 64, 15, 9)
    # rho is pinned by the identity rho = t*s - M*k2 - 1 = 128 - 45 - 1 = 82,
    # the unique value consistent with U = (rho+1)(M+1) - (w/2)M(M+1) = 408
    assert (wu.s, wu.M, wu.rho, wu.N, wu.U) == (2, 5, 82, 381, 408)
    assert wu.rho == wu.t * wu.s - wu.M * wu.k2 - 1
    assert time.monotonic() - start < 1.0


def test_criterion_4_multiplicity_scan_midsize():
    start = time.monotonic()
    assert not multiplicity_scan(15, 5, 7, 2, 1, 1).feasible

    s6 = multiplicity_scan(15, 5, 7, 2, 1, 6)
    assert not s6.feasible
    assert s6.M1 == 13 and s6.M2 == 14          # no integer strictly between

    res = optimize_params(15, 5, 7, 2, 1)
    assert res.s_min == 7
    s7 = res.scan[-1]
    assert s7.M1 == 14
    assert s7.M2 == Fraction(53, 3)
    assert abs(float(s7.M2) - 17.67) < 0.01
    assert [p.M for p in res.rows] == [15, 16, 17]
    assert res.best.M == 15 and res.best.rho == 33
    assert time.monotonic() - start < 1.0


def test_criterion_5_oracle_equivalence_small_codes():
    start = time.monotonic()
    codes = (RSCode(F7, 7, 3), RSCode(F7, 7, 4), RSCode(Field(2, 3), 8, 3))
    for code in codes:
        for seed in range(200):
            r = random_word(code, seed)
            want = code.ml_oracle(r)
            for fn in (decode_minimal, decode_minimal_reencoded,
                       decode_rational):
                got = fn(code, r, beyond_johnson=True)
                assert got == want, (code.n, code.k, seed, fn.__name__)
    assert time.monotonic() - start < 300.0


def test_criterion_6_unique_decoding_regime():
    start = time.monotonic()
    for code in (RSCode(F16, 15, 5), RSCode(Field(2, 5), 31, 15)):
        w_max = (code.n - code.k) // 2
        rng = XorShift64Star(2024)
        for trial in range(500):
            msg = Polynomial(code.field,
                             [rng.below(code.field.q) for _ in range(code.k)])
            sent = code.encode(msg)
            weight = rng.below(w_max + 1)
            r = corrupt(sent, weight, seed=rng.next_u64())
            out = decode_minimal(code, r)
            assert out.min_distance == weight
            assert out.messages == (msg,)
            assert out.search_level == 0
            assert out.ell1 > out.ell2   # level 0 admits only (a, b) = (0, 1)
    assert time.monotonic() - start < 120.0


def test_criterion_7_basis_invariants_at_scale():
    start = time.monotonic()
    combos = (RSCode(F7, 7, 4), RSCode(Field(2, 3), 8, 3),
              RSCode(F16, 15, 5), RSCode(Field(2, 5), 31, 7),
              RSCode(Field(13), 13, 6))
    for code in combos:
        for seed in range(200):
            r = random_word(code, seed)
            it = mgb_iterative(code, r)
            assert it.ell1 + it.ell2 == code.n + code.k - 1, (code.n, seed)
            assert it.g1.f2.gcd(it.g2.f2).degree() == 0, (code.n, seed)
            assert mgb_euclid(code, r) == it, (code.n, seed)
    assert time.monotonic() - start < 120.0


def _replay_fit(code, pair, shape):
    """Build the level fit directly and check every post-condition."""
    n, k = code.n, code.k
    t, k1, k2 = shape.t, shape.a_max_deg, shape.b_deg
    if k1 == 0 and k2 == 0:
        params = single_multiplicity_params(n, t, k1, k2)
    else:
        params = optimize_params(n, k, t, k1, k2).best
    w = k1 - k2
    anchors = anchor_points(code, pair)
    q = koetter_interpolate(code.field, anchors, params.s, params.M, w,
                            rho=params.rho)

    assert params.N == n * params.s * (params.s + 1) // 2
    constraints = hasse_constraints(params.s)
    assert len(constraints) * n == params.N
    for pt in anchors:
        if pt.is_infinite:
            target, zval = q.z_reverse(params.M), 0
        else:
            target, zval = q, code.field.div(pt.z_num, pt.z_den)
        for u, v in constraints:
            assert hasse_derivative_value(target, u, v, pt.x, zval) == 0

    assert q.zdeg() <= params.M
    assert q.wdeg(w) <= params.rho

    mz = q.zdeg()
    slices = [q.slice_z(j) for j in range(mz + 1)]
    for a, b in rational_factorize(q, k1, k2):
        total = Polynomial.zero(code.field)
        for j in range(mz + 1):
            term = slices[j]
            for _ in range(j):
                term = term * a
            for _ in range(mz - j):
                term = term * b
            total = total + term
        assert total.is_zero()
    return 1


def test_criterion_8_interpolation_postconditions():
    checked = 0
    cases = [(RSCode(F7, 7, 4), Word(RSCode(F7, 7, 4), (3, 2, 6, 3, 2, 2, 4)))]
    code15 = RSCode(F16, 15, 5)
    for seed in (100, 101, 102, 103, 104):
        sent = code15.encode([seed % 16, 3, 7, 2, 9])
        cases.append((code15, corrupt(sent, 7, seed=seed)))
    code8 = RSCode(Field(2, 3), 8, 3)
    for seed in (0, 1, 2, 3, 4):
        cases.append((code8, random_word(code8, seed)))

    for code, r in cases:
        pair = mgb_iterative(code, r)
        cap = min(code.johnson_radius_max(), code.n - code.k)
        for shape in level_shapes(pair, code.k, cap):
            if shape.a_max_deg < 0:
                continue
            checked += _replay_fit(code, pair, shape)
    assert checked >= 10


def test_criterion_9_scaled_rational_vs_oracle():
    start = time.monotonic()
    code = RSCode(F16, 15, 5)
    rng = XorShift64Star(77)
    for trial in range(100):
        msg = Polynomial(F16, [rng.below(16) for _ in range(5)])
        r = corrupt(code.encode(msg), 7, seed=rng.next_u64())
        got = decode_rational(code, r)
        want = code.ml_oracle(r)          # 16^5 words, within budget
        assert got == want, trial
    assert time.monotonic() - start < 600.0
