import pytest

from rsmld.code import RSCode, Word, corrupt, random_word, shifted_word
from rsmld.fields import Field
from rsmld.groebner import (GroebnerPair, ModuleVector, WeightedOrder,
                            decoder_order, interpolation_generators,
                            leading, mgb_euclid, mgb_euclid_reencoded,
                            mgb_iterative, mgb_iterative_reencoded,
                            reencoded_generators, reencoding_multiplier)
from rsmld.division import reencode
from rsmld.polys import Polynomial, lagrange_interpolate, vanishing_poly

F7 = Field(7)


def test_weighted_order_top():
    # weights (0, 2): x^3 in position 1 and x in position 2 tie at weighted
    # degree 3; ties go to the higher position.
    order = WeightedOrder((0, 2), "top")
    assert order.wdeg(3, 1) == 3
    assert order.wdeg(1, 2) == 3
    assert order.compare((3, 1), (1, 2)) == -1
    assert order.compare((1, 2), (3, 1)) == 1
    assert order.compare((4, 1), (1, 2)) == 1
    assert order.compare((2, 2), (2, 2)) == 0


def test_weighted_order_pot():
    order = WeightedOrder((0, 2), "pot")
    # position dominates: any position-1 monomial is below any position-2 one
    assert order.compare((100, 1), (0, 2)) == -1
    assert order.compare((2, 1), (1, 1)) == 1
    with pytest.raises(ValueError):
        WeightedOrder((0, 0), "lex")
    with pytest.raises(ValueError):
        order.key(1, 3)


def test_leading_monomial():
    order = WeightedOrder((0, 4), "top")
    v = ModuleVector(Polynomial(F7, [3, 5, 1, 5]), Polynomial(F7, [6, 1]))
    lead = leading(order, v)
    assert (lead.position, lead.exponent, lead.wdeg, lead.coeff) == (2, 1, 5, 1)
    with pytest.raises(ValueError):
        leading(order, ModuleVector(Polynomial.zero(F7), Polynomial.zero(F7)))


def test_generators_span_the_module():
    code = RSCode(F7, 7, 5)
    r = Word(code, (3, 2, 6, 3, 4, 2, 4))
    gen_pi, gen_lag = interpolation_generators(code, r)
    assert gen_pi.f1 == vanishing_poly(F7, code.eval_points)
    assert gen_pi.f2.is_zero()
    assert gen_lag.f1.coeffs == [3, 5, 6, 4, 4, 4, 4]
    assert gen_lag.f2.coeffs == [6]
    # both satisfy f1(x_i) + r_i f2(x_i) = 0
    for g in (gen_pi, gen_lag):
        for x, s in zip(code.eval_points, r.symbols):
            assert F7.add(g.f1.evaluate(x), F7.mul(s, g.f2.evaluate(x))) == 0


def _check_minimal_basis(code, r, pair):
    assert pair.ell1 + pair.ell2 == code.n + code.k - 1
    lead1 = leading(pair.order, pair.g1)
    lead2 = leading(pair.order, pair.g2)
    assert (lead1.position, lead2.position) == (1, 2)
    assert lead1.coeff == 1 and lead2.coeff == 1
    # every element satisfies the interpolation constraints
    syms = r.symbols if isinstance(r, Word) else r
    for g in (pair.g1, pair.g2):
        for x, s in zip(code.eval_points, syms):
            assert code.field.add(g.f1.evaluate(x),
                                  code.field.mul(s, g.f2.evaluate(x))) == 0


def test_worked_example_basis():
    code = RSCode(F7, 7, 5)
    r = Word(code, (3, 2, 6, 3, 4, 2, 4))
    pair = mgb_iterative(code, r)
    assert (pair.ell1, pair.ell2) == (6, 5)
    assert pair.g2.f1.coeffs == [3, 5, 1, 5]
    assert pair.g2.f2.coeffs == [6, 1]
    _check_minimal_basis(code, r, pair)
    assert pair == mgb_euclid(code, r)
    # the generators lie in the span of the basis
    for gen in interpolation_generators(code, r):
        assert pair.contains(gen)
    assert not pair.contains(ModuleVector(Polynomial.one(F7),
                                          Polynomial.zero(F7)))


def test_codeword_case():
    # when r is a codeword, g2 = (-m, 1) and ell2 = k - 1
    code = RSCode(F7, 7, 4)
    m = Polynomial(F7, [2, 0, 3, 1])
    r = code.encode(m)
    for engine in (mgb_euclid, mgb_iterative):
        pair = engine(code, r)
        assert pair.ell2 == code.k - 1
        assert pair.g2.f2 == Polynomial.one(F7)
        assert pair.g2.f1 == -m
        _check_minimal_basis(code, r, pair)


def test_zero_word():
    code = RSCode(F7, 7, 3)
    r = Word(code, (0,) * 7)
    for engine in (mgb_euclid, mgb_iterative):
        pair = engine(code, r)
        assert pair.ell2 == code.k - 1
        assert pair.g2.f1.is_zero()
        assert pair.g2.f2 == Polynomial.one(F7)


def test_engines_agree_on_random_words():
    for code in (RSCode(F7, 7, 2), RSCode(F7, 7, 5),
                 RSCode(Field(2, 3), 8, 3), RSCode(Field(13), 13, 6)):
        for seed in range(25):
            r = random_word(code, seed)
            e = mgb_euclid(code, r)
            i = mgb_iterative(code, r)
            assert e == i, (code.n, code.k, seed)
            _check_minimal_basis(code, r, i)


def test_order_of_decoder():
    code = RSCode(F7, 7, 5)
    order = decoder_order(code)
    assert order.weights == (0, 4)
    assert order.kind == "top"


def test_reencoding_multiplier_splits_vanishing():
    code = RSCode(F7, 7, 5)
    g = reencoding_multiplier(code)
    assert g.degree() == code.k - 1
    pi_short = vanishing_poly(F7, code.eval_points[:code.n - code.k + 1])
    assert pi_short * g == vanishing_poly(F7, code.eval_points)


def test_reencoded_generators_satisfy_short_constraints():
    code = RSCode(F7, 7, 4)
    r = Word(code, (3, 2, 6, 3, 2, 2, 4))
    enc = reencode(code, r)
    # the shift agrees with r on the last k points
    for x, s in zip(code.eval_points[code.n - code.k:],
                    r.symbols[code.n - code.k:]):
        assert enc.shift.evaluate(x) == s
    assert all(v == 0 for v in enc.y[code.n - code.k:])
    gens = reencoded_generators(code, enc.y)
    g_mult = enc.multiplier
    head = code.eval_points[:code.n - code.k]
    x_star = code.eval_points[code.n - code.k]
    for g in gens:
        for x, y in zip(head, enc.y):
            v = F7.div(y, g_mult.evaluate(x))
            assert F7.add(g.f1.evaluate(x), F7.mul(v, g.f2.evaluate(x))) == 0
        assert g.f1.evaluate(x_star) == 0


def test_reencoded_engines_agree_and_lift():
    for code in (RSCode(F7, 7, 4), RSCode(Field(2, 4), 15, 5)):
        for seed in range(15):
            r = random_word(code, seed)
            enc = reencode(code, r)
            a = mgb_euclid_reencoded(code, enc.y)
            b = mgb_iterative_reencoded(code, enc.y)
            assert a == b, (code.n, code.k, seed)
            # short degrees sum to n - k + 1
            assert a.ell1 + a.ell2 == code.n - code.k + 1
            # lifted degrees match the degrees of the direct basis
            direct = mgb_iterative(code, r)
            assert a.ell1 + code.k - 1 == direct.ell1
            assert a.ell2 + code.k - 1 == direct.ell2


def test_mismatched_word_rejected():
    code = RSCode(F7, 7, 5)
    other = RSCode(F7, 7, 4)
    with pytest.raises(ValueError):
        mgb_iterative(code, random_word(other, 0))
    with pytest.raises(ValueError):
        mgb_euclid(code, [1, 2, 3])
