import pytest
from hypothesis import given, strategies as st

from rsmld.fields import Field
from rsmld.polys import (Polynomial, bounded_monic_divisors, distinct_roots_in,
                         lagrange_interpolate, vanishing_poly)

F = Field(7)


def P(*coeffs):
    return Polynomial(F, coeffs)


def test_construction_trims_and_canonicalizes():
    assert P(3, 8, 0, 0).coeffs == [3, 1]
    assert P().is_zero()
    assert P(0, 0).degree() == -1
    assert Polynomial.x(F).coeffs == [0, 1]
    assert Polynomial.constant(F, 9).coeffs == [2]
    assert Polynomial.monomial(F, 3, 4).coeffs == [0, 0, 0, 0, 3]
    assert Polynomial.monomial(F, 0, 4).is_zero()


def test_arithmetic():
    a = P(1, 2, 3)
    b = P(6, 5)
    assert (a + b).coeffs == [0, 0, 3]
    assert (a - b).coeffs == [2, 4, 3]
    assert (-a).coeffs == [6, 5, 4]
    assert (a * b).coeffs == [6, 3, 0, 1]
    assert a.scale(2).coeffs == [2, 4, 6]
    assert a.scale(0).is_zero()
    assert a.shift_up(2).coeffs == [0, 0, 1, 2, 3]
    assert a.times_x_minus(2) == a * P(5, 1)


def test_divmod_worked_example():
    # (x^3 + 4x^2 + 2x + 5) = (x + 2)(x^2 + 2x + 5) + 2
    num = P(5, 2, 4, 1)
    den = P(2, 1)
    q, r = divmod(num, den)
    assert q.coeffs == [5, 2, 1]
    assert r.coeffs == [2]
    assert q * den + r == num
    assert num // den == q
    assert num % den == r


def test_divmod_exact_and_errors():
    a = P(4, 6, 5)
    b = P(2, 3)
    assert divmod(a * b, b) == (a, Polynomial.zero(F))
    assert b.divides(a * b)
    assert not b.divides(a * b + P(1))
    with pytest.raises(ZeroDivisionError):
        divmod(a, Polynomial.zero(F))


def test_monic_and_gcd():
    a = P(2, 4)          # 4x + 2
    assert a.monic().coeffs == [4, 1]
    with pytest.raises(ValueError):
        Polynomial.zero(F).monic()
    p1 = P(1, 1) * P(2, 1) * P(3, 1)
    p2 = P(2, 1) * P(3, 1) * P(5, 3)
    g = p1.gcd(p2)
    assert g == (P(2, 1) * P(3, 1)).monic()
    assert p1.gcd(Polynomial.zero(F)) == p1.monic()
    assert Polynomial.zero(F).gcd(p2) == p2.monic()


def test_evaluation():
    p = P(3, 1, 2)  # 2x^2 + x + 3
    assert p.evaluate(0) == 3
    assert p.evaluate(1) == 6
    assert p.evaluate_many(range(7)) == [3, 6, 6, 3, 4, 2, 4]
    assert Polynomial.zero(F).evaluate(5) == 0


def test_vanishing_poly():
    pi = vanishing_poly(F, range(7))
    assert pi.coeffs == [0, 6, 0, 0, 0, 0, 0, 1]  # x^7 - x
    assert pi.evaluate_many(range(7)) == [0] * 7
    assert vanishing_poly(F, []).coeffs == [1]


def test_lagrange_interpolate():
    xs = [0, 1, 2, 3]
    ys = [3, 6, 6, 3]
    p = lagrange_interpolate(F, xs, ys)
    assert p.degree() <= 3
    assert p.evaluate_many(xs) == ys
    # degree drops when points already lie on a lower-degree curve
    q = lagrange_interpolate(F, range(7), P(3, 1, 2).evaluate_many(range(7)))
    assert q == P(3, 1, 2)
    with pytest.raises(ValueError):
        lagrange_interpolate(F, [1, 1], [2, 3])


def test_distinct_roots_in():
    p = P(2, 1) * P(2, 1) * P(4, 1)  # roots 5 (double) and 3
    assert distinct_roots_in(p, range(7)) == [3, 5]
    assert distinct_roots_in(Polynomial.zero(F), [2, 2, 5]) == [2, 5]
    assert distinct_roots_in(P(1), range(7)) == []


def test_bounded_monic_divisors():
    f = P(1, 1) * P(2, 1) * P(2, 1)  # (x+1)(x+2)^2
    divs = bounded_monic_divisors(f, 2)
    assert Polynomial.one(F) in divs
    assert P(1, 1) in divs
    assert P(2, 1) in divs
    assert P(2, 1) * P(2, 1) in divs
    assert P(1, 1) * P(2, 1) in divs
    assert all(d.leading() == 1 and d.degree() <= 2 for d in divs)
    assert all(d.divides(f) for d in divs)
    assert len(divs) == len(set(divs))
    # brute-force cross-check
    brute = []
    for c0 in range(7):
        for c1 in range(7):
            for lead_deg in (0, 1, 2):
                coeffs = [c0, c1, 0]
                coeffs[lead_deg] = 1
                cand = Polynomial(F, coeffs[:lead_deg + 1])
                if cand.leading() == 1 and cand.divides(f) and cand not in brute:
                    brute.append(cand)
    assert sorted(d.coeffs for d in divs) == sorted(d.coeffs for d in brute)


def test_bounded_monic_divisors_zero_and_cap():
    with pytest.raises(ValueError):
        bounded_monic_divisors(Polynomial.zero(F), 1)
    f = P(3, 0, 1)
    assert bounded_monic_divisors(f, 9) == bounded_monic_divisors(f, 2)


coeff_lists = st.lists(st.integers(0, 6), max_size=6)


@given(coeff_lists, coeff_lists, coeff_lists)
def test_ring_axioms(a, b, c):
    pa, pb, pc = P(*a), P(*b), P(*c)
    assert pa + pb == pb + pa
    assert pa * pb == pb * pa
    assert pa * (pb + pc) == pa * pb + pa * pc
    assert (pa * pb) * pc == pa * (pb * pc)


@given(coeff_lists, coeff_lists)
def test_divmod_invariant(a, b):
    pa, pb = P(*a), P(*b)
    if pb.is_zero():
        return
    q, r = divmod(pa, pb)
    assert q * pb + r == pa
    assert r.degree() < pb.degree()
