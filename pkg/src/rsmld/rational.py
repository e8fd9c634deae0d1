"""Rational-interpolation decoding.

The second components of the reduced basis pair {g1, g2} turn the level
search into curve fitting: a combination f = a*g1 + b*g2 has its second
component vanishing at x_i exactly when the rational function z = a/b
passes through the anchor (x_i, z_i) with z_i = -g2.f2(x_i) / g1.f2(x_i)
(a point at infinity where g1.f2 vanishes; both cannot vanish at once since
the pair is coprime).  Instead of enumerating all (a, b), fit one bivariate
Q through every anchor with multiplicity s and caps (M, rho) chosen by the
parameter optimizer; every valid (a, b) at the level then appears as a
factor b*z - a of Q and is read off the z-leading and z-constant slices.

Radii at or beyond the feasible curve-fitting bound (above the Johnson-type
radius) fall back to direct enumeration, and are only searched when the
caller opts in.
"""

from __future__ import annotations

from typing import Iterable

from .bivar import BivariatePolynomial, ProjectivePoint, koetter_interpolate
from .code import DecodeOutcome, RSCode, Word, hamming_distance
from .division import (LevelShape, RadiusCapExceeded, combinations_at_level,
                       combine, extract_message, level_shapes,
                       search_radius_cap, select_engine)
from .groebner import GroebnerPair, mgb_euclid, mgb_iterative
from .polys import Polynomial, bounded_monic_divisors
from .ratparams import (InterpParams, optimize_params,
                        single_multiplicity_params)


def anchor_points(code: RSCode, pair: GroebnerPair) -> list[ProjectivePoint]:
    """The projective anchors (x_i, -g2.f2(x_i) / g1.f2(x_i))."""
    F = code.field
    out = []
    for x in code.eval_points:
        den = pair.g1.f2.evaluate(x)
        num = pair.g2.f2.evaluate(x)
        if den:
            out.append(ProjectivePoint.finite(x, F.neg(F.div(num, den))))
        elif num:
            out.append(ProjectivePoint.infinity(x))
        else:
            raise ArithmeticError(
                f"both second components vanish at {x}; basis not coprime")
    return out


def rational_factorize(Q: BivariatePolynomial, k1: int,
                       k2: int) -> list[tuple[Polynomial, Polynomial]]:
    """All coprime pairs (a, b), b monic, deg a <= k1, deg b <= k2, with
    b*z - a dividing Q.

    A factor with a = 0 means z divides Q (reported once).  For the rest,
    b must divide the z-leading slice of Q and a the z-constant slice, so
    candidates come from bounded divisor enumeration and are confirmed with
    an exact Horner evaluation of b^zdeg * Q(x, a/b).
    """
    if Q.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    F = Q.field
    out: list[tuple[Polynomial, Polynomial]] = []
    deflate = min(j for _, j in Q.coeffs)
    if deflate:
        out.append((Polynomial.zero(F), Polynomial.one(F)))
        Q = BivariatePolynomial(
            F, {(i, j - deflate): c for (i, j), c in Q.coeffs.items()})
    mz = Q.zdeg()
    if mz == 0:
        return out
    top = Q.slice_z(mz)
    low = Q.slice_z(0)
    slices = [Q.slice_z(j) for j in range(mz + 1)]
    b_cands = bounded_monic_divisors(top, k2)
    a_monics = bounded_monic_divisors(low, k1)
    scalars = range(1, F.q)
    for b in b_cands:
        bpow = [Polynomial.one(F)]
        for _ in range(mz):
            bpow.append(bpow[-1] * b)
        for am in a_monics:
            if am.gcd(b).degree() > 0:
                continue
            for c in scalars:
                a = am.scale(c)
                # b^mz * Q(x, a/b) via Horner in the z slices
                acc = slices[mz]
                for j in range(mz - 1, -1, -1):
                    acc = acc * a + slices[j] * bpow[mz - j]
                if acc.is_zero():
                    out.append((a, b))
    return out


def _fit_level(code: RSCode, anchors: list[ProjectivePoint],
               shape: LevelShape) -> tuple[InterpParams, list]:
    """Interpolation caps and factor candidates for one in-bound level."""
    if shape.a_max_deg == 0 and shape.b_deg == 0:
        params = single_multiplicity_params(code.n, shape.t, 0, 0)
    else:
        params = optimize_params(code.n, code.k, shape.t,
                                 shape.a_max_deg, shape.b_deg).best
    Q = koetter_interpolate(code.field, anchors, params.s, params.M,
                            params.w, params.rho)
    return params, rational_factorize(Q, shape.a_max_deg, shape.b_deg)


def decode_rational(code: RSCode, r: Word, j_cap: int | None = None,
                    beyond_johnson: bool = False,
                    engine: str = "iterative") -> DecodeOutcome:
    """Exact minimum distance and message list via rational fitting.

    Levels whose target distance exceeds the Johnson-type radius cannot be
    handled by curve fitting; with `beyond_johnson` they run the direct
    enumeration instead (the search then always terminates by the covering
    radius bound n - k)."""
    pair = select_engine(engine, mgb_iterative, mgb_euclid)(code, r)
    anchors = anchor_points(code, pair)
    cap = search_radius_cap(code, beyond_johnson)
    fit_max = code.johnson_radius_max()
    params_used: list[InterpParams] = []
    for shape in level_shapes(pair, code.k, cap, j_cap):
        ab_pairs: Iterable[tuple[Polynomial, Polynomial]]
        if shape.a_max_deg < 0:
            ab_pairs = ([(Polynomial.zero(code.field), Polynomial.one(code.field))]
                        if shape.level == 0 else [])
        elif shape.t <= fit_max:
            params, ab_pairs = _fit_level(code, anchors, shape)
            params_used.append(params)
        else:
            ab_pairs = combinations_at_level(pair, shape)
        found: dict[tuple[int, ...], Polynomial] = {}
        for a, b in ab_pairs:
            f = combine(pair, a, b)
            if f.f2.is_zero():
                continue
            m = extract_message(f)
            if m is None or m.degree() >= code.k:
                continue
            if hamming_distance(code.encode(m), r) != shape.t:
                continue
            found.setdefault(tuple(m.coeffs), m)
        if found:
            msgs = tuple(sorted(found.values(), key=lambda p: p.coeffs))
            return DecodeOutcome(min_distance=shape.t, messages=msgs,
                                 method="rational", search_level=shape.level,
                                 ell1=pair.ell1, ell2=pair.ell2,
                                 params_used=params_used)
    raise RadiusCapExceeded(
        f"no codeword within search radius {cap}"
        + (f" (level cap {j_cap})" if j_cap is not None else ""), cap)
