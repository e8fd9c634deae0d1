"""Minimal list decoding by divisibility search over basis combinations.

Given the reduced basis {g1, g2} of the interpolation module, every codeword
at distance t from the received word shows up as a combination
f = a*g1 + b*g2 (deg a <= ell2 - ell1 + j, b monic of degree j, t = ell2 -
k + 1 + j) whose first component is divisible by its second; the message is
m = -f1/f2.  Searching levels j = 0, 1, ... in order finds the exact minimum
distance and the complete list of messages at it.

The search radius is capped: by default at the largest t below the Johnson
bound (where the level arithmetic is meaningful for every code), and at
n - k when `beyond_johnson` is set, which always terminates with the true
minimum distance because the covering radius of an RS code is at most n - k.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from .code import DecodeOutcome, RSCode, Word, hamming_distance
from .groebner import (GroebnerPair, ModuleVector, mgb_euclid,
                       mgb_euclid_reencoded, mgb_iterative,
                       mgb_iterative_reencoded, reencoding_multiplier)
from .polys import Polynomial, lagrange_interpolate


class RadiusCapExceeded(Exception):
    """No codeword found within the allowed search radius."""

    def __init__(self, message: str, radius: int):
        super().__init__(message)
        self.radius = radius


def extract_message(f: ModuleVector) -> Polynomial | None:
    """The message -f1/f2 when f2 divides f1 exactly, else None.

    f must lead in position 2; its second component must be nonzero (a zero
    second component cannot encode a message and is rejected loudly so
    callers filter such combinations before testing divisibility).
    """
    if f.f2.is_zero():
        raise ValueError("second component is zero; no message to extract")
    q, rem = divmod(f.f1, f.f2)
    if not rem.is_zero():
        return None
    return -q


def enumerate_polys(field, max_deg: int) -> Iterator[Polynomial]:
    """All polynomials of degree <= max_deg, in a fixed order: the zero
    polynomial, then degree by degree with coefficient tuples counted
    little-endian."""
    yield Polynomial.zero(field)
    if max_deg < 0:
        return
    q = field.q
    for deg in range(max_deg + 1):
        for packed in range(q ** deg):
            low, rest = [], packed
            for _ in range(deg):
                low.append(rest % q)
                rest //= q
            for lead in range(1, q):
                yield Polynomial(field, low + [lead])


def monic_polys(field, deg: int) -> Iterator[Polynomial]:
    """All monic polynomials of exact degree deg (deg >= 0)."""
    q = field.q
    for packed in range(q ** deg):
        low, rest = [], packed
        for _ in range(deg):
            low.append(rest % q)
            rest //= q
        yield Polynomial(field, low + [1])


@dataclass
class LevelShape:
    """Search-space shape at level j: target distance and degree bounds."""

    level: int
    t: int
    a_max_deg: int  # k1 = ell2 - ell1 + j; negative means a = 0 only
    b_deg: int      # k2 = j


def level_shapes(pair: GroebnerPair, k: int, t_cap: int,
                 j_cap: int | None = None) -> list[LevelShape]:
    """Levels j = 0, 1, ... while the target distance stays <= t_cap."""
    base_t = pair.ell2 - (k - 1)
    shapes = []
    j = 0
    while base_t + j <= t_cap and (j_cap is None or j <= j_cap):
        shapes.append(LevelShape(j, base_t + j, pair.ell2 - pair.ell1 + j, j))
        j += 1
    return shapes


def combinations_at_level(pair: GroebnerPair,
                          shape: LevelShape) -> Iterator[tuple[Polynomial, Polynomial]]:
    """Coefficient pairs (a, b) to test at one level, coprime and in a fixed
    deterministic order.  When a's degree bound is negative the only
    combination left is g2 itself (a = 0, b = 1)."""
    field = pair.g1.field
    if shape.a_max_deg < 0:
        if shape.level == 0:
            yield Polynomial.zero(field), Polynomial.one(field)
        return
    for b in monic_polys(field, shape.b_deg):
        for a in enumerate_polys(field, shape.a_max_deg):
            if a.gcd(b).degree() > 0:
                continue
            yield a, b


def combine(pair: GroebnerPair, a: Polynomial, b: Polynomial) -> ModuleVector:
    return ModuleVector(a * pair.g1.f1 + b * pair.g2.f1,
                        a * pair.g1.f2 + b * pair.g2.f2)


def _search(code: RSCode, r: Word, pair: GroebnerPair,
            candidates_of: Callable[[LevelShape], Iterator[ModuleVector]],
            lift: Callable[[ModuleVector], Polynomial | None],
            method: str, t_cap: int, j_cap: int | None) -> DecodeOutcome:
    """Shared level loop: report the first level with any valid message."""
    shapes = level_shapes(pair, code.k, t_cap, j_cap)
    for shape in shapes:
        found: dict[tuple[int, ...], Polynomial] = {}
        for f in candidates_of(shape):
            if f.f2.is_zero():
                continue
            m = lift(f)
            if m is None or m.degree() >= code.k:
                continue
            if hamming_distance(code.encode(m), r) != shape.t:
                continue
            found.setdefault(tuple(m.coeffs), m)
        if found:
            msgs = tuple(sorted(found.values(), key=lambda p: p.coeffs))
            return DecodeOutcome(min_distance=shape.t, messages=msgs,
                                 method=method, search_level=shape.level,
                                 ell1=pair.ell1, ell2=pair.ell2)
    raise RadiusCapExceeded(
        f"no codeword within search radius {t_cap}"
        + (f" (level cap {j_cap})" if j_cap is not None else ""), t_cap)


def search_radius_cap(code: RSCode, beyond_johnson: bool) -> int:
    return code.n - code.k if beyond_johnson else min(
        code.johnson_radius_max(), code.n - code.k)


def select_engine(engine: str, iterative, euclid):
    if engine == "iterative":
        return iterative
    if engine == "euclid":
        return euclid
    raise ValueError(f"unknown engine {engine!r}; pick 'iterative' or 'euclid'")


def decode_minimal(code: RSCode, r: Word, j_cap: int | None = None,
                   beyond_johnson: bool = False,
                   engine: str = "iterative") -> DecodeOutcome:
    """Exact minimum distance and complete message list for word r."""
    pair = select_engine(engine, mgb_iterative, mgb_euclid)(code, r)

    def candidates(shape: LevelShape):
        for a, b in combinations_at_level(pair, shape):
            yield combine(pair, a, b)

    return _search(code, r, pair, candidates, extract_message,
                   "division", search_radius_cap(code, beyond_johnson), j_cap)


# ---------------------------------------------------------------------------
# Re-encoded path
# ---------------------------------------------------------------------------


@dataclass
class Reencoding:
    """A received word split as r = shift + y, with y supported on the first
    n - k positions."""

    code: RSCode
    shift: Polynomial       # interpolant of r on the last k points
    y: tuple[int, ...]      # r_i - shift(x_i) for the first n - k points
    multiplier: Polynomial  # G, vanishing on the last k - 1 points


def reencode(code: RSCode, r: Word) -> Reencoding:
    F = code.field
    tail_pts = code.eval_points[code.n - code.k:]
    shift = lagrange_interpolate(F, tail_pts, r.symbols[code.n - code.k:])
    head = code.eval_points[:code.n - code.k]
    y = tuple(F.sub(s, shift.evaluate(x))
              for x, s in zip(head, r.symbols[:code.n - code.k]))
    return Reencoding(code, shift, y, reencoding_multiplier(code))


def decode_minimal_reencoded(code: RSCode, r: Word, j_cap: int | None = None,
                             beyond_johnson: bool = False,
                             engine: str = "iterative") -> DecodeOutcome:
    """Same search run on the short module of the shifted word.

    The short basis lifts to the full-module basis by multiplying first
    components with G, so the divisibility test becomes G*f1 divisible by
    f2 and the recovered message is shifted back by the re-encoding."""
    enc = reencode(code, r)
    build = select_engine(engine, mgb_iterative_reencoded, mgb_euclid_reencoded)
    short = build(code, enc.y)
    # Lift the weighted degrees: each first component gains deg G = k - 1.
    lifted = GroebnerPair(short.g1, short.g2, short.ell1 + code.k - 1,
                          short.ell2 + code.k - 1, short.order)
    G = enc.multiplier

    def candidates(shape: LevelShape):
        for a, b in combinations_at_level(lifted, shape):
            yield combine(lifted, a, b)

    def lift(f: ModuleVector) -> Polynomial | None:
        m_y = extract_message(ModuleVector(G * f.f1, f.f2))
        return None if m_y is None else m_y + enc.shift

    out = _search(code, r, lifted, candidates, lift, "division-reencoded",
                  search_radius_cap(code, beyond_johnson), j_cap)
    return out
