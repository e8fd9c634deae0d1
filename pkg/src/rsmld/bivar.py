"""Bivariate polynomials over a finite field and constrained interpolation.

Polynomials live in F[x, z] as sparse {(i, j): coeff} maps.  The rational
decoder needs one nontrivial operation: given anchor points (x_i, z_i) —
some possibly with z at infinity — find a nonzero Q with z-degree at most M
whose Hasse derivatives D_{u,v}Q vanish at every anchor for all u + v < s.
An infinity anchor constrains the z-reversal of Q at (x_i, 0) instead.
Koetter's update processes one constraint at a time over M + 1 candidates
ordered by (1, w)-weighted leading degree, and the smallest final candidate
meets the weighted-degree cap whenever the constraint count is below the
cap's coefficient budget.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .fields import Field
from .polys import Polynomial


@dataclass(frozen=True)
class ProjectivePoint:
    """An anchor (x, z) with z on the projective line: (z_num : z_den) is
    either (value : 1) or the point at infinity (1 : 0)."""

    x: int
    z_num: int
    z_den: int

    @classmethod
    def finite(cls, x: int, z: int) -> "ProjectivePoint":
        return cls(x, z, 1)

    @classmethod
    def infinity(cls, x: int) -> "ProjectivePoint":
        return cls(x, 1, 0)

    @property
    def is_infinite(self) -> bool:
        return self.z_den == 0

    def __repr__(self):
        return (f"({self.x}, inf)" if self.is_infinite
                else f"({self.x}, {self.z_num})")


class BivariatePolynomial:
    """Sparse polynomial in F[x, z]: {(x_exp, z_exp): coeff}."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: dict | None = None):
        cleaned = {}
        if coeffs:
            for (i, j), c in coeffs.items():
                c = field.canon(c)
                if c:
                    cleaned[(i, j)] = c
        self.field = field
        self.coeffs = cleaned

    def is_zero(self) -> bool:
        return not self.coeffs

    def zdeg(self) -> int:
        return max((j for _, j in self.coeffs), default=-1)

    def xdeg(self) -> int:
        return max((i for i, _ in self.coeffs), default=-1)

    def wdeg(self, w: int) -> int:
        """(1, w)-weighted degree: max of i + j*w over the support."""
        if not self.coeffs:
            raise ValueError("the zero polynomial has no weighted degree")
        return max(i + j * w for i, j in self.coeffs)

    def slice_z(self, j: int) -> Polynomial:
        """Coefficient of z^j as a polynomial in x."""
        out = [0] * (self.xdeg() + 1)
        for (i, jj), c in self.coeffs.items():
            if jj == j:
                out[i] = c
        return Polynomial(self.field, out)

    def z_reverse(self, cap: int) -> "BivariatePolynomial":
        """z^cap * Q(x, 1/z), the z-reversal at degree cap >= zdeg."""
        if self.zdeg() > cap:
            raise ValueError("reversal cap below the z-degree")
        return BivariatePolynomial(
            self.field, {(i, cap - j): c for (i, j), c in self.coeffs.items()})

    def evaluate(self, x: int, z: int) -> int:
        F = self.field
        acc = 0
        for (i, j), c in self.coeffs.items():
            acc = F.add(acc, F.mul(c, F.mul(F.pow(x, i), F.pow(z, j))))
        return acc

    def __eq__(self, other) -> bool:
        return (isinstance(other, BivariatePolynomial)
                and self.field == other.field and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.field, frozenset(self.coeffs.items())))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for (i, j) in sorted(self.coeffs, key=lambda m: (m[1], m[0])):
            c = self.coeffs[(i, j)]
            part = [] if c == 1 and (i or j) else [str(c)]
            if i:
                part.append("x" if i == 1 else f"x^{i}")
            if j:
                part.append("z" if j == 1 else f"z^{j}")
            terms.append("*".join(part))
        return " + ".join(terms)


def hasse_derivative_value(Q: BivariatePolynomial, u: int, v: int,
                           x: int, z: int) -> int:
    """D_{u,v}Q evaluated at (x, z): sum of C(i,u) C(j,v) q_ij x^(i-u) z^(j-v).

    The binomials are reduced mod the field characteristic (they are scalars
    from the prime subfield)."""
    F = Q.field
    p = F.p
    acc = 0
    for (i, j), c in Q.coeffs.items():
        if i < u or j < v:
            continue
        b = (math.comb(i, u) * math.comb(j, v)) % p
        if not b:
            continue
        term = F.mul(c, b)
        term = F.mul(term, F.pow(x, i - u))
        term = F.mul(term, F.pow(z, j - v))
        acc = F.add(acc, term)
    return acc


def hasse_constraints(s: int):
    """Constraint exponents (u, v) with u + v < s, in graded order."""
    return [(c - v, v) for c in range(s) for v in range(c + 1)]


def koetter_interpolate(field: Field, anchors: list[ProjectivePoint], s: int,
                        M: int, w: int, rho: int | None = None) -> BivariatePolynomial:
    """Smallest nonzero Q (by (1, w)-weighted leading monomial, z-degree
    breaking ties) with zdeg <= M meeting every multiplicity-s constraint.

    When rho is given the result is checked against it: with the constraint
    count below the (M, rho) coefficient budget the minimum is guaranteed to
    fit, so a violation means the caps were inconsistent.
    """
    F = field
    p = F.p
    cands: list[dict] = [{(0, j): 1} for j in range(M + 1)]
    lmx = [0] * (M + 1)  # x-exponent of the leading monomial (z-exp is j)

    comb_cache: dict[tuple[int, int], int] = {}

    def binom(a: int, b: int) -> int:
        key = (a, b)
        val = comb_cache.get(key)
        if val is None:
            val = math.comb(a, b) % p
            comb_cache[key] = val
        return val

    def order_key(j: int):
        return (lmx[j] + j * w, j)

    for pt in anchors:
        x = pt.x
        z = pt.z_num if not pt.is_infinite else 0
        powx: dict[int, int] = {}
        powz: dict[int, int] = {}

        def xpow(e: int) -> int:
            val = powx.get(e)
            if val is None:
                val = F.pow(x, e)
                powx[e] = val
            return val

        def zpow(e: int) -> int:
            val = powz.get(e)
            if val is None:
                val = F.pow(z, e)
                powz[e] = val
            return val

        for u, v in hasse_constraints(s):
            deltas = []
            for g in cands:
                acc = 0
                if pt.is_infinite:
                    jz = M - v
                    for (i, j), c in g.items():
                        if j != jz or i < u:
                            continue
                        b = binom(i, u)
                        if not b:
                            continue
                        acc = F.add(acc, F.mul(F.mul(c, b), xpow(i - u)))
                else:
                    for (i, j), c in g.items():
                        if i < u or j < v:
                            continue
                        b = (binom(i, u) * binom(j, v)) % p
                        if not b:
                            continue
                        term = F.mul(F.mul(c, b), xpow(i - u))
                        acc = F.add(acc, F.mul(term, zpow(j - v)))
                deltas.append(acc)
            hit = [j for j, dj in enumerate(deltas) if dj]
            if not hit:
                continue
            jstar = min(hit, key=order_key)
            dstar = deltas[jstar]
            gstar = cands[jstar]
            for j in hit:
                if j == jstar:
                    continue
                dj = deltas[j]
                merged = {mon: F.mul(dstar, c) for mon, c in cands[j].items()}
                for mon, c in gstar.items():
                    val = F.sub(merged.get(mon, 0), F.mul(dj, c))
                    if val:
                        merged[mon] = val
                    else:
                        merged.pop(mon, None)
                cands[j] = merged
            promoted: dict = {}
            nx = F.neg(x)
            for (i, j), c in gstar.items():
                up = (i + 1, j)
                val = F.add(promoted.get(up, 0), c)
                if val:
                    promoted[up] = val
                else:
                    promoted.pop(up, None)
                if nx:
                    lo = (i, j)
                    val = F.add(promoted.get(lo, 0), F.mul(nx, c))
                    if val:
                        promoted[lo] = val
                    else:
                        promoted.pop(lo, None)
            cands[jstar] = promoted
            lmx[jstar] += 1

    best = min(range(M + 1), key=order_key)
    Q = BivariatePolynomial(F, cands[best])
    if rho is not None and Q.wdeg(w) > rho:
        raise ArithmeticError(
            f"interpolant weighted degree {Q.wdeg(w)} exceeds cap {rho}; "
            "caps are inconsistent with the constraint count")
    return Q
