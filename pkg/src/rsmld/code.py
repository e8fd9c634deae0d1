"""Reed-Solomon codes, received words, and the exhaustive ML oracle.

An (n, k) Reed-Solomon code over GF(q) evaluates message polynomials of
degree < k at n distinct field points.  The oracle decoder enumerates all
q**k codewords with numpy and returns every message at minimum Hamming
distance from the received word — slow but exact, which is what the fast
decoders are tested against.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from math import isqrt
from typing import Iterable, Sequence

import numpy as np

from .fields import Field, FieldMismatch, parse_field
from .polys import Polynomial
from .rng import XorShift64Star

JSON_VERSION = 1


class OracleBudgetExceeded(ValueError):
    """Raised when q**k is too large for exhaustive enumeration."""


class RSCode:
    """An (n, k) Reed-Solomon code with explicit evaluation points."""

    __slots__ = ("field", "n", "k", "eval_points", "_table")

    def __init__(self, field: Field, n: int, k: int,
                 eval_points: Sequence[int] | None = None):
        if not 1 <= k < n:
            raise ValueError(f"need 1 <= k < n, got k={k}, n={n}")
        if n > field.q:
            raise ValueError(f"n={n} exceeds field size q={field.q}")
        if eval_points is None:
            pts = tuple(range(n))  # first n elements in enumeration order
        else:
            pts = tuple(field.canon(x) for x in eval_points)
            if len(pts) != n:
                raise ValueError(f"expected {n} evaluation points, got {len(pts)}")
            if len(set(pts)) != n:
                raise ValueError("evaluation points must be distinct")
        self.field = field
        self.n = n
        self.k = k
        self.eval_points = pts
        self._table: np.ndarray | None = None

    # -- basic parameters ------------------------------------------------

    @property
    def d(self) -> int:
        """Minimum distance n - k + 1 (MDS)."""
        return self.n - self.k + 1

    def classical_radius(self) -> int:
        """Largest t with unique decoding guaranteed: t < d/2."""
        return (self.d - 1) // 2

    def johnson_radius_max(self) -> int:
        """Largest integer t with t < n - sqrt(n*(n-d))."""
        return self.n - isqrt(self.n * (self.n - self.d)) - 1

    def __eq__(self, other) -> bool:
        return (isinstance(other, RSCode) and self.field == other.field
                and self.n == other.n and self.k == other.k
                and self.eval_points == other.eval_points)

    def __hash__(self):
        return hash((self.field, self.n, self.k, self.eval_points))

    def __repr__(self):
        return f"RSCode(({self.n},{self.k}) over {self.field.label()})"

    # -- encoding --------------------------------------------------------

    def message_poly(self, coeffs: Iterable[int] | Polynomial) -> Polynomial:
        if isinstance(coeffs, Polynomial):
            m = coeffs
            if m.field != self.field:
                raise FieldMismatch("message polynomial from a different field")
        else:
            m = Polynomial(self.field, list(coeffs))
        if m.degree() >= self.k:
            raise ValueError(f"message degree {m.degree()} >= k={self.k}")
        return m

    def encode(self, msg: Iterable[int] | Polynomial) -> "Word":
        m = self.message_poly(msg)
        return Word(self, tuple(m.evaluate(x) for x in self.eval_points))

    # -- oracle ----------------------------------------------------------

    def _codeword_table(self) -> np.ndarray:
        """All q**k codewords as a (q**k, n) integer array, cached."""
        if self._table is not None:
            return self._table
        F, k, n, q = self.field, self.k, self.n, self.field.q
        total = q ** k
        # contrib[e][s][i] = s * eval_points[i]**e  (one row per message digit)
        contrib = np.zeros((k, q, n), dtype=np.int32)
        for e in range(k):
            for s in range(q):
                row = contrib[e][s]
                for i, x in enumerate(self.eval_points):
                    row[i] = F.mul(s, F.pow(x, e))
        table = np.zeros((total, n), dtype=np.int16 if q > 127 else np.int8)
        chunk = 1 << 16
        idx = np.arange(total, dtype=np.int64)
        for lo in range(0, total, chunk):
            sel = idx[lo:lo + chunk]
            acc = np.zeros((len(sel), n), dtype=np.int32)
            rest = sel.copy()
            for e in range(k):
                digits = rest % q
                rest //= q
                part = contrib[e][digits]
                if F.m == 1:
                    acc = (acc + part) % F.p
                else:
                    acc ^= part
            table[lo:lo + chunk] = acc
        self._table = table
        return table

    def _message_from_index(self, idx: int) -> Polynomial:
        digits = []
        q = self.field.q
        for _ in range(self.k):
            digits.append(idx % q)
            idx //= q
        return Polynomial(self.field, digits)

    def ml_oracle(self, word: "Word", budget: int = 10_000_000) -> "DecodeOutcome":
        """Exact minimum-distance decoding by exhaustive enumeration."""
        self._check_word(word)
        total = self.field.q ** self.k
        if total > budget:
            raise OracleBudgetExceeded(
                f"q**k = {total} exceeds oracle budget {budget}")
        table = self._codeword_table()
        r = np.asarray(word.symbols, dtype=table.dtype)
        dists = np.count_nonzero(table != r, axis=1)
        best = int(dists.min())
        hits = np.nonzero(dists == best)[0]
        msgs = sorted((self._message_from_index(int(i)) for i in hits),
                      key=lambda p: p.coeffs)
        return DecodeOutcome(min_distance=best, messages=tuple(msgs),
                             method="oracle")

    # -- helpers ---------------------------------------------------------

    def _check_word(self, word: "Word") -> None:
        if word.code != self:
            raise FieldMismatch("word belongs to a different code")


@dataclass(frozen=True)
class Word:
    """A length-n vector over the code's field."""

    code: RSCode
    symbols: tuple[int, ...]

    def __post_init__(self):
        if len(self.symbols) != self.code.n:
            raise ValueError(
                f"word length {len(self.symbols)} != n={self.code.n}")
        canon = tuple(self.code.field.canon(s) for s in self.symbols)
        object.__setattr__(self, "symbols", canon)

    def to_json(self) -> str:
        obj = {"v": JSON_VERSION, "field": self.code.field.label(),
               "n": self.code.n, "k": self.code.k,
               "symbols": list(self.symbols)}
        if self.code.eval_points != tuple(range(self.code.n)):
            obj["eval_points"] = list(self.code.eval_points)
        return json.dumps(obj, separators=(", ", ": "))

    @classmethod
    def from_json(cls, text: str) -> "Word":
        obj = json.loads(text)
        if not isinstance(obj, dict):
            raise ValueError("word JSON must be an object")
        if obj.get("v") != JSON_VERSION:
            raise ValueError(f"unsupported word schema version {obj.get('v')!r}")
        F = parse_field(obj["field"])
        code = RSCode(F, obj["n"], obj["k"], obj.get("eval_points"))
        return cls(code, tuple(obj["symbols"]))


def hamming_distance(a: Word | Sequence[int], b: Word | Sequence[int]) -> int:
    sa = a.symbols if isinstance(a, Word) else tuple(a)
    sb = b.symbols if isinstance(b, Word) else tuple(b)
    if len(sa) != len(sb):
        raise ValueError("length mismatch")
    return sum(1 for x, y in zip(sa, sb) if x != y)


def corrupt(word: Word, weight: int, seed: int) -> Word:
    """Flip exactly `weight` positions of `word` to different symbols.

    Positions come from a partial Fisher-Yates shuffle; each hit symbol is
    replaced by (old + 1 + u) mod q with u uniform in [0, q-1), so the new
    symbol is never the old one.  Fully determined by the seed.
    """
    code = word.code
    if not 0 <= weight <= code.n:
        raise ValueError(f"weight {weight} out of range [0, {code.n}]")
    rng = XorShift64Star(seed)
    positions = rng.sample_indices(code.n, weight)
    q = code.field.q
    out = list(word.symbols)
    for pos in positions:
        out[pos] = (out[pos] + 1 + rng.below(q - 1)) % q
    return Word(code, tuple(out))


def random_word(code: RSCode, seed: int) -> Word:
    """A uniformly random received word (not necessarily near the code)."""
    rng = XorShift64Star(seed)
    return Word(code, tuple(rng.below(code.field.q) for _ in range(code.n)))


@dataclass
class DecodeOutcome:
    """Result of a minimal list decoding: the distance and every message at it.

    Equality compares (min_distance, messages) only; search metadata such as
    the level reached or the basis degrees is informational.
    """

    min_distance: int
    messages: tuple[Polynomial, ...]
    method: str = "?"
    search_level: int | None = None
    ell1: int | None = None
    ell2: int | None = None
    params_used: list = dc_field(default_factory=list)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DecodeOutcome):
            return NotImplemented
        return (self.min_distance == other.min_distance
                and set(self.messages) == set(other.messages))

    def message_coeff_lists(self) -> list[list[int]]:
        return [list(m.coeffs) for m in self.messages]

    def __repr__(self):
        polys = ", ".join(str(m) for m in self.messages)
        return (f"DecodeOutcome(d={self.min_distance}, "
                f"messages={{{polys}}}, method={self.method})")


def shifted_word(code: RSCode, r: Word, m: Polynomial) -> Word:
    """r - encode(m), used when decoding relative to a known codeword."""
    enc = code.encode(m)
    F = code.field
    return Word(code, tuple(F.sub(a, b) for a, b in zip(r.symbols, enc.symbols)))
