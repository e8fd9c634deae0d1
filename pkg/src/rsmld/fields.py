"""Finite-field arithmetic for GF(p) and GF(2^m).

Two kinds of fields back everything else in this package:

* prime fields GF(p), elements stored as the least non-negative residue;
* binary extension fields GF(2^m) for 2 <= m <= 16, elements stored as the
  carrier integer whose bits are the coefficients of the residue polynomial
  (bit i <-> x^i), multiplication done through log/antilog tables built from
  a generator of the multiplicative group.

A field is written textually as ``p:7`` or ``2^4:0b10011`` (the part after
the colon is the modulus polynomial as a bit pattern, here x^4 + x + 1).
``parse_field`` accepts both, plus ``2^m`` alone to get the default modulus.

Elements are plain ints in the hot paths; the :class:`FieldElement` wrapper
adds operator sugar and field-mismatch checking for API-level code.
"""

from __future__ import annotations

from typing import Iterator

__all__ = [
    "Field",
    "FieldElement",
    "FieldMismatch",
    "parse_field",
    "DEFAULT_MODULI",
]


class FieldMismatch(ValueError):
    """Raised when combining elements of two different fields."""


# Default modulus polynomials for GF(2^m), m = 2..16, as bit patterns.
# All are primitive, so x (carrier 2) generates the multiplicative group.
DEFAULT_MODULI = {
    2: 0b111,                # x^2 + x + 1
    3: 0b1011,               # x^3 + x + 1
    4: 0b10011,              # x^4 + x + 1
    5: 0b100101,             # x^5 + x^2 + 1
    6: 0b1000011,            # x^6 + x + 1
    7: 0b10000011,           # x^7 + x + 1
    8: 0b100011101,          # x^8 + x^4 + x^3 + x^2 + 1
    9: 0b1000010001,         # x^9 + x^4 + 1
    10: 0b10000001001,       # x^10 + x^3 + 1
    11: 0b100000000101,      # x^11 + x^2 + 1
    12: 0b1000001010011,     # x^12 + x^6 + x^4 + x + 1
    13: 0b10000000011011,    # x^13 + x^4 + x^3 + x + 1
    14: 0b100010001000011,   # x^14 + x^10 + x^6 + x + 1
    15: 0b1000000000000011,  # x^15 + x + 1
    16: 0b10001000000001011, # x^16 + x^12 + x^3 + x + 1
}


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _gf2_mul(a: int, b: int) -> int:
    """Carryless product of two GF(2)[x] polynomials packed in ints."""
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def _gf2_mod(a: int, mod: int) -> int:
    """Remainder of a GF(2)[x] division, both polynomials packed in ints."""
    dm = mod.bit_length()
    while a.bit_length() >= dm:
        a ^= mod << (a.bit_length() - dm)
    return a


def _gf2_irreducible(mod: int, m: int) -> bool:
    # Exhaustive trial division by every polynomial of degree 1..m//2;
    # cheap for m <= 16 and leaves no room for doubt.
    if mod.bit_length() - 1 != m or not (mod & 1):
        return False
    for d in range(1, m // 2 + 1):
        for cand in range(1 << d, 1 << (d + 1)):
            if _gf2_mod(mod, cand) == 0:
                return False
    return True


class Field:
    """A finite field GF(p) or GF(2^m) operating on canonical int values.

    The arithmetic methods (`add`, `mul`, `inv`, ...) take and return plain
    ints in ``range(q)``; that keeps the inner decoding loops free of object
    churn.  Use :meth:`element` / calling the field to get wrapped
    :class:`FieldElement` values.
    """

    __slots__ = ("p", "m", "q", "modulus", "_exp", "_log", "_hash")

    def __init__(self, p: int, m: int = 1, modulus: int | None = None):
        if not _is_prime(p):
            raise ValueError(f"field characteristic must be prime, got {p}")
        if m < 1:
            raise ValueError(f"extension degree must be >= 1, got {m}")
        if m > 1:
            if p != 2:
                raise ValueError("extension fields are supported for p = 2 only")
            if m > 16:
                raise ValueError(f"GF(2^m) supported for m <= 16, got m = {m}")
            if modulus is None:
                modulus = DEFAULT_MODULI[m]
            if not _gf2_irreducible(modulus, m):
                raise ValueError(
                    f"modulus {bin(modulus)} is not an irreducible degree-{m} "
                    "polynomial over GF(2)"
                )
        else:
            if modulus is not None:
                raise ValueError("prime fields take no modulus polynomial")
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = modulus
        self._hash = hash((p, m, modulus))
        if m > 1:
            self._build_tables()
        else:
            self._exp = self._log = None

    # -- construction helpers -------------------------------------------

    def _build_tables(self) -> None:
        q = self.q
        mod = self.modulus
        # Find a generator of the multiplicative group.  x itself works for
        # every default modulus; user-supplied (merely irreducible) moduli
        # may need a short search.
        for g in range(2, q):
            exp = [0] * (2 * (q - 1))
            log = [0] * q
            x = 1
            ok = True
            for i in range(q - 1):
                if x == 1 and i > 0:
                    ok = False  # cycle shorter than q-1: not a generator
                    break
                exp[i] = x
                log[x] = i
                x = _gf2_mod(_gf2_mul(x, g), mod)
            if ok and x == 1:
                exp[q - 1 : 2 * (q - 1)] = exp[: q - 1]
                self._exp = exp
                self._log = log
                return
        raise ValueError("no multiplicative generator found (modulus not irreducible?)")

    # -- textual form ----------------------------------------------------

    def label(self) -> str:
        """Canonical textual form: ``p:7`` or ``2^4:0b10011``."""
        if self.m == 1:
            return f"p:{self.p}"
        return f"2^{self.m}:{bin(self.modulus)}"

    def __repr__(self) -> str:
        return f"Field({self.label()!r})"

    # -- identity --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Field)
            and self.p == other.p
            and self.m == other.m
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return self._hash

    # -- arithmetic on canonical ints -------------------------------------

    def check(self, v: int) -> int:
        """Validate a canonical value (0 <= v < q), returning it."""
        if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < self.q:
            raise ValueError(f"{v!r} is not a canonical element of {self.label()}")
        return v

    def canon(self, v: int) -> int:
        """Map an arbitrary int onto a canonical element.

        Prime fields reduce mod p; binary fields reduce the bit pattern mod
        the modulus polynomial (negative values are rejected there, since a
        bit pattern has no sign).
        """
        if self.m == 1:
            return v % self.p
        if v < 0:
            raise ValueError("negative carrier for a binary field element")
        return _gf2_mod(v, self.modulus) if v >= self.q else v

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        return a ^ b

    def sub(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a - b) % self.p
        return a ^ b

    def neg(self, a: int) -> int:
        if self.m == 1:
            return -a % self.p
        return a

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"inverse of zero in {self.label()}")
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        return self._exp[self.q - 1 - self._log[a]]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if self.m == 1:
            return pow(a, e, self.p)
        if a == 0:
            return 0 if e else 1
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    # -- elements ----------------------------------------------------------

    def element(self, v: int) -> "FieldElement":
        return FieldElement(self, self.canon(v))

    def __call__(self, v: int) -> "FieldElement":
        return FieldElement(self, self.canon(v))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self) -> Iterator["FieldElement"]:
        """All q elements: 0, 1, then the rest in ascending canonical order."""
        for v in range(self.q):
            yield FieldElement(self, v)


class FieldElement:
    """One field element: a canonical int value tied to its field."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value: int):
        self.field = field
        self.value = value

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(
                    f"mixing elements of {self.field.label()} and {other.field.label()}"
                )
            return other.value
        if isinstance(other, int):
            return self.field.canon(other)
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.add(self.value, v))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(self.value, v))

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(v, self.value))

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.mul(self.value, v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.div(self.value, v))

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.div(v, self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == self.field.canon(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.field.label()}<{self.value}>"


def parse_field(text: str) -> Field:
    """Parse a field label: ``p:7``, ``2^4``, ``2^4:0b10011`` or ``2^4:19``."""
    text = text.strip()
    if text.startswith("p:"):
        try:
            p = int(text[2:])
        except ValueError:
            raise ValueError(f"bad prime field label {text!r}") from None
        return Field(p)
    if text.startswith("2^"):
        body = text[2:]
        mod = None
        if ":" in body:
            mtxt, modtxt = body.split(":", 1)
            mod = int(modtxt, 0)
        else:
            mtxt = body
        try:
            m = int(mtxt)
        except ValueError:
            raise ValueError(f"bad extension field label {text!r}") from None
        return Field(2, m, mod)
    raise ValueError(f"unrecognized field label {text!r} (want 'p:7' or '2^m:0b...')")
