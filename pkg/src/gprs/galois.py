"""Exact arithmetic in finite fields GF(p^s) with canonical integer encodings.

An element of GF(p^s) is stored as its coefficient vector over GF(p) in the
power basis of the reduction modulus, degree-ascending. The canonical integer
encoding of an element is sum(coeffs[i] * p**i), a bijection onto 0..q-1 that
gives the total order used everywhere downstream (evaluation sets, witness
reporting, tie-breaking). Fields and elements are immutable; all operations
are pure.

Even characteristic is constructible but considered experimental: the
deep-hole criteria in :mod:`gprs.deepholes` refuse p = 2, only the exhaustive
oracles run there.
"""

from __future__ import annotations

import functools
import math

# Extension fields up to this order get dense add/mul lookup tables on first
# use; larger ones fall back to per-operation coefficient arithmetic.
_TABLE_LIMIT = 512


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power_decomposition(q: int) -> tuple[int, int]:
    """Return (p, s) with q = p**s and p prime, or raise ValueError."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = q
    for f in range(2, math.isqrt(q) + 1):
        if q % f == 0:
            p = f
            break
    s = 0
    rest = q
    while rest % p == 0:
        rest //= p
        s += 1
    if rest != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, s


def lucas_binom(m: int, r: int, p: int) -> int:
    """Binomial coefficient C(m, r) modulo the prime p, by base-p digits."""
    if r < 0 or r > m:
        return 0
    out = 1
    while m or r:
        mi, ri = m % p, r % p
        if ri > mi:
            return 0
        out = out * math.comb(mi, ri) % p
        m //= p
        r //= p
    return out


def _digits(value: int, p: int, width: int) -> list[int]:
    out = []
    for _ in range(width):
        value, d = divmod(value, p)
        out.append(d)
    return out


def _poly_mod(num: list[int], den: list[int], p: int) -> list[int]:
    # remainder of num by monic den, coefficients ascending
    rem = list(num)
    dd = len(den) - 1
    while len(rem) > dd:
        lead = rem[-1] % p
        if lead:
            shift = len(rem) - 1 - dd
            for i, c in enumerate(den):
                rem[shift + i] = (rem[shift + i] - lead * c) % p
        rem.pop()
    while rem and rem[-1] % p == 0:
        rem.pop()
    return [c % p for c in rem]


def _is_irreducible(coeffs: list[int], p: int) -> bool:
    # coeffs monic, ascending; exhaustive trial division by all monic
    # divisors of degree 1..deg//2
    deg = len(coeffs) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for enc in range(p**d):
            den = _digits(enc, p, d) + [1]
            if not _poly_mod(coeffs, den, p):
                return False
    return True


def _default_modulus(p: int, s: int) -> tuple[int, ...]:
    # smallest monic irreducible of degree s in canonical encoding order
    for enc in range(p**s):
        cand = _digits(enc, p, s) + [1]
        if _is_irreducible(cand, p):
            return tuple(cand)
    raise ValueError(f"no irreducible polynomial of degree {s} over GF({p})")


class FiniteField:
    """The finite field GF(p^s), deterministically constructed.

    When no reduction modulus is supplied for s > 1, the modulus is the
    monic irreducible of degree s whose coefficient vector has the smallest
    canonical encoding. All constructions with equal (p, s, modulus) compare
    and hash equal.
    """

    def __init__(self, p: int, s: int = 1, modulus=None):
        if not isinstance(p, int) or not is_prime(p):
            raise ValueError(f"characteristic {p!r} is not prime")
        if not isinstance(s, int) or s < 1:
            raise ValueError(f"extension degree {s!r} must be a positive integer")
        self.p = p
        self.s = s
        self.q = p**s
        if s == 1:
            if modulus is not None:
                raise ValueError("prime fields take no reduction modulus")
            self.modulus = None
        else:
            if modulus is None:
                self.modulus = _default_modulus(p, s)
            else:
                mod = tuple(int(c) % p for c in modulus)
                if len(mod) != s + 1 or mod[-1] != 1:
                    raise ValueError(f"modulus must be monic of degree {s}")
                if not _is_irreducible(list(mod), p):
                    raise ValueError(f"modulus {list(mod)} is reducible over GF({p})")
                self.modulus = mod
            # x^i mod modulus for i = s .. 2s-2, as coefficient vectors
            self._xpow = []
            for i in range(s, 2 * s - 1):
                num = [0] * i + [1]
                red = _poly_mod(num, list(self.modulus), p)
                self._xpow.append(red + [0] * (s - len(red)))
        self._mul_table = None
        self._inv_table = None
        self._np_mul = None
        self._np_add = None

    # -- identity and representation ------------------------------------

    def __eq__(self, other):
        if not isinstance(other, FiniteField):
            return NotImplemented
        return (self.p, self.s, self.modulus) == (other.p, other.s, other.modulus)

    def __hash__(self):
        return hash((self.p, self.s, self.modulus))

    def __repr__(self):
        return f"GF({self.p})" if self.s == 1 else f"GF({self.p}^{self.s})"

    @property
    def is_prime_field(self) -> bool:
        return self.s == 1

    @property
    def has_odd_characteristic(self) -> bool:
        return self.p != 2

    def spec_string(self) -> str:
        """Field in the textual form accepted by the CLI, e.g. "3^2"."""
        return str(self.p) if self.s == 1 else f"{self.p}^{self.s}"

    # -- element constructors --------------------------------------------

    def element(self, encoding: int) -> "FieldElement":
        if not 0 <= encoding < self.q:
            raise ValueError(f"encoding {encoding} outside 0..{self.q - 1}")
        return FieldElement(self, encoding)

    def from_coeffs(self, coeffs) -> "FieldElement":
        cs = [int(c) % self.p for c in coeffs]
        if len(cs) > self.s:
            raise ValueError(f"coefficient vector longer than degree {self.s}")
        cs += [0] * (self.s - len(cs))
        enc = 0
        for c in reversed(cs):
            enc = enc * self.p + c
        return FieldElement(self, enc)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self, nonzero_only: bool = False) -> list["FieldElement"]:
        """All field elements in ascending canonical-encoding order."""
        start = 1 if nonzero_only else 0
        return [FieldElement(self, e) for e in range(start, self.q)]

    def coeffs_of(self, encoding: int) -> tuple[int, ...]:
        return tuple(_digits(encoding, self.p, self.s))

    # -- encoding-level arithmetic ----------------------------------------
    # These are the hot-path primitives; FieldElement operators wrap them.

    def add_enc(self, a: int, b: int) -> int:
        if self.s == 1:
            return (a + b) % self.p
        p = self.p
        out = 0
        mul = 1
        for _ in range(self.s):
            out += ((a % p) + (b % p)) % p * mul
            a //= p
            b //= p
            mul *= p
        return out

    def neg_enc(self, a: int) -> int:
        if self.s == 1:
            return -a % self.p
        p = self.p
        out = 0
        mul = 1
        for _ in range(self.s):
            out += (-(a % p)) % p * mul
            a //= p
            mul *= p
        return out

    def sub_enc(self, a: int, b: int) -> int:
        return self.add_enc(a, self.neg_enc(b))

    def _mul_coeffs(self, a: int, b: int) -> int:
        p, s = self.p, self.s
        ca = _digits(a, p, s)
        cb = _digits(b, p, s)
        prod = [0] * (2 * s - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    prod[i + j] += x * y
        acc = [c % p for c in prod[:s]]
        for i in range(s, 2 * s - 1):
            c = prod[i] % p
            if c:
                red = self._xpow[i - s]
                for j in range(s):
                    acc[j] = (acc[j] + c * red[j]) % p
        enc = 0
        for c in reversed(acc):
            enc = enc * p + c
        return enc

    def _ensure_tables(self):
        if self._mul_table is None:
            q = self.q
            self._mul_table = [
                [self._mul_coeffs(a, b) for b in range(q)] for a in range(q)
            ]
            inv = [0] * q
            for a in range(1, q):
                row = self._mul_table[a]
                inv[a] = row.index(1)
            self._inv_table = inv

    def mul_enc(self, a: int, b: int) -> int:
        if self.s == 1:
            return a * b % self.p
        if self.q <= _TABLE_LIMIT:
            self._ensure_tables()
            return self._mul_table[a][b]
        return self._mul_coeffs(a, b)

    def inv_enc(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inversion of zero field element")
        if self.s == 1:
            return pow(a, self.p - 2, self.p)
        if self.q <= _TABLE_LIMIT:
            self._ensure_tables()
            return self._inv_table[a]
        return self.pow_enc(a, self.q - 2)

    def div_enc(self, a: int, b: int) -> int:
        return self.mul_enc(a, self.inv_enc(b))

    def pow_enc(self, a: int, n: int) -> int:
        # exponent reduced mod q-1 only for nonzero bases
        if a == 0:
            if n < 0:
                raise ZeroDivisionError("zero raised to a negative power")
            return 1 if n == 0 else 0
        n %= self.q - 1
        result = 1
        base = a
        while n:
            if n & 1:
                result = self.mul_enc(result, base)
            base = self.mul_enc(base, base)
            n >>= 1
        return result

    # -- numpy views of the tables (vectorized scans in gprs.codes) -------

    def np_tables(self):
        """(add, mul) lookup tables as numpy arrays, or None for prime fields."""
        if self.s == 1:
            return None
        if self.q > _TABLE_LIMIT:
            raise ValueError(f"lookup tables unavailable for q = {self.q}")
        import numpy as np

        if self._np_mul is None:
            self._ensure_tables()
            q = self.q
            add = [[self.add_enc(a, b) for b in range(q)] for a in range(q)]
            self._np_add = np.array(add, dtype=np.int16)
            self._np_mul = np.array(self._mul_table, dtype=np.int16)
        return self._np_add, self._np_mul

    # -- derived structure -------------------------------------------------

    def primitive_element(self) -> "FieldElement":
        """Smallest element (in encoding order) of multiplicative order q-1."""
        if self.q < 3:
            raise ValueError("primitive element requires q >= 3")
        for enc in range(1, self.q):
            order = 1
            acc = enc
            while acc != 1:
                acc = self.mul_enc(acc, enc)
                order += 1
            if order == self.q - 1:
                return FieldElement(self, enc)
        raise AssertionError("multiplicative group of a finite field is cyclic")


class FieldElement:
    """Immutable element of a FiniteField, identified by canonical encoding."""

    __slots__ = ("field", "encoding")

    def __init__(self, field: FiniteField, encoding: int):
        self.field = field
        self.encoding = encoding

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs_of(self.encoding)

    @property
    def is_zero(self) -> bool:
        return self.encoding == 0

    def _same_field(self, other) -> "FieldElement":
        if other.field != self.field:
            raise ValueError(
                f"elements of {self.field!r} and {other.field!r} cannot mix"
            )
        return other

    def __add__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        other = self._same_field(other)
        return FieldElement(self.field, self.field.add_enc(self.encoding, other.encoding))

    def __sub__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        other = self._same_field(other)
        return FieldElement(self.field, self.field.sub_enc(self.encoding, other.encoding))

    def __mul__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        other = self._same_field(other)
        return FieldElement(self.field, self.field.mul_enc(self.encoding, other.encoding))

    def __truediv__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        other = self._same_field(other)
        return FieldElement(self.field, self.field.div_enc(self.encoding, other.encoding))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg_enc(self.encoding))

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("exponent must be an integer")
        return FieldElement(self.field, self.field.pow_enc(self.encoding, n))

    def inv(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv_enc(self.encoding))

    def __eq__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field == other.field and self.encoding == other.encoding

    def __hash__(self):
        return hash((self.field, self.encoding))

    def __int__(self):
        return self.encoding

    def __repr__(self):
        return f"{self.field!r}:{self.encoding}"


@functools.lru_cache(maxsize=None)
def _cached_field(p: int, s: int, modulus) -> FiniteField:
    return FiniteField(p, s, modulus)


def field(p: int, s: int = 1, modulus=None) -> FiniteField:
    """Shared-instance field constructor (tables get reused across callers)."""
    key = None if modulus is None else tuple(int(c) for c in modulus)
    return _cached_field(p, s, key)


def field_of_order(q: int, modulus=None) -> FiniteField:
    p, s = prime_power_decomposition(q)
    return field(p, s, modulus)


def parse_field_spec(text: str) -> tuple[int, int]:
    """Parse "p" or "p^s" into (p, s)."""
    parts = text.strip().split("^")
    try:
        if len(parts) == 1:
            q = int(parts[0])
            return prime_power_decomposition(q)
        if len(parts) == 2:
            return int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise ValueError(f"bad field spec {text!r}: {exc}") from None
    raise ValueError(f"bad field spec {text!r}")


def field_from_spec(text: str, modulus_text: str | None = None) -> FiniteField:
    """Build a field from its CLI form, e.g. ("3^2", "1,0,1")."""
    p, s = parse_field_spec(text)
    modulus = None
    if modulus_text:
        modulus = [int(c) for c in modulus_text.split(",")]
    return field(p, s, modulus)
