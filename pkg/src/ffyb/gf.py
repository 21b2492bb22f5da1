"""Exact arithmetic in finite fields GF(p^s).

A :class:`Field` fixes a prime p, an extension degree s and a monic
irreducible modulus of degree s over GF(p).  Elements are little-endian
coefficient vectors reduced mod (p, modulus), and every element has a
canonical integer encoding in 0..q-1 (its coefficient vector read as base-p
digits) which is the wire format used by the CLI and by the enumeration
scanners.

The modulus is chosen deterministically: candidates are ordered
lexicographically by their non-leading coefficient tuple, constant term
first, and the first irreducible wins.  For s = 1 this degenerates to the
modulus x, i.e. plain residues mod p.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

# Enumeration-based oracles make larger fields pointless; the cap also keeps
# the modulus search and the encoded arithmetic tables small.
MAX_ORDER = 2**20


def exact_div(num: int, den: int) -> int:
    """Integer division that must be exact; a remainder is an internal bug."""
    quot, rem = divmod(num, den)
    if rem:
        raise ArithmeticError(f"inexact division: {num} / {den}")
    return quot


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    d = 2
    while d * d <= m:
        if m % d == 0:
            return False
        d += 1
    return True


def coeff_tuples(base: int, length: int):
    """All length-tuples over 0..base-1, lexicographic, first position most
    significant.  Shared ordering for the modulus search and for the
    irreducible enumerations used in polynomial factoring."""
    return itertools.product(range(base), repeat=length)


# ---------------------------------------------------------------------------
# Polynomial arithmetic over GF(p) on little-endian int lists.  Used for the
# modulus search and for element reduction; no Field objects involved.

def _trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _poly_mul(f: list[int], g: list[int], p: int) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return _trim(out)


def _poly_divmod(f: list[int], g: list[int], p: int) -> tuple[list[int], list[int]]:
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(f)
    if len(rem) < len(g):
        return [], _trim(rem)
    inv_lead = pow(g[-1], p - 2, p)
    quot = [0] * (len(rem) - len(g) + 1)
    while len(rem) >= len(g):
        c = rem[-1] * inv_lead % p
        d = len(rem) - len(g)
        quot[d] = c
        for i, b in enumerate(g):
            rem[d + i] = (rem[d + i] - c * b) % p
        _trim(rem)
        if not rem:
            break
    return _trim(quot), rem


def _is_irreducible(f: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree at most deg(f)/2."""
    deg = len(f) - 1
    for d in range(1, deg // 2 + 1):
        for tail in coeff_tuples(p, d):
            _, rem = _poly_divmod(f, [*tail, 1], p)
            if not rem:
                return False
    return True


# ---------------------------------------------------------------------------

class Field:
    """GF(p^s) with a fixed modulus.  Immutable; safe to share."""

    __slots__ = ("p", "s", "q", "modulus", "_tables")

    def __init__(self, p: int, s: int, modulus: tuple[int, ...]):
        self.p = p
        self.s = s
        self.q = p**s
        self.modulus = modulus
        self._tables = None

    def __eq__(self, other):
        if not isinstance(other, Field):
            return NotImplemented
        return (self.p, self.s, self.modulus) == (other.p, other.s, other.modulus)

    def __hash__(self):
        return hash((self.p, self.s, self.modulus))

    def __repr__(self):
        if self.s == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.s})"

    def element(self, coeffs) -> "FieldElement":
        """Build an element from (up to s) little-endian residues mod p."""
        cs = [c % self.p for c in coeffs]
        if len(cs) > self.s:
            raise ValueError(f"expected at most {self.s} coefficients, got {len(cs)}")
        cs += [0] * (self.s - len(cs))
        return FieldElement(self, tuple(cs))

    def zero(self) -> "FieldElement":
        return FieldElement(self, (0,) * self.s)

    def one(self) -> "FieldElement":
        return self.element([1])

    def from_encoding(self, k: int) -> "FieldElement":
        """Decode the canonical integer encoding (base-p digits of k)."""
        if not 0 <= k < self.q:
            raise ValueError(f"encoding {k} out of range 0..{self.q - 1}")
        coeffs = []
        for _ in range(self.s):
            k, r = divmod(k, self.p)
            coeffs.append(r)
        return FieldElement(self, tuple(coeffs))

    def from_int(self, k: int) -> "FieldElement":
        """The image of the integer k, i.e. (k mod p) times the identity."""
        return self.element([k % self.p])

    def encoded_tables(self) -> tuple[list[list[int]], list[list[int]]]:
        """(add, mul) tables over integer encodings, built lazily.

        The scanners run on these tables instead of element objects."""
        if self._tables is None:
            elems = [self.from_encoding(i) for i in range(self.q)]
            add = [[(x + y).encoding for y in elems] for x in elems]
            mul = [[(x * y).encoding for y in elems] for x in elems]
            self._tables = (add, mul)
        return self._tables


class FieldElement:
    """An element of a Field: an immutable coefficient vector."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: tuple[int, ...]):
        self.field = field
        self.coeffs = coeffs

    @property
    def encoding(self) -> int:
        k = 0
        for c in reversed(self.coeffs):
            k = k * self.field.p + c
        return k

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def _check(self, other) -> None:
        if self.field != other.field:
            raise ValueError(f"field mismatch: {self.field} vs {other.field}")

    def __add__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        self._check(other)
        p = self.field.p
        return FieldElement(self.field,
                            tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        self._check(other)
        p = self.field.p
        return FieldElement(self.field,
                            tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        p = self.field.p
        return FieldElement(self.field, tuple(-c % p for c in self.coeffs))

    def __mul__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        self._check(other)
        fld = self.field
        prod = _poly_mul(list(self.coeffs), list(other.coeffs), fld.p)
        if len(prod) >= len(fld.modulus):
            _, prod = _poly_divmod(prod, list(fld.modulus), fld.p)
        prod += [0] * (fld.s - len(prod))
        return FieldElement(fld, tuple(prod))

    def inv(self) -> "FieldElement":
        """Multiplicative inverse via extended Euclid over GF(p)[x]."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        p = self.field.p
        r0, r1 = list(self.field.modulus), _trim(list(self.coeffs))
        t0, t1 = [], [1]
        while r1:
            quot, rem = _poly_divmod(r0, r1, p)
            r0, r1 = r1, rem
            t0, t1 = t1, _trim([(a - b) % p
                                for a, b in itertools.zip_longest(t0, _poly_mul(quot, t1, p),
                                                                   fillvalue=0)])
        # r0 is a nonzero constant gcd; scale t0 by its inverse
        c = pow(r0[0], p - 2, p)
        t0 = [a * c % p for a in t0]
        t0 += [0] * (self.field.s - len(t0))
        return FieldElement(self.field, tuple(t0[: self.field.s]))

    def __truediv__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self * other.inv()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        base = self.inv() if e < 0 else self
        e = abs(e)
        out = self.field.one()
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.coeffs, self.field.p, self.field.modulus))

    def __repr__(self):
        return f"{self.encoding}@{self.field!r}"


@lru_cache(maxsize=None)
def make_field(p: int, s: int = 1) -> Field:
    """Construct GF(p^s) with the canonical modulus.

    The modulus is the first irreducible among monic degree-s polynomials
    ordered by coefficient tuple (constant term compared first)."""
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    if s < 1:
        raise ValueError(f"extension degree s = {s} must be >= 1")
    if p**s > MAX_ORDER:
        raise ValueError(f"field order {p}^{s} exceeds supported maximum {MAX_ORDER}")
    for tail in coeff_tuples(p, s):
        candidate = [*tail, 1]
        if _is_irreducible(candidate, p):
            return Field(p, s, tuple(candidate))
    raise AssertionError(f"no monic irreducible of degree {s} over GF({p})")  # impossible


def all_elements(field: Field) -> list[FieldElement]:
    """All q elements in encoding order (a bijection with 0..q-1)."""
    return [field.from_encoding(i) for i in range(field.q)]


def int_to_field(field: Field, k: int) -> FieldElement:
    """Cast an integer scalar into the field: (k mod p) in the prime subfield."""
    return field.from_int(k)
