"""Polynomials over GF(2) and elements of binary extension fields GF(2^m).

A polynomial is stored densely as a Python int: bit ``i`` is the coefficient
of ``x**i``.  This is enough to build the generator polynomial of a binary
cyclic code from a complete defining set.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence


@dataclass(frozen=True, order=True)
class GF2Poly:
    """Polynomial over GF(2); ``value`` packs the coefficients, LSB = constant term."""

    value: int = 0

    def __post_init__(self):
        if self.value < 0:
            raise ValueError("polynomial bit pattern must be non-negative")

    @classmethod
    def from_coefficients(cls, coeffs: Sequence[int]) -> "GF2Poly":
        """Build from coefficients listed lowest degree first."""
        value = 0
        for i, c in enumerate(coeffs):
            if c not in (0, 1):
                raise ValueError(f"coefficient {c!r} is not a bit")
            value |= c << i
        return cls(value)

    @classmethod
    def from_exponents(cls, exps: Iterable[int]) -> "GF2Poly":
        value = 0
        for e in exps:
            value ^= 1 << e
        return cls(value)

    @property
    def degree(self) -> int | None:
        """Degree, or ``None`` for the zero polynomial."""
        return self.value.bit_length() - 1 if self.value else None

    @property
    def coefficients(self) -> tuple[int, ...]:
        return tuple((self.value >> i) & 1 for i in range(self.value.bit_length()))

    def is_zero(self) -> bool:
        return self.value == 0

    def __add__(self, other: "GF2Poly") -> "GF2Poly":
        return GF2Poly(self.value ^ other.value)

    __sub__ = __add__

    def __mul__(self, other: "GF2Poly") -> "GF2Poly":
        return poly_mul(self, other)

    def __divmod__(self, other: "GF2Poly") -> tuple["GF2Poly", "GF2Poly"]:
        return poly_divmod(self, other)

    def __floordiv__(self, other: "GF2Poly") -> "GF2Poly":
        return poly_divmod(self, other)[0]

    def __mod__(self, other: "GF2Poly") -> "GF2Poly":
        return poly_divmod(self, other)[1]

    def __call__(self, x: "GF2mElement") -> "GF2mElement":
        """Evaluate at an element of an extension field (Horner)."""
        acc = x.field.zero
        for c in reversed(self.coefficients):
            acc = acc * x
            if c:
                acc = acc + x.field.one
        return acc

    def __str__(self) -> str:
        if not self.value:
            return "0"
        terms = []
        for i in reversed(range(self.value.bit_length())):
            if (self.value >> i) & 1:
                terms.append("1" if i == 0 else "x" if i == 1 else f"x^{i}")
        return " + ".join(terms)


def _clmul(a: int, b: int) -> int:
    if a < b:
        a, b = b, a
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def _divmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    db = b.bit_length() - 1
    quot = 0
    while a and a.bit_length() - 1 >= db:
        shift = a.bit_length() - 1 - db
        quot |= 1 << shift
        a ^= b << shift
    return quot, a


def poly_mul(a: GF2Poly, b: GF2Poly) -> GF2Poly:
    """Carry-less product of two GF(2) polynomials."""
    return GF2Poly(_clmul(a.value, b.value))


def poly_divmod(a: GF2Poly, b: GF2Poly) -> tuple[GF2Poly, GF2Poly]:
    q, r = _divmod(a.value, b.value)
    return GF2Poly(q), GF2Poly(r)


def poly_gcd(a: GF2Poly, b: GF2Poly) -> GF2Poly:
    x, y = a.value, b.value
    while y:
        x, y = y, _divmod(x, y)[1]
    return GF2Poly(x)


def poly_lcm(a: GF2Poly, b: GF2Poly) -> GF2Poly:
    return poly_divmod(poly_mul(a, b), poly_gcd(a, b))[0]


def is_irreducible(p: GF2Poly) -> bool:
    """Trial division by every polynomial of degree 1..deg(p)//2."""
    deg = p.degree
    if deg is None or deg < 1:
        return False
    for cand in range(2, 1 << (deg // 2 + 1)):
        if _divmod(p.value, cand)[1] == 0:
            return False
    return True


def smallest_irreducible(m: int) -> GF2Poly:
    """Numerically smallest irreducible polynomial of degree m (x^4+x+1 for m=4)."""
    if m < 1:
        raise ValueError("extension degree must be positive")
    for value in range(1 << m, 1 << (m + 1)):
        p = GF2Poly(value)
        if is_irreducible(p):
            return p
    raise AssertionError("unreachable: irreducibles exist in every degree")


class GF2mField:
    """The field GF(2)[x]/(modulus) with 2^m elements."""

    def __init__(self, m: int, modulus: GF2Poly | None = None):
        if modulus is None:
            modulus = smallest_irreducible(m)
        if modulus.degree != m:
            raise ValueError(f"modulus {modulus} does not have degree {m}")
        if not is_irreducible(modulus):
            raise ValueError(f"modulus {modulus} is reducible over GF(2)")
        self.m = m
        self.modulus = modulus
        self.order = 1 << m

    def __repr__(self) -> str:
        return f"GF2mField(m={self.m}, modulus={self.modulus})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GF2mField) and (self.m, self.modulus) == (other.m, other.modulus)

    def __hash__(self) -> int:
        return hash((self.m, self.modulus))

    def __call__(self, value: int | GF2Poly) -> "GF2mElement":
        if isinstance(value, GF2Poly):
            value = value.value
        return GF2mElement(self, _divmod(value, self.modulus.value)[1])

    @property
    def zero(self) -> "GF2mElement":
        return GF2mElement(self, 0)

    @property
    def one(self) -> "GF2mElement":
        return GF2mElement(self, 1)

    @property
    def x(self) -> "GF2mElement":
        return self(0b10)

    def elements(self) -> list["GF2mElement"]:
        return [GF2mElement(self, v) for v in range(self.order)]

    def _mulmod(self, a: int, b: int) -> int:
        return _divmod(_clmul(a, b), self.modulus.value)[1]

    @cached_property
    def primitive_element(self) -> "GF2mElement":
        """x when the modulus is primitive, otherwise the numerically smallest generator."""
        if self.order == 2:
            return self.one
        for v in [2] + list(range(3, self.order)):
            e = GF2mElement(self, v)
            if e.multiplicative_order() == self.order - 1:
                return e
        raise AssertionError("multiplicative group of a finite field is cyclic")


@dataclass(frozen=True)
class GF2mElement:
    field: GF2mField
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.field.order:
            raise ValueError(f"representative {self.value} has degree >= {self.field.m}")

    @property
    def repr(self) -> GF2Poly:
        return GF2Poly(self.value)

    def is_zero(self) -> bool:
        return self.value == 0

    def _check(self, other: "GF2mElement"):
        if other.field != self.field:
            raise ValueError("elements belong to different fields")

    def __add__(self, other: "GF2mElement") -> "GF2mElement":
        self._check(other)
        return GF2mElement(self.field, self.value ^ other.value)

    __sub__ = __add__

    def __mul__(self, other: "GF2mElement") -> "GF2mElement":
        self._check(other)
        return GF2mElement(self.field, self.field._mulmod(self.value, other.value))

    def __pow__(self, j: int) -> "GF2mElement":
        return element_pow(self, j)

    def inverse(self) -> "GF2mElement":
        if not self.value:
            raise ZeroDivisionError("zero has no inverse")
        return element_pow(self, self.field.order - 2)

    def multiplicative_order(self) -> int:
        if not self.value:
            raise ValueError("zero has no multiplicative order")
        n = self.field.order - 1
        order = n
        for p in _prime_factors(n):
            while order % p == 0 and (self ** (order // p)).value == 1:
                order //= p
        return order

    def __str__(self) -> str:
        return str(GF2Poly(self.value))


def _prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def element_pow(e: GF2mElement, j: int) -> GF2mElement:
    """Square-and-multiply; ``e**0`` is 1 (including for e = 0)."""
    if j < 0:
        raise ValueError("exponent must be non-negative")
    result, base = 1, e.value
    while j:
        if j & 1:
            result = e.field._mulmod(result, base)
        base = e.field._mulmod(base, base)
        j >>= 1
    return GF2mElement(e.field, result)


def conjugates(e: GF2mElement) -> list[GF2mElement]:
    """The orbit e, e^2, e^4, ... under Frobenius."""
    out = [e]
    cur = e * e
    while cur != e:
        out.append(cur)
        cur = cur * cur
    return out


def minimal_polynomial(e: GF2mElement) -> GF2Poly:
    """Monic minimal polynomial of ``e`` over GF(2).

    Expands prod (x - c) over the conjugacy class of ``e`` with coefficients in
    GF(2^m) and checks that every coefficient lands in GF(2).
    """
    if e.is_zero():
        raise ValueError("minimal polynomial of zero is x; only nonzero elements are supported")
    field = e.field
    coeffs = [field.one]  # lowest degree first, over GF(2^m)
    for c in conjugates(e):
        # multiply by (x + c)
        nxt = [field.zero] * (len(coeffs) + 1)
        for i, a in enumerate(coeffs):
            nxt[i + 1] = nxt[i + 1] + a
            nxt[i] = nxt[i] + a * c
        coeffs = nxt
    bits = []
    for a in coeffs:
        if a.value not in (0, 1):
            raise ArithmeticError(f"coefficient {a} of minimal polynomial is not in GF(2)")
        bits.append(a.value)
    return GF2Poly.from_coefficients(bits)


def multiplicative_order_mod(base: int, n: int) -> int:
    """Smallest m >= 1 with base^m = 1 (mod n)."""
    if n == 1:
        return 1
    m, acc = 1, base % n
    while acc != 1:
        acc = acc * base % n
        m += 1
        if m > n:
            raise ValueError(f"{base} is not invertible modulo {n}")
    return m


def cyclotomic_coset(i: int, n: int) -> frozenset[int]:
    """2-cyclotomic coset of i modulo n."""
    out, cur = set(), i % n
    while cur not in out:
        out.add(cur)
        cur = cur * 2 % n
    return frozenset(out)


def root_of_unity(n: int) -> GF2mElement:
    """Primitive n-th root of unity in the smallest GF(2^m) with n | 2^m - 1."""
    if n < 1 or n % 2 == 0:
        raise ValueError(f"length n={n} must be odd and positive")
    m = multiplicative_order_mod(2, n)
    field = GF2mField(m)
    return field.primitive_element ** ((field.order - 1) // n)


def generator_from_defining_set(n: int, defset: Iterable[int]) -> GF2Poly:
    """Generator polynomial of the binary cyclic code of length n with the given defining set.

    The defining set must be closed under multiplication by 2 modulo n.
    """
    if n < 1 or n % 2 == 0:
        raise ValueError(f"length n={n} must be odd and positive")
    defset = {i % n for i in defset}
    for i in sorted(defset):
        missing = sorted(cyclotomic_coset(i, n) - defset)
        if missing:
            raise ValueError(
                f"defining set is not complete: {i} is present but {missing[0]} "
                f"(= 2*{i} power mod {n}) is missing"
            )
    if not defset:
        return GF2Poly(1)
    alpha = root_of_unity(n)
    g = GF2Poly(1)
    seen: set[int] = set()
    for i in sorted(defset):
        if i in seen:
            continue
        seen |= cyclotomic_coset(i, n)
        g = poly_lcm(g, minimal_polynomial(alpha ** i))
    return g
