"""Finite fields GF(p^h) with elements encoded as integers.

An element is stored as the integer ``sum(c_i * p**i)`` where ``c_0, ..., c_{h-1}``
are its polynomial coefficients over GF(p) (little-endian).  All geometry code
works on these integers through :class:`Field` methods; :class:`FieldElement`
is a thin operator-overloading wrapper for interactive use.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from itertools import product

MAX_ORDER = 1 << 20
TABLE_ORDER = 1 << 16

# Conway polynomials, coefficients little-endian including the leading 1.
# Prime fields use the modulus x instead (elements are plain residues).
CONWAY = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (3, 5): (1, 2, 0, 0, 0, 1),
    (3, 6): (2, 2, 1, 0, 2, 0, 1),
    (5, 2): (2, 4, 1),
    (5, 3): (3, 3, 0, 1),
    (5, 4): (2, 4, 4, 0, 1),
    (7, 2): (3, 6, 1),
    (7, 3): (4, 0, 6, 1),
    (11, 2): (2, 7, 1),
    (13, 2): (2, 12, 1),
}


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# --- polynomial helpers over GF(p); polynomials are little-endian tuples ---

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a, b, p: int) -> list[int]:
    a = _trim(list(a))
    b = _trim(list(b))
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        c = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bi) % p
        _trim(a)
    return a


def _poly_mulmod(a, b, mod, p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_mod(out, mod, p)


def is_irreducible(poly, p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    poly = _trim(list(poly))
    deg = len(poly) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for low in product(range(p), repeat=d):
            if not _poly_mod(poly, list(low) + [1], p):
                return False
    return True


def _x_order_is_full(poly, p: int) -> bool:
    h = len(poly) - 1
    q1 = p**h - 1

    def xpow(e: int) -> list[int]:
        result, base = [1], [0, 1]
        while e:
            if e & 1:
                result = _poly_mulmod(result, base, poly, p)
            base = _poly_mulmod(base, base, poly, p)
            e >>= 1
        return result

    return all(xpow(q1 // r) != [1] for r in prime_factors(q1))


def is_primitive(poly, p: int) -> bool:
    return is_irreducible(poly, p) and _x_order_is_full(tuple(poly), p)


def lowest_primitive_polynomial(p: int, h: int) -> tuple[int, ...]:
    """Lexicographically least monic primitive polynomial of degree h."""
    for n in range(1, p**h):
        low = [(n // p**i) % p for i in range(h)]
        poly = tuple(low) + (1,)
        if low[0] and is_primitive(poly, p):
            return poly
    raise FieldError(f"no primitive polynomial of degree {h} over GF({p})")


def default_modulus(p: int, h: int) -> tuple[int, ...]:
    if h == 1:
        return (0, 1)
    if (p, h) in CONWAY and p**h <= TABLE_ORDER:
        return CONWAY[(p, h)]
    return lowest_primitive_polynomial(p, h)


class Field:
    """GF(p^h) with integer-encoded elements.

    >>> F = Field(2, 2)
    >>> F.mul(2, 2)  # x*x = x + 1
    3
    """

    def __init__(self, p: int, h: int = 1, modulus=None):
        if not is_prime(p):
            raise FieldError(f"{p} is not prime")
        if h < 1:
            raise FieldError("extension degree must be >= 1")
        q = p**h
        if q > MAX_ORDER:
            raise FieldError(f"field order {q} exceeds {MAX_ORDER}")
        self.p, self.h, self.q = p, h, q
        self.modulus = tuple(modulus) if modulus is not None else default_modulus(p, h)
        if len(self.modulus) != h + 1 or self.modulus[-1] != 1:
            raise FieldError("modulus must be monic of degree h")
        if h > 1 and not is_irreducible(self.modulus, p):
            raise FieldError(f"modulus {self.modulus} is reducible over GF({p})")

        self._add = None
        if p != 2 and q <= 256:
            self._add = [[self._add_slow(a, b) for b in range(q)] for a in range(q)]
        self._neg = [self._neg_slow(a) for a in range(q)] if q <= TABLE_ORDER else None

        self._exp = self._log = None
        if q <= TABLE_ORDER:
            self._build_log_tables()

    # -- construction helpers --

    def _digits(self, a: int) -> list[int]:
        p = self.p
        return [(a // p**i) % p for i in range(self.h)]

    def _from_digits(self, d) -> int:
        v = 0
        for c in reversed(list(d)):
            v = v * self.p + c
        return v

    def _add_slow(self, a: int, b: int) -> int:
        if self.h == 1:
            return (a + b) % self.p
        return self._from_digits((x + y) % self.p for x, y in zip(self._digits(a), self._digits(b)))

    def _neg_slow(self, a: int) -> int:
        if self.h == 1:
            return (-a) % self.p
        return self._from_digits((-x) % self.p for x in self._digits(a))

    def _mul_slow(self, a: int, b: int) -> int:
        if self.h == 1:
            return a * b % self.p
        prod = _poly_mulmod(_trim(self._digits(a)), _trim(self._digits(b)), self.modulus, self.p)
        return self._from_digits(prod + [0] * (self.h - len(prod)))

    def _build_log_tables(self) -> None:
        q = self.q
        gen = self.primitive_element_slow()
        exp = [0] * (2 * (q - 1))
        log = [0] * q
        x = 1
        for i in range(q - 1):
            exp[i] = x
            log[x] = i
            x = self._mul_slow(x, gen)
        if x != 1 or len(set(exp[: q - 1])) != q - 1:
            raise FieldError("generator is not primitive")
        for i in range(q - 1, 2 * (q - 1)):
            exp[i] = exp[i - (q - 1)]
        self._exp, self._log = exp, log
        self.generator = gen

    def primitive_element_slow(self) -> int:
        """x for proper extensions (the modulus is primitive), else the least primitive root."""
        if self.h > 1 and _x_order_is_full(self.modulus, self.p):
            return self.p  # integer encoding of the polynomial x
        q1 = self.q - 1
        factors = prime_factors(q1)
        for g in range(2 if self.q > 2 else 1, self.q):
            if all(self._pow_slow(g, q1 // r) != 1 for r in factors):
                return g
        raise FieldError("no primitive element")

    def _pow_slow(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self._mul_slow(result, a)
            a = self._mul_slow(a, a)
            e >>= 1
        return result

    # -- integer-level arithmetic --

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self._add is not None:
            return self._add[a][b]
        return self._add_slow(a, b)

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self._neg is not None:
            return self._neg[a]
        return self._neg_slow(a)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._log is not None:
            return self._exp[self._log[a] + self._log[b]]
        return self._mul_slow(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self._log is not None:
            return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]
        return self._pow_slow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            if k < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if k == 0 else 0
        if self._log is not None:
            return self._exp[(self._log[a] * k) % (self.q - 1)]
        if k < 0:
            a, k = self.inv(a), -k
        return self._pow_slow(a, k)

    def frobenius(self, a: int, e: int = 1) -> int:
        """a ** (p ** e)."""
        return self.pow(a, self.p ** (e % self.h) if self.h > 1 else 1)

    def elements(self) -> range:
        return range(self.q)

    def coeffs(self, a: int) -> tuple[int, ...]:
        return tuple(self._digits(a))

    def from_coeffs(self, coeffs) -> int:
        coeffs = list(coeffs)
        if len(coeffs) != self.h or any(not 0 <= c < self.p for c in coeffs):
            raise FieldError(f"bad coefficient list {coeffs}")
        return self._from_digits(coeffs)

    def __call__(self, value) -> "FieldElement":
        if isinstance(value, (list, tuple)):
            value = self.from_coeffs(value)
        if not 0 <= value < self.q:
            raise FieldError(f"{value} out of range for GF({self.q})")
        return FieldElement(self, value)

    # -- identity --

    def header(self) -> dict:
        return {"p": self.p, "h": self.h, "modulus": list(self.modulus)}

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and (self.p, self.h, self.modulus) == (
            other.p, other.h, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.h, self.modulus))

    def __repr__(self) -> str:
        return f"Field(p={self.p}, h={self.h}, modulus={self.modulus})"


@lru_cache(maxsize=None)
def field_create(p: int, h: int = 1) -> Field:
    """Cached constructor; fields are immutable so sharing is safe."""
    return Field(p, h)


def field_of_order(q: int) -> Field:
    for p in range(2, q + 1):
        if q % p == 0:
            break
    else:
        raise FieldError(f"{q} is not a prime power")
    h, r = 0, q
    while r % p == 0:
        r //= p
        h += 1
    if r != 1 or not is_prime(p):
        raise FieldError(f"{q} is not a prime power")
    return field_create(p, h)


@dataclass(frozen=True)
class FieldElement:
    field: Field = dc_field(repr=False)
    value: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs(self.value)

    def _check(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError("operands from different fields")
            return other.value
        if isinstance(other, int):
            return other % self.field.p if self.field.h == 1 else self.field(other).value
        return NotImplemented

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._check(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._check(other)))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._check(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.value, self._check(other)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, k: int):
        return FieldElement(self.field, self.field.pow(self.value, k))

    def inv(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value


def frobenius(a: FieldElement, e: int = 1) -> FieldElement:
    return FieldElement(a.field, a.field.frobenius(a.value, e))
