"""Finite fields F_q, q = p^e, with table-driven arithmetic.

Elements of F_q are plain ints in range(q) encoding the base-p digit
vector of a residue polynomial modulo the field's irreducible modulus.
For e = 1 the encoding is the usual residue mod p.  All arithmetic is
precomputed into tables at construction time, so q is assumed small
(the library targets q <= a few hundred).
"""
from __future__ import annotations

from functools import lru_cache


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _fp_poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _fp_poly_mod(a, m, p):
    # m monic; reduce a modulo m in-place style
    a = list(a)
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] % p
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
        a[i] = 0
    while len(a) > dm:
        a.pop()
    while len(a) < dm:
        a.append(0)
    return a


def _is_irreducible(m, p) -> bool:
    """Trial division by every monic polynomial of degree <= deg(m)/2."""
    dm = len(m) - 1
    if dm < 1:
        return False
    for d in range(1, dm // 2 + 1):
        # enumerate monic polys of degree d over F_p
        for code in range(p ** d):
            divisor = []
            c = code
            for _ in range(d):
                divisor.append(c % p)
                c //= p
            divisor.append(1)
            # long division remainder check
            rem = _fp_poly_mod(m, divisor, p)
            if all(x == 0 for x in rem):
                return False
    return True


def default_modulus(p: int, e: int):
    """Smallest lexicographic monic irreducible of degree e over F_p.

    Lexicographic in the constant-first coefficient tuple (c0, ..., c_{e-1}, 1).
    """
    if e == 1:
        return (0, 1)
    for code in range(p ** e):
        coeffs = []
        c = code
        for _ in range(e):
            coeffs.append(c % p)
            c //= p
        m = coeffs + [1]
        if _is_irreducible(m, p):
            return tuple(m)
    raise FieldError(f"no irreducible of degree {e} over F_{p}")


class FieldSpec:
    """The field F_q with q = p^e, given by an irreducible modulus over F_p.

    Elements are ints in range(q).  The int n encodes the polynomial
    sum(digit_i * x^i) where n = sum(digit_i * p^i).
    """

    def __init__(self, p: int, e: int = 1, modulus=None):
        if not is_prime(p):
            raise FieldError(f"characteristic {p} is not prime")
        if e < 1:
            raise FieldError("extension degree must be >= 1")
        if modulus is None:
            modulus = default_modulus(p, e)
        modulus = tuple(x % p for x in modulus[:-1]) + (modulus[-1],)
        if len(modulus) != e + 1 or modulus[-1] != 1:
            raise FieldError("modulus must be monic of degree e")
        if e > 1 and not _is_irreducible(list(modulus), p):
            raise FieldError("modulus is reducible")
        self.p = p
        self.e = e
        self.q = p ** e
        self.modulus = modulus
        self._build_tables()

    def _build_tables(self):
        p, e, q = self.p, self.e, self.q
        if e == 1:
            self._mul = [[(a * b) % p for b in range(p)] for a in range(p)]
            self._add = [[(a + b) % p for b in range(p)] for a in range(p)]
            self._neg = [(-a) % p for a in range(p)]
        else:
            digits = lambda n: [(n // p ** i) % p for i in range(e)]
            undig = lambda ds: sum(d * p ** i for i, d in enumerate(ds))
            m = list(self.modulus)
            self._add = [
                [undig([(x + y) % p for x, y in zip(digits(a), digits(b))])
                 for b in range(q)]
                for a in range(q)
            ]
            self._neg = [undig([(-x) % p for x in digits(a)]) for a in range(q)]
            self._mul = []
            for a in range(q):
                row = []
                for b in range(q):
                    prod = _fp_poly_mul(digits(a), digits(b), p)
                    row.append(undig(_fp_poly_mod(prod, m, p)))
                self._mul.append(row)
        self._inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if self._mul[a][b] == 1:
                    self._inv[a] = b
                    break

    # -- element ops ------------------------------------------------------
    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in F_q")
        return self._inv[a]

    def div(self, a: int, b: int) -> int:
        return self._mul[a][self.inv(b)]

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            return self.pow(self.inv(a), -n)
        out = 1
        base = a
        while n:
            if n & 1:
                out = self._mul[out][base]
            base = self._mul[base][base]
            n >>= 1
        return out

    def elements(self):
        return range(self.q)

    def generator_label(self) -> str:
        return "g"

    # -- misc -------------------------------------------------------------
    def __eq__(self, other):
        return (
            isinstance(other, FieldSpec)
            and self.p == other.p
            and self.e == other.e
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))

    def __repr__(self):
        if self.e == 1:
            return f"F_{self.q}"
        return f"F_{self.q}(p={self.p}, modulus={self.modulus})"


@lru_cache(maxsize=None)
def field_for_q(q: int) -> FieldSpec:
    """F_q with the built-in default modulus (searched lexicographically)."""
    for p in range(2, q + 1):
        if is_prime(p):
            e = 0
            n = q
            while n % p == 0:
                n //= p
                e += 1
            if n == 1:
                return FieldSpec(p, e)
            if q % p == 0:
                break
    raise FieldError(f"{q} is not a prime power")
