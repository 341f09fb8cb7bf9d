"""t-module operators: applying ρ_a to points, exactly or through a
modular probe.

An operator entry is a τ-polynomial Σ c_n τ^n acting on a coordinate x
by Σ c_n · x^{q^n}.  Points live in a pluggable coefficient domain:

* `ExactDomain` — coordinates in A = F_q[θ] (or F_q(θ)); fully rigorous
  both ways, but repeated τ's raise degrees q-fold, so a non-torsion
  point blows up quickly under a large annihilator.
* `ProbeDomain` — the image of A under θ ↦ ξ for ξ a root of an
  irreducible of chosen degree over F_p (prime q only).  The map is a
  ring homomorphism commuting with x ↦ x^q, so a NONZERO probe result
  rigorously certifies the exact result nonzero.  A zero probe proves
  nothing and must be confirmed exactly.

Annihilators are kept factored; factors are applied smallest degree
first with an early exit as soon as the point dies.
"""
from __future__ import annotations

import random

from .carlitz import cache_for, theta_major
from .fields import FieldSpec, is_prime
from .poly import Poly, RatFrac


# ---------------------------------------------------------------------------
# coefficient domains


class ExactDomain:
    """Coordinates as polynomials (or fractions) in θ."""

    def __init__(self, field: FieldSpec, rational: bool = False):
        self.field = field
        self.rational = rational

    def zero(self):
        return RatFrac.zero(self.field) if self.rational else Poly.zero(self.field)

    def is_zero(self, x):
        return x.is_zero()

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def frob(self, x, n):
        return x.twist(n)

    def convert(self, c):
        if self.rational and isinstance(c, Poly):
            return RatFrac.from_poly(c)
        return c

    def convert_point(self, vec):
        return [self.convert(x) for x in vec]


def _fp_mul_mod(a, b, red, p, deg):
    """Product of two degree-<deg F_p[x] tuples, reduced by the table
    red[j] = x^{deg+j} mod m."""
    n = len(a) + len(b) - 1
    prod = [0] * n
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    prod[i + j] = (prod[i + j] + ai * bj) % p
    for j in range(n - 1, deg - 1, -1):
        c = prod[j]
        if c:
            row = red[j - deg]
            for k in range(deg):
                prod[k] = (prod[k] + c * row[k]) % p
        prod[j] = 0
    return tuple(prod[:deg])


def _find_irreducible(p: int, deg: int, rng) -> tuple:
    """Random monic irreducible of degree `deg` over F_p, certified by
    x^{p^deg} = x and gcd(x^{p^{deg/r}} - x, m) = 1 for primes r | deg."""

    def mulmod(a, b, m):
        n = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        n[i + j] = (n[i + j] + ai * bj) % p
        return _polymod(n, m)

    def _polymod(a, m):
        a = list(a)
        dm = len(m) - 1
        for i in range(len(a) - 1, dm - 1, -1):
            c = a[i]
            if c:
                for j in range(dm + 1):
                    a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
        return a[:dm]

    def xpow_pk(k, m):
        # x^(p^k) mod m by repeated p-th powering
        cur = ([0, 1] + [0] * (len(m) - 3))[: len(m) - 1]
        for _ in range(k):
            acc = [1]
            base = cur
            e = p
            while e:
                if e & 1:
                    acc = mulmod(acc, base, m)
                base = mulmod(base, base, m)
                e >>= 1
            cur = acc + [0] * (len(m) - 1 - len(acc))
        return cur

    def polygcd(a, b):
        a, b = list(a), list(b)
        strip = lambda v: v[: max((i + 1 for i, c in enumerate(v) if c), default=0)]
        a, b = strip(a), strip(b)
        while b:
            # a mod b
            dm = len(b) - 1
            inv = pow(b[-1], p - 2, p)
            a = list(a)
            for i in range(len(a) - 1, dm - 1, -1):
                c = (a[i] * inv) % p
                if c:
                    for j in range(dm + 1):
                        a[i - dm + j] = (a[i - dm + j] - c * b[j]) % p
            a = strip(a)
            a, b = b, a
        return a

    prime_divs = [r for r in range(2, deg + 1) if deg % r == 0 and is_prime(r)]
    while True:
        m = [rng.randrange(p) for _ in range(deg)] + [1]
        if m[0] == 0:
            continue
        xq = xpow_pk(deg, m)
        # x^(p^deg) - x must vanish mod m
        diff = list(xq)
        diff[1] = (diff[1] - 1) % p
        if any(diff):
            continue
        ok = True
        for r in prime_divs:
            xk = xpow_pk(deg // r, m)
            d2 = list(xk)
            d2[1] = (d2[1] - 1) % p
            g = polygcd(d2, m)
            if len(g) != 1:
                ok = False
                break
        if ok:
            return tuple(m)


class ProbeDomain:
    """A → F_{p^deg} via θ ↦ ξ (prime q only).  Elements are coefficient
    tuples of length deg."""

    def __init__(self, field: FieldSpec, deg: int = 21, seed: int = 0):
        if field.e != 1:
            raise ValueError("modular probe supports prime q only")
        self.field = field
        self.p = field.p
        self.deg = deg
        rng = random.Random(seed)
        self.modulus = _find_irreducible(self.p, deg, rng)
        # reduction table: x^(deg+j) mod m for j = 0..deg-2
        red = []
        cur = tuple((-c) % self.p for c in self.modulus[:-1])  # x^deg
        red.append(cur)
        for _ in range(deg - 2):
            shifted = (0,) + cur[:-1]
            over = cur[-1]
            nxt = list(shifted)
            if over:
                for k in range(deg):
                    nxt[k] = (nxt[k] + over * red[0][k]) % self.p
            cur = tuple(nxt)
            red.append(cur)
        self._red = red
        self._zero = (0,) * deg
        self._frob_cache = {}

    def zero(self):
        return self._zero

    def is_zero(self, x):
        return not any(x)

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def mul(self, a, b):
        return _fp_mul_mod(a, b, self._red, self.p, self.deg)

    def pow_int(self, a, e):
        acc = (1,) + (0,) * (self.deg - 1)
        base = a
        while e:
            if e & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            e >>= 1
        return acc

    def frob(self, x, n):
        return self.pow_int(x, self.p ** n) if n else x

    def convert(self, c):
        """Image of a Poly (or integral RatFrac) in θ."""
        if isinstance(c, RatFrac):
            num = self.convert(c.num)
            den = self.convert(c.den)
            return self.mul(num, self.pow_int(den, self.p ** self.deg - 2))
        xi = ((0, 1) + (0,) * (self.deg - 2))[: self.deg]
        acc = self._zero
        one = (1,) + (0,) * (self.deg - 1)
        for coeff in reversed(c.coeffs):
            acc = self.mul(acc, xi)
            if coeff:
                acc = self.add(acc, tuple((coeff if i == 0 else 0) for i in range(self.deg)))
        return acc

    def convert_point(self, vec):
        return [self.convert(x) for x in vec]


# ---------------------------------------------------------------------------
# the skew ring k[τ] with τ·α = α^q·τ


class TwistedPoly:
    """Sparse τ-polynomial Σ c_n τ^n with coefficients in A (or k)."""

    __slots__ = ("field", "terms")

    def __init__(self, field: FieldSpec, terms=()):
        if isinstance(terms, dict):
            terms = terms.items()
        clean = {}
        for n, c in terms:
            if c.is_zero():
                continue
            clean[n] = clean[n] + c if n in clean else c
        self.field = field
        self.terms = {n: c for n, c in clean.items() if not c.is_zero()}

    @classmethod
    def from_coeff(cls, c, n=0):
        return cls(c.field, [(n, c)])

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, TwistedPoly)
            and self.field == other.field
            and self.terms == other.terms
        )

    def __add__(self, other):
        return TwistedPoly(
            self.field, list(self.terms.items()) + list(other.terms.items())
        )

    def __neg__(self):
        return TwistedPoly(self.field, [(n, -c) for n, c in self.terms.items()])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        """Ore product: (c·τⁿ)(c'·τᵐ) = c·c'^{qⁿ}·τ^{n+m}."""
        out = []
        for n, c in self.terms.items():
            for m, cp in other.terms.items():
                out.append((n + m, c * cp.twist(n)))
        return TwistedPoly(self.field, out)

    def apply(self, x):
        """Action on a coordinate: Σ c_n · x^{qⁿ}."""
        acc = None
        for n, c in self.terms.items():
            term = c * x.twist(n)
            acc = term if acc is None else acc + term
        if acc is None:
            return Poly.zero(self.field)
        return acc

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for n in sorted(self.terms):
            cs = str(self.terms[n])
            if n == 0:
                parts.append(cs)
                continue
            tau = "τ" if n == 1 else f"τ^{n}"
            if cs == "1":
                parts.append(tau)
            elif "+" in cs or "/" in cs:
                parts.append(f"({cs}){tau}")
            else:
                parts.append(f"{cs}{tau}")
        return " + ".join(parts)

    def __repr__(self):
        return f"TwistedPoly({self!s})"


def ore_mul(f: TwistedPoly, g: TwistedPoly) -> TwistedPoly:
    return f * g


# ---------------------------------------------------------------------------
# the operator itself


class TModule:
    """ρ_t for a d-dimensional t-module, as sparse τ-polynomial entries."""

    def __init__(self, field: FieldSpec, d: int, entries, rational=False):
        self.field = field
        self.d = d
        self.rational = rational
        # rows[i] = list of (col, [(n, coeff), ...])
        rows = [[] for _ in range(d)]
        for (i, j), slot in entries.items():
            rows[i].append((j, sorted(slot.items())))
        self.rows = [sorted(r) for r in rows]

    @classmethod
    def from_motive(cls, motive):
        return cls(
            motive.field, motive.d, motive.rho_t_entries(), motive.rational
        )

    def exact_domain(self):
        return ExactDomain(self.field, self.rational)

    def converted_rows(self, dom):
        cache = getattr(self, "_rows_cache", None)
        if cache is None:
            cache = self._rows_cache = {}
        hit = cache.get(id(dom))
        if hit is not None:
            return hit[1]
        rows = [
            [(j, [(n, dom.convert(c)) for n, c in terms]) for j, terms in row]
            for row in self.rows
        ]
        cache[id(dom)] = (dom, rows)  # keep dom alive so its id stays unique
        return rows

    def apply_t(self, vec, dom=None, rows=None):
        """One application of ρ_t."""
        if dom is None:
            dom = self.exact_domain()
        if rows is None:
            rows = self.converted_rows(dom)
        out = []
        for row in rows:
            acc = dom.zero()
            for j, terms in row:
                x = vec[j]
                if dom.is_zero(x):
                    continue
                for n, c in terms:
                    acc = dom.add(acc, dom.mul(c, dom.frob(x, n)))
            out.append(acc)
        return out

    def apply_poly(self, vec, a: Poly, dom=None):
        """ρ_a(vec) for a in F_q[t], by Horner in ρ_t."""
        if dom is None:
            dom = self.exact_domain()
        rows = self.converted_rows(dom)
        acc = [dom.zero()] * self.d

        def add_scaled(target, src, c):
            if c == 0:
                return target
            if c == 1:
                return [dom.add(t_, s) for t_, s in zip(target, src)]
            cs = _scalar_in_dom(dom, c)
            return [
                dom.add(t_, dom.mul(cs, s)) for t_, s in zip(target, src)
            ]

        for c in reversed(a.coeffs if a.coeffs else (0,)):
            acc = self.apply_t(acc, dom, rows)
            acc = add_scaled(acc, vec, c)
        return acc

    def apply_frobdiff_factor(self, vec, h: int, ell: int, dom=None):
        """(t^{q^h} - t)^{p^ℓ} applied as p^ℓ rounds of ρ_t^{q^h} - ρ_t,
        with an early exit once the point vanishes."""
        if dom is None:
            dom = self.exact_domain()
        rows = self.converted_rows(dom)
        q = self.field.q
        cur = vec
        for _ in range(self.field.p ** ell):
            if all(dom.is_zero(x) for x in cur):
                return cur
            w1 = self.apply_t(cur, dom, rows)
            wq = w1
            for _ in range(q ** h - 1):
                wq = self.apply_t(wq, dom, rows)
            cur = [
                dom.add(a, _dom_negate(dom, b)) for a, b in zip(wq, w1)
            ]
        return cur

    def apply_annihilator(self, vec, factors, dom=None):
        """Apply a factored annihilator, cheapest factors first.

        Each factor is ('frobdiff', h, pl) meaning (t^{q^h}-t)^{p^ℓ},
        or ('poly', f) with f in F_q[t].
        """
        if dom is None:
            dom = self.exact_domain()

        def cost(fac):
            if fac[0] == "frobdiff":
                return self.field.q ** fac[1] * (self.field.p ** fac[2])
            return max(fac[1].degree, 0)

        cur = dom.convert_point(vec)
        for fac in sorted(factors, key=cost):
            if all(dom.is_zero(x) for x in cur):
                break
            if fac[0] == "frobdiff":
                cur = self.apply_frobdiff_factor(cur, fac[1], fac[2], dom)
            else:
                cur = self.apply_poly(cur, fac[1], dom)
        return cur

    def is_zero_point(self, vec, dom=None):
        if dom is None:
            dom = self.exact_domain()
        return all(dom.is_zero(x) for x in vec)

    def entry(self, i: int, j: int) -> TwistedPoly:
        for col, terms in self.rows[i]:
            if col == j:
                return TwistedPoly(self.field, terms)
        return TwistedPoly(self.field, ())

    # -- diagnostics -------------------------------------------------------
    def tau0_matrix(self):
        """The τ-free part of ρ_t as a dense matrix of coefficients."""
        z = RatFrac.zero(self.field) if self.rational else Poly.zero(self.field)
        m = [[z for _ in range(self.d)] for _ in range(self.d)]
        for i, row in enumerate(self.rows):
            for j, terms in row:
                for n, c in terms:
                    if n == 0:
                        m[i][j] = c
        return m

    def nilpotent_check(self) -> bool:
        return self.nilpotency_index() is not None

    def nilpotency_index(self):
        """Smallest k >= 1 with (ρ_t|_{τ=0} - θI)^k = 0, or None if not
        nilpotent within d steps."""
        th = Poly.gen(self.field)
        if self.rational:
            th = RatFrac.from_poly(th)
        m = self.tau0_matrix()
        n = [
            [m[i][j] - th if i == j else m[i][j] for j in range(self.d)]
            for i in range(self.d)
        ]
        cur = n
        for k in range(1, self.d + 2):
            if all(x.is_zero() for row in cur for x in row):
                return k
            cur = [
                [
                    _poly_dot(cur[i], [n[t][j] for t in range(self.d)])
                    for j in range(self.d)
                ]
                for i in range(self.d)
            ]
        return None

    def render(self):
        """Text layout of ρ_t with aligned columns (θ/τ notation)."""
        cells = []
        for i in range(self.d):
            row_entries = dict(self.rows[i])
            row = []
            for j in range(self.d):
                terms = row_entries.get(j)
                if not terms:
                    row.append("0")
                    continue
                parts = []
                for n, c in terms:
                    cs = str(c)
                    if n == 0:
                        parts.append(cs)
                        continue
                    tau = "τ" if n == 1 else f"τ^{n}"
                    if cs == "1":
                        parts.append(tau)
                    elif "+" in cs or "/" in cs:
                        parts.append(f"({cs}){tau}")
                    else:
                        parts.append(f"{cs}{tau}")
                row.append(" + ".join(parts))
            cells.append(row)
        widths = [max(len(r[j]) for r in cells) for j in range(self.d)]
        return "\n".join(
            "  ".join(x.rjust(w) for x, w in zip(r, widths)) for r in cells
        )


def _scalar_in_dom(dom, c):
    if isinstance(dom, ExactDomain):
        base = Poly.const(dom.field, c)
        return dom.convert(base)
    return tuple((c % dom.p if i == 0 else 0) for i in range(dom.deg))


def _dom_negate(dom, x):
    if isinstance(dom, ExactDomain):
        return -x
    p = dom.p
    return tuple((-c) % p for c in x)


def _poly_dot(row, col):
    acc = None
    for a, b in zip(row, col):
        term = a * b
        acc = term if acc is None else acc + term
    return acc


# ---------------------------------------------------------------------------
# the n-th tensor power of the Carlitz module, built directly


def carlitz_tensor_module(field: FieldSpec, n: int) -> TModule:
    """[t]_n = θ·I + N + E·τ with 1's on the superdiagonal and a single
    τ in the bottom-left corner.  Assembled without the reduction
    engine, so it can serve as an independent cross-check for depth one.
    """
    th = Poly.gen(field)
    one = Poly.one(field)
    entries = {}
    for i in range(n):
        entries[(i, i)] = {0: th}
        if i + 1 < n:
            entries[(i, i + 1)] = {0: one}
    slot = entries.setdefault((n - 1, 0), {})
    slot[1] = slot.get(1, Poly.zero(field)) + one
    return TModule(field, n, entries)


def depth1_special_point(field: FieldSpec, n: int):
    """The classical depth-one special point: write the canonical
    degree-(n-1) polynomial as Σ h_i(t) θ^i and push each basis vector
    (0,...,0,θ^i) through h_i under the [t]_n action."""
    cache = cache_for(field)
    h = cache.anderson_thakur(n - 1)
    tm = carlitz_tensor_module(field, n)
    dom = tm.exact_domain()
    total = [dom.zero()] * n
    for i, hi in enumerate(theta_major(h)):
        if hi.is_zero():
            continue
        vec = [Poly.zero(field)] * (n - 1) + [Poly.monomial(field, 1, i)]
        img = tm.apply_poly(vec, hi, dom)
        total = [a + b for a, b in zip(total, img)]
    return total
