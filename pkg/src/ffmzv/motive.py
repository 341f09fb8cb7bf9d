"""The rank-r Frobenius module attached to a composition (s_1,...,s_r)
and its reduction to a d-dimensional t-module.

The module M' has a basis m_1,...,m_r on which σ acts through the lower
bidiagonal matrix with (t-θ)^{w_ℓ} on the diagonal and twisted versions
of the attached polynomials Q_ℓ on the subdiagonal, where
w_ℓ = s_ℓ + ... + s_r.  Over the σ-skew ring it is free of rank
d = w_1 + ... + w_r with basis

    ν_{(ℓ,j)} = (t-θ)^j m_ℓ,   j = w_ℓ-1, ..., 1, 0  (per block ℓ),

rows numbered top-down inside each block (highest power of (t-θ) first).

Everything the library needs — the t-action matrix ρ_t and the
distinguished integral points — comes out of one worklist reduction:
repeatedly split a coefficient f of m_ℓ as f = g·(t-θ)^{w_ℓ} + γ and
trade the g-part for terms one σ-level up via

    f·m_ℓ  =  σ g^{(1)} m_ℓ
             + Σ_{i=1}^{ℓ-1} (-1)^i σ g^{(1)} Q_{ℓ-1}···Q_{ℓ-i} m_{ℓ-i}
             + γ·m_ℓ,

until every coefficient has t-degree < w_ℓ and drops into the σ-basis.
A term finishing at σ-level n with (t-θ)-expansion coefficient a_j
contributes a_j·τ^n at its row when collecting the operator, and plainly
a_j when collecting a point (the σ-level cancels against the q^n-th
power in the quotient map, so points never see it).
"""
from __future__ import annotations

from .carlitz import cache_for, theta_major
from .fields import FieldSpec
from .poly import BiPoly, Poly, RatFrac

_BUDGET = 10 ** 6


class ReductionBudgetError(RuntimeError):
    """The worklist exceeded its step budget (should never happen)."""


class Motive:
    """M' for a composition s, with attached polynomials Q_ℓ.

    By default Q_ℓ is the canonical degree-(s_ℓ - 1) polynomial H_{s_ℓ-1}
    (the multizeta case).  A polylogarithm instance passes its own
    constants-in-t tuple via `Q`, possibly with rational coefficients.
    """

    def __init__(self, field: FieldSpec, s, Q=None, rational: bool = False):
        s = tuple(int(x) for x in s)
        if not s or any(x < 1 for x in s):
            raise ValueError("composition entries must be positive integers")
        self.field = field
        self.s = s
        self.r = len(s)
        self.rational = rational
        if Q is None:
            cache = cache_for(field)
            Q = [cache.anderson_thakur(si - 1) for si in s]
            if rational:
                raise ValueError("canonical Q is integral; rational=False")
        else:
            Q = list(Q)
            if len(Q) != self.r:
                raise ValueError("need one attached polynomial per entry")
        self.Q = Q
        # suffix weights: weights[ℓ-1] = s_ℓ + ... + s_r
        self.weights = [sum(s[i:]) for i in range(self.r)]
        self.d = sum(self.weights)
        self._offsets = [sum(self.weights[:i]) for i in range(self.r)]

    # -- indexing ----------------------------------------------------------
    def row(self, ell: int, j: int) -> int:
        """Row of ν_{(ℓ,j)} = (t-θ)^j m_ℓ (ℓ is 1-based, 0 <= j < w_ℓ)."""
        w = self.weights[ell - 1]
        if not 0 <= j < w:
            raise IndexError("power out of range for block")
        return self._offsets[ell - 1] + (w - 1 - j)

    # -- the reduction worklist -------------------------------------------
    def reduce(self, seeds):
        """Drive terms (n, f, ℓ) to the σ-basis.

        Returns finished contributions as a list of (n, coeff, row)
        triples with coeff in the coefficient ring of the motive.
        """
        pending = {}

        def push(n, f, ell):
            key = (n, ell)
            if key in pending:
                pending[key] = pending[key] + f
            else:
                pending[key] = f

        for n, f, ell in seeds:
            push(n, f, ell)

        finished = []
        budget = _BUDGET
        while pending:
            budget -= 1
            if budget < 0:
                raise ReductionBudgetError("reduction exceeded step budget")
            # largest (ℓ, deg_t) first, so merged terms split only once
            key = max(pending, key=lambda k: (k[1], pending[k].deg_t))
            n, ell = key
            f = pending.pop(key)
            if f.is_zero():
                continue
            w = self.weights[ell - 1]
            if f.deg_t < w:
                for j, a in enumerate(f.expand_tm_theta()):
                    if not a.is_zero():
                        finished.append((n, a, self.row(ell, j)))
                continue
            g, gamma = f.divrem_tm_theta(w)
            if not gamma.is_zero():
                push(n, gamma, ell)
            for tn, tf, tl in self.telescope_expand(g, ell):
                push(n + tn, tf, tl)
        return finished

    def telescope_expand(self, g, ell: int):
        """One telescoping step: the terms replacing g·(t-θ)^{w_ℓ}·m_ℓ,
        all at σ-level 1 relative to the input and with no inverse
        twists: (1, g^{(1)}, ℓ) plus alternating-sign products of the
        attached polynomials walking down to block 1."""
        g1 = g.twist(1)
        out = [(1, g1, ell)]
        prod = g1
        for i in range(1, ell):
            prod = prod * self._as_bipoly(self.Q[ell - 1 - i])
            out.append((1, prod.scale(-1) if i % 2 else prod, ell - i))
        return out

    # -- collectors --------------------------------------------------------
    def reduce_point(self, seeds):
        """Coordinates in the σ-basis, σ-levels discarded."""
        zero = (
            RatFrac.zero(self.field) if self.rational else Poly.zero(self.field)
        )
        coords = [zero] * self.d
        for _n, a, row in self.reduce(seeds):
            coords[row] = coords[row] + a
        return coords

    def rho_t_entries(self):
        """The t-action as a dict (row, col) -> {σ-level: coefficient}."""
        entries = {}
        for ell in range(1, self.r + 1):
            w = self.weights[ell - 1]
            t_bipoly = BiPoly(
                self.field,
                (self._czero(), self._cone()),
                self.rational,
            )
            for j in range(w):
                col = self.row(ell, j)
                f = t_bipoly * _tm_theta_power(self.field, j, self.rational)
                for n, a, row in self.reduce([(0, f, ell)]):
                    slot = entries.setdefault((row, col), {})
                    slot[n] = slot[n] + a if n in slot else a
        return {
            rc: {n: a for n, a in slot.items() if not a.is_zero()}
            for rc, slot in entries.items()
        }

    def _czero(self):
        return RatFrac.zero(self.field) if self.rational else Poly.zero(self.field)

    def _cone(self):
        return RatFrac.one(self.field) if self.rational else Poly.one(self.field)

    # -- distinguished points ---------------------------------------------
    def point_v_seeds(self):
        """Seeds for the twisted top-block generator Q_r^{(-1)}(t-θ)^{s_r}m_r.

        Pre-telescoped by hand: the (t-θ)^{s_r} factor is exactly the
        diagonal entry of block r, so the seeds sit at σ-level 1.
        """
        seeds = [(1, self._as_bipoly(self.Q[-1]), self.r)]
        prod = self._as_bipoly(self.Q[-1])
        for i in range(1, self.r):
            prod = prod * self._as_bipoly(self.Q[self.r - 1 - i])
            seeds.append((1, prod.scale(-1) if i % 2 else prod, self.r - i))
        return seeds

    def point_u_seeds(self):
        """Seeds for H_{w-1}^{(-1)}(t-θ)^w m_1 (the depth-collapsed point)."""
        cache = cache_for(self.field)
        h = cache.anderson_thakur(self.weights[0] - 1)
        if self.rational:
            h = BiPoly(
                self.field,
                [RatFrac.from_poly(c) for c in h.coeffs],
                True,
            )
        return [(1, h, 1)]

    def special_point_v(self):
        return self.reduce_point(self.point_v_seeds())

    def special_point_u(self):
        return self.reduce_point(self.point_u_seeds())

    def _as_bipoly(self, qpoly) -> BiPoly:
        if isinstance(qpoly, BiPoly):
            if qpoly.rational == self.rational:
                return qpoly
            if self.rational and not qpoly.rational:
                return BiPoly(
                    self.field,
                    [RatFrac.from_poly(c) for c in qpoly.coeffs],
                    True,
                )
            raise ValueError("rational attached polynomial in integral motive")
        raise TypeError("attached polynomial must be a BiPoly")


def _tm_theta_power(field, j, rational):
    return BiPoly.t_minus_theta(field, rational) ** j


def sigma_basis(motive: Motive):
    """The ordered index pairs (ℓ, j) of ν_{(ℓ,j)} = (t-θ)^j m_ℓ,
    descending j within each block.  Position i in this list is row i."""
    out = []
    for ell in range(1, motive.r + 1):
        for j in range(motive.weights[ell - 1] - 1, -1, -1):
            out.append((ell, j))
    return out


def build_phi_prime(motive: Motive):
    """Φ' as an r×r matrix over the coefficient ring, with the
    subdiagonal stored UNTWISTED: entry (ℓ, ℓ-1) holds
    Q_{ℓ-1}·(t-θ)^{w_{ℓ-1}} and the mathematical entry is its inverse
    twist.  The engine never materializes the twist; this matrix exists
    for inspection and tests."""
    r = motive.r
    out = [[BiPoly.zero(motive.field, motive.rational) for _ in range(r)]
           for _ in range(r)]
    for ell in range(1, r + 1):
        out[ell - 1][ell - 1] = _tm_theta_power(
            motive.field, motive.weights[ell - 1], motive.rational
        )
        if ell > 1:
            out[ell - 1][ell - 2] = motive._as_bipoly(
                motive.Q[ell - 2]
            ) * _tm_theta_power(
                motive.field, motive.weights[ell - 2], motive.rational
            )
    return out


def build_phi(motive: Motive):
    """The full (r+1)×(r+1) matrix: Φ' extended by the unit-object row
    (…, Q_r·(t-θ)^{s_r}, 1), same untwisted storage convention."""
    r = motive.r
    phi_p = build_phi_prime(motive)
    zero = BiPoly.zero(motive.field, motive.rational)
    out = [row + [zero] for row in phi_p]
    last = [zero] * (r + 1)
    last[r - 1] = motive._as_bipoly(motive.Q[r - 1]) * _tm_theta_power(
        motive.field, motive.weights[r - 1], motive.rational
    )
    last[r] = BiPoly.one(motive.field, motive.rational)
    out.append(last)
    return out
