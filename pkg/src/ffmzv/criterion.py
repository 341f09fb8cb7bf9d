"""Decision procedures for special-value relations.

Given a composition s = (s_1, ..., s_r), the associated t-module carries
two distinguished integral points; the value attached to s satisfies a
rational relation with the period exactly when the point v is
F_q[t]-torsion.  When every s_i is divisible by q-1 an explicit
annihilator candidate a(t) exists, built from the decompositions

    w_i = p^ℓ · n · (q^h - 1),   p ∤ n,  h maximal,

of the suffix weights w_i = s_{r-i} + ... + s_r together with a
depth-one factor (Γ_{s_r+1}/Γ_{s_r})·denBC(s_r) with θ replaced by t,
and the value is Eulerian if and only if ρ_a(v) = 0.  The polylogarithm
variant swaps the attached polynomials for the evaluation point, adds
the factor for w_0 = s_r and drops the depth-one factor.

When the total weight is NOT divisible by q-1 the question becomes
whether some nonzero pair (a, b) satisfies ρ_a(v) + ρ_b(u) = 0; that is
a semi-decision, searched by F_q-linear algebra up to a degree bound.

Non-torsion verdicts may be certified through a fast modular image of A
(a ring homomorphism cannot send a nonzero residual to nonzero by
accident); torsion verdicts are always confirmed in exact arithmetic.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field as dc_field
from typing import Optional

from .carlitz import cache_for
from .fields import FieldSpec
from .linalg import nullspace
from .motive import Motive
from .poly import BiPoly, Poly, RatFrac
from .tmodule import ProbeDomain, TModule

PROBE_DEGREE = 21


@dataclass(frozen=True)
class WeightDecomp:
    """w = p^ℓ · n · (q^h - 1) with p ∤ n and h maximal."""

    w: int
    h: int
    ell: int
    n: int


def decompose_weight(q: int, w: int) -> WeightDecomp:
    """Decompose w with h the greatest integer such that (q^h - 1) | w.

    Requires (q-1) | w; every caller in the divisible-weights pipeline
    guarantees this.
    """
    if w < 1:
        raise ValueError("weight must be positive")
    if w % (q - 1) != 0:
        raise ValueError(f"(q-1) = {q - 1} does not divide weight {w}")
    p = _char(q)
    ell = 0
    m = w
    while m % p == 0:
        m //= p
        ell += 1
    h = 1
    cand = 2
    while q ** cand - 1 <= w:
        if w % (q ** cand - 1) == 0:
            h = cand
        cand += 1
    n = m // (q ** h - 1)
    assert w == p ** ell * n * (q ** h - 1) and n % p != 0
    return WeightDecomp(w, h, ell, n)


def _char(q: int) -> int:
    p = 2
    while q % p != 0:
        p += 1
    return p


@dataclass(frozen=True)
class AnnihilatorData:
    """A factored annihilator candidate: Frobenius-difference factors
    (t^{q^h} - t)^{p^ℓ} plus an optional plain polynomial factor."""

    q: int
    factors: tuple  # entries ("frobdiff", h, ell) or ("poly", Poly)
    skipped: tuple = ()  # suffix weights with no valid decomposition

    @property
    def degree(self) -> int:
        p = _char(self.q)
        out = 0
        for fac in self.factors:
            if fac[0] == "frobdiff":
                out += self.q ** fac[1] * p ** fac[2]
            else:
                out += max(fac[1].degree, 0)
        return out

    def expanded(self, field: FieldSpec) -> Poly:
        """The product as a single polynomial in F_q[t]."""
        out = Poly.one(field, var="t")
        for fac in self.factors:
            if fac[0] == "frobdiff":
                _, h, ell = fac
                qh = field.q ** h
                base = Poly(
                    field,
                    [0, field.neg(1)] + [0] * (qh - 2) + [1],
                    var="t",
                )
                out = out * base ** (field.p ** ell)
            else:
                out = out * fac[1]
        return out


def annihilator_mzv(field: FieldSpec, s, strict: bool = True) -> AnnihilatorData:
    """Annihilator candidate for the multizeta point of s.

    One Frobenius-difference factor per suffix weight
    w_i = s_{r-i} + ... + s_r (i = 1..r-1), times the depth-one factor
    (Γ_{s_r+1}/Γ_{s_r})·denBC(s_r) with θ replaced by t.  With
    strict=False, entries not divisible by q-1 are tolerated and suffix
    weights with no valid decomposition are skipped (the product is
    still a nonzero annihilator *candidate*; a zero result remains a
    proof of torsion).
    """
    s = tuple(s)
    q = field.q
    bad = [x for x in s if x % (q - 1) != 0]
    if bad and strict:
        raise ValueError(f"entries {bad} not divisible by q-1 = {q - 1}")
    factors = []
    skipped = []
    r = len(s)
    for i in range(1, r):
        w_i = sum(s[r - 1 - i:])
        try:
            dec = decompose_weight(q, w_i)
        except ValueError:
            if strict:
                raise
            skipped.append(w_i)
            continue
        factors.append(("frobdiff", dec.h, dec.ell))
    cache = cache_for(field)
    depth_one = cache.gamma_ratio(s[-1]) * cache.bc_denominator(s[-1])
    factors.append(("poly", depth_one.with_var("t")))
    return AnnihilatorData(q, tuple(factors), tuple(skipped))


def annihilator_cmpl(field: FieldSpec, s) -> AnnihilatorData:
    """Annihilator for the polylogarithm point: factors for
    w_0 = s_r through w_{r-1}, no depth-one polynomial factor."""
    s = tuple(s)
    q = field.q
    bad = [x for x in s if x % (q - 1) != 0]
    if bad:
        raise ValueError(f"entries {bad} not divisible by q-1 = {q - 1}")
    factors = []
    r = len(s)
    for i in range(r):
        w_i = sum(s[r - 1 - i:]) if i else s[-1]
        dec = decompose_weight(q, w_i)
        factors.append(("frobdiff", dec.h, dec.ell))
    return AnnihilatorData(q, tuple(factors))


@dataclass
class Verdict:
    q: int
    s: tuple
    weight: int
    depth: int
    reduced: tuple
    eulerian: bool
    precheck: Optional[str]
    annihilator_degree: int
    residual_zero: bool
    elapsed_ms: int
    modulus: Optional[tuple] = None
    conditional: Optional[bool] = None

    def to_json(self) -> dict:
        out = {
            "q": self.q,
            "modulus": list(self.modulus) if self.modulus else None,
            "tuple": list(self.s),
            "weight": self.weight,
            "depth": self.depth,
            "eulerian": self.eulerian,
            "precheck": self.precheck,
            "annihilator_degree": self.annihilator_degree,
            "elapsed_ms": self.elapsed_ms,
        }
        if self.conditional is not None:
            out["conditional"] = self.conditional
        return out


@dataclass
class ZetaLikeVerdict:
    q: int
    s: tuple
    weight: int
    depth: int
    bound: int
    outcome: str  # "zeta-like" | "none-up-to-bound" | "reduced-to-eulerian"
    witness_a: Optional[Poly]
    witness_b: Optional[Poly]
    dimension: int
    elapsed_ms: int
    modulus: Optional[tuple] = None
    delegate: Optional[Verdict] = dc_field(default=None, repr=False)

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "modulus": list(self.modulus) if self.modulus else None,
            "tuple": list(self.s),
            "weight": self.weight,
            "depth": self.depth,
            "eulerian": self.delegate.eulerian if self.delegate else None,
            "precheck": self.delegate.precheck if self.delegate else None,
            "annihilator_degree": (
                self.delegate.annihilator_degree if self.delegate else None
            ),
            "elapsed_ms": self.elapsed_ms,
            "outcome": self.outcome,
            "witness_a": str(self.witness_a) if self.witness_a else None,
            "witness_b": str(self.witness_b) if self.witness_b else None,
            "bound": self.bound,
        }


def _validate(s):
    s = tuple(int(x) for x in s)
    if not s or any(x < 1 for x in s):
        raise ValueError("composition entries must be positive integers")
    return s


def _modulus_of(field: FieldSpec):
    return field.modulus if field.e > 1 else None


def is_eulerian(
    field: FieldSpec,
    s,
    *,
    precheck: bool = True,
    primitive_reduction: bool = True,
    use_probe: bool = True,
    probe_degree: int = PROBE_DEGREE,
    probe_seed: int = 0,
) -> Verdict:
    """Decide whether the multizeta value of s is Eulerian.

    Non-torsion results may come from a modular probe (a ring
    homomorphism image of a nonzero vector that is nonzero certifies
    non-torsion); a torsion result is always recomputed exactly.
    """
    t0 = time.perf_counter()
    s = _validate(s)
    q = field.q
    weight = sum(s)
    depth = len(s)

    def done(reduced, eulerian, why, ann_deg, residual_zero):
        return Verdict(
            q=q,
            s=s,
            weight=weight,
            depth=depth,
            reduced=reduced,
            eulerian=eulerian,
            precheck=why,
            annihilator_degree=ann_deg,
            residual_zero=residual_zero,
            elapsed_ms=int(round((time.perf_counter() - t0) * 1000)),
            modulus=_modulus_of(field),
        )

    if precheck and q > 2:
        bad = [x for x in s if x % (q - 1) != 0]
        if bad:
            return done(
                s,
                False,
                f"entry {bad[0]} not divisible by q-1 = {q - 1}",
                0,
                False,
            )

    reduced = s
    if primitive_reduction:
        while all(x % field.p == 0 for x in reduced):
            reduced = tuple(x // field.p for x in reduced)

    ann = annihilator_mzv(field, reduced, strict=precheck)
    motive = Motive(field, reduced)
    tm = TModule.from_motive(motive)
    v = motive.special_point_v()

    eulerian = None
    if use_probe and field.e == 1:
        dom = ProbeDomain(field, probe_degree, probe_seed)
        out = tm.apply_annihilator(v, ann.factors, dom)
        if not tm.is_zero_point(out, dom):
            eulerian = False
    if eulerian is None:
        out = tm.apply_annihilator(v, ann.factors)
        eulerian = tm.is_zero_point(out)
    return done(reduced, eulerian, None, ann.degree, eulerian)


def is_cmpl_eulerian(field: FieldSpec, s, u) -> Verdict:
    """Decide whether the polylogarithm value at the rational point u
    is Eulerian.

    Every s_i must be divisible by q-1 and every u_i nonzero.  When
    some u_i has degree >= s_i·q/(q-1) the convergence/non-vanishing
    hypotheses behind the criterion are unverified and the verdict is
    flagged conditional.
    """
    t0 = time.perf_counter()
    s = _validate(s)
    q = field.q
    us = []
    for x in u:
        if isinstance(x, RatFrac):
            f = x
        elif isinstance(x, Poly):
            f = RatFrac.from_poly(x)
        else:
            f = RatFrac.from_poly(Poly(field, [int(x) % q]))
        if f.is_zero():
            raise ValueError("evaluation point has a zero coordinate")
        us.append(f)
    if len(us) != len(s):
        raise ValueError("need one coordinate per composition entry")

    conditional = any(
        (f.num.degree - f.den.degree) * (q - 1) >= si * q
        for f, si in zip(us, s)
    )
    ann = annihilator_cmpl(field, s)
    qs = [BiPoly(field, [f], rational=True) for f in us]
    motive = Motive(field, s, Q=qs, rational=True)
    tm = TModule.from_motive(motive)
    v = motive.special_point_v()
    out = tm.apply_annihilator(v, ann.factors)
    eulerian = tm.is_zero_point(out)
    return Verdict(
        q=q,
        s=s,
        weight=sum(s),
        depth=len(s),
        reduced=s,
        eulerian=eulerian,
        precheck=None,
        annihilator_degree=ann.degree,
        residual_zero=eulerian,
        elapsed_ms=int(round((time.perf_counter() - t0) * 1000)),
        modulus=_modulus_of(field),
        conditional=conditional,
    )


def default_zetalike_bound(q: int, weight: int) -> int:
    """Heuristic witness-degree bound q^(⌈log_q w⌉ + 1)."""
    e = 0
    while q ** e < weight:
        e += 1
    return q ** (e + 1)


def _point_iterates(motive: Motive, seeds, count: int):
    """[point, ρ_t(point), ..., ρ_{t^count}(point)], computed inside the
    Frobenius module (t-multiples of the seeds), which keeps θ-degrees
    polynomial instead of compounding Frobenius twists."""
    field = motive.field
    t = Poly(field, [0, 1], var="t")
    tpow = Poly.one(field, var="t")
    out = []
    for _ in range(count + 1):
        scaled = [(n, f.coeff_mul_t(tpow), ell) for n, f, ell in seeds]
        out.append(motive.reduce_point(scaled))
        tpow = tpow * t
    return out


def _flatten_rows(field: FieldSpec, groups):
    """One F_q-linear equation per (coordinate, θ-power) pair; column k
    is the k-th vector across all groups (concatenated)."""
    vectors = [v for g in groups for v in g]
    d = len(vectors[0])
    max_deg = max(
        (c.degree for v in vectors for c in v), default=-1
    )
    rows = []
    for i in range(d):
        for j in range(max_deg + 1):
            row = [v[i][j] for v in vectors]
            if any(row):
                rows.append(row)
    return rows, len(vectors)


def rho_a_point(motive: Motive, seeds, a: Poly):
    """ρ_a of the point with the given seeds, computed in the module."""
    scaled = [(n, f.coeff_mul_t(a.with_var("t")), ell) for n, f, ell in seeds]
    return motive.reduce_point(scaled)


def _probe_witness_rows(tm: TModule, dom: ProbeDomain, vec, bound: int):
    """F_q-linear system (one row per coordinate component) whose right
    kernel contains every a of degree <= bound with ρ_a(v) = 0, built
    from the iterate images ρ_{t^i}(v) in the probe domain."""
    rows_t = tm.converted_rows(dom)
    iters = []
    cur = vec
    for i in range(bound + 1):
        iters.append(cur)
        if i < bound:
            cur = tm.apply_t(cur, dom, rows_t)
    rows = []
    for i in range(tm.d):
        for k in range(dom.deg):
            row = [it[i][k] for it in iters]
            if any(row):
                rows.append(row)
    return rows


def torsion_witness(
    field: FieldSpec, s, bound: int, probe_degree: int = PROBE_DEGREE
):
    """Smallest-support nonzero a with deg a <= bound and ρ_a(v) = 0,
    found by linear algebra over F_q; None if no witness exists up to
    the bound.  Independent of the factored annihilator path.

    For prime q the search runs first in the modular probe domain,
    where iterates are single field elements instead of polynomials of
    growing degree: the probe is a ring homomorphism, so an empty
    kernel there rigorously rules out a witness, and any candidate it
    produces is verified exactly before being returned."""
    s = _validate(s)
    motive = Motive(field, s)
    seeds = motive.point_v_seeds()
    if field.e == 1:
        tm = TModule.from_motive(motive)
        v = motive.special_point_v()
        for seed in (0, 1):
            dom = ProbeDomain(field, probe_degree, seed)
            rows = _probe_witness_rows(tm, dom, dom.convert_point(v), bound)
            sols = [
                vec for vec in nullspace(field, rows, bound + 1) if any(vec)
            ]
            if not sols:
                return None
            for vec in sols:
                a = Poly(field, vec, var="t")
                if all(c.is_zero() for c in rho_a_point(motive, seeds, a)):
                    return a
        # probe candidates exist but none verified exactly (a kernel
        # collision, astronomically unlikely twice): exact fallback
    iters = _point_iterates(motive, seeds, bound)
    rows, ncols = _flatten_rows(field, [iters])
    for vec in nullspace(field, rows, ncols):
        a = Poly(field, vec, var="t")
        if not a.is_zero():
            assert all(c.is_zero() for c in rho_a_point(motive, seeds, a))
            return a
    return None


def is_zeta_like(field: FieldSpec, s, bound: Optional[int] = None) -> ZetaLikeVerdict:
    """Decide (or semi-decide) whether the value of s is a rational
    multiple of the depth-one value of the same weight.

    When (q-1) | w this is equivalent to being Eulerian and the
    question is delegated.  Otherwise the procedure searches degrees
    <= bound for a nonzero pair (a, b) with ρ_a(v) + ρ_b(u) = 0; not
    finding one is only "none-up-to-bound"."""
    t0 = time.perf_counter()
    s = _validate(s)
    if len(s) < 2:
        raise ValueError("zeta-like search needs depth >= 2")
    q = field.q
    weight = sum(s)
    depth = len(s)
    if bound is None:
        bound = default_zetalike_bound(q, weight)

    if weight % (q - 1) == 0:
        sub = is_eulerian(field, s)
        return ZetaLikeVerdict(
            q=q,
            s=s,
            weight=weight,
            depth=depth,
            bound=bound,
            outcome="reduced-to-eulerian",
            witness_a=None,
            witness_b=None,
            dimension=0,
            elapsed_ms=int(round((time.perf_counter() - t0) * 1000)),
            modulus=_modulus_of(field),
            delegate=sub,
        )

    motive = Motive(field, s)
    v_seeds = motive.point_v_seeds()
    u_seeds = motive.point_u_seeds()
    v_iters = _point_iterates(motive, v_seeds, bound)
    u_iters = _point_iterates(motive, u_seeds, bound)
    rows, ncols = _flatten_rows(field, [v_iters, u_iters])
    witness = None
    for vec in nullspace(field, rows, ncols):
        a = Poly(field, vec[: bound + 1], var="t")
        b = Poly(field, vec[bound + 1:], var="t")
        if a.is_zero() and b.is_zero():
            continue
        res_a = rho_a_point(motive, v_seeds, a)
        res_b = rho_a_point(motive, u_seeds, b)
        if all((x + y).is_zero() for x, y in zip(res_a, res_b)):
            witness = (a, b)
            break
    return ZetaLikeVerdict(
        q=q,
        s=s,
        weight=weight,
        depth=depth,
        bound=bound,
        outcome="zeta-like" if witness else "none-up-to-bound",
        witness_a=witness[0] if witness else None,
        witness_b=witness[1] if witness else None,
        dimension=ncols,
        elapsed_ms=int(round((time.perf_counter() - t0) * 1000)),
        modulus=_modulus_of(field),
    )


def check_suffix_consistency(verdicts: dict) -> list:
    """Violations of "Eulerian implies every proper suffix Eulerian".

    `verdicts` maps tuples to booleans and must contain the proper
    suffix of every Eulerian tuple of depth >= 2.  Returns a list of
    (tuple, suffix) pairs where the implication fails.
    """
    out = []
    for s, eul in verdicts.items():
        if not eul or len(s) < 2:
            continue
        suffix = tuple(s[1:])
        if suffix not in verdicts:
            raise KeyError(
                f"suffix {suffix} of Eulerian tuple {s} missing from map"
            )
        if not verdicts[suffix]:
            out.append((tuple(s), suffix))
    return out
