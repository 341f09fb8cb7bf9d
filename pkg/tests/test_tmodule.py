import pytest
from hypothesis import given, settings, strategies as st

from ffmzv.fields import field_for_q
from ffmzv.motive import Motive
from ffmzv.poly import Poly
from ffmzv.tmodule import (
    ProbeDomain,
    TModule,
    TwistedPoly,
    carlitz_tensor_module,
    ore_mul,
)


def tpolys(q, max_tau=2, max_deg=3):
    F = field_for_q(q)
    coeff = st.lists(st.integers(0, q - 1), min_size=0, max_size=max_deg + 1)
    return st.lists(
        st.tuples(st.integers(0, max_tau), coeff), min_size=0, max_size=3
    ).map(
        lambda terms: TwistedPoly(F, [(n, Poly(F, cs)) for n, cs in terms])
    )


@given(st.sampled_from([2, 3]), st.data())
@settings(max_examples=50)
def test_ore_multiplication_associative(q, data):
    a = data.draw(tpolys(q))
    b = data.draw(tpolys(q))
    c = data.draw(tpolys(q))
    assert ore_mul(ore_mul(a, b), c) == ore_mul(a, ore_mul(b, c))
    assert ore_mul(a, b + c) == ore_mul(a, b) + ore_mul(a, c)


def test_ore_twist_rule():
    F = field_for_q(3)
    th = Poly.gen(F)
    tau = TwistedPoly(F, [(1, Poly.one(F))])
    coeff = TwistedPoly(F, [(0, th)])
    # τ·θ = θ³·τ
    assert ore_mul(tau, coeff) == TwistedPoly(F, [(1, th ** 3)])


@given(st.sampled_from([2, 3]), st.data())
@settings(max_examples=30)
def test_twisted_apply_is_linear_over_fq(q, data):
    F = field_for_q(q)
    f = data.draw(tpolys(q))
    x = Poly(F, data.draw(st.lists(st.integers(0, q - 1), max_size=4)))
    y = Poly(F, data.draw(st.lists(st.integers(0, q - 1), max_size=4)))
    assert f.apply(x + y) == f.apply(x) + f.apply(y)


@pytest.mark.parametrize("q,s", [(3, (2, 4)), (2, (1, 2)), (3, (4, 2))])
def test_rho_is_ring_homomorphism(q, s):
    """ρ_{ab} = ρ_a ∘ ρ_b on a point."""
    F = field_for_q(q)
    motive = Motive(F, s)
    tm = TModule.from_motive(motive)
    v = motive.special_point_v()
    a = Poly(F, [1, 1], var="t")
    b = Poly(F, [0, 2 % q, 1], var="t")
    lhs = tm.apply_poly(v, a * b)
    rhs = tm.apply_poly(tm.apply_poly(v, b), a)
    assert lhs == rhs


@pytest.mark.parametrize("q,s", [(3, (2, 4)), (2, (1, 2, 4)), (3, (2, 2, 2))])
def test_nilpotency(q, s):
    """ρ_t|_{τ=0} - θI is nilpotent (defining property of a t-module)."""
    F = field_for_q(q)
    tm = TModule.from_motive(Motive(F, s))
    assert tm.nilpotent_check()
    assert tm.nilpotency_index() == max(sum(s[i:]) for i in range(len(s)))


def test_frobdiff_factor_matches_expanded_polynomial():
    F = field_for_q(3)
    motive = Motive(F, (2, 4))
    tm = TModule.from_motive(motive)
    v = motive.special_point_v()
    # (t³ - t)¹ applied two ways
    direct = tm.apply_frobdiff_factor(v, 1, 0)
    poly = Poly(F, [0, 2, 0, 1], var="t")
    assert direct == tm.apply_poly(v, poly)


def test_apply_annihilator_early_exit_order_independent():
    F = field_for_q(3)
    motive = Motive(F, (2, 4))
    tm = TModule.from_motive(motive)
    v = motive.special_point_v()
    factors = [("frobdiff", 1, 1), ("poly", Poly(F, [0, 2, 0, 1], var="t"))]
    a = tm.apply_annihilator(v, factors)
    b = tm.apply_annihilator(v, list(reversed(factors)))
    assert tm.is_zero_point(a) == tm.is_zero_point(b)


# -- the modular probe -------------------------------------------------------

def test_probe_requires_prime_field():
    with pytest.raises(ValueError):
        ProbeDomain(field_for_q(4))


def test_probe_is_ring_homomorphism():
    F = field_for_q(3)
    dom = ProbeDomain(F, deg=7, seed=1)
    th = Poly.gen(F)
    a = th ** 2 + Poly.one(F)
    b = th ** 3 + th.scale(2)
    assert dom.convert(a * b) == dom.mul(dom.convert(a), dom.convert(b))
    assert dom.convert(a + b) == dom.add(dom.convert(a), dom.convert(b))


def test_probe_commutes_with_frobenius():
    F = field_for_q(3)
    dom = ProbeDomain(F, deg=7, seed=0)
    th = Poly.gen(F)
    a = th ** 2 + th + Poly.one(F)
    assert dom.convert(a.twist(1)) == dom.frob(dom.convert(a), 1)


def test_probe_agrees_with_exact_on_torsion():
    F = field_for_q(3)
    motive = Motive(F, (2, 4))
    tm = TModule.from_motive(motive)
    v = motive.special_point_v()
    factors = [("frobdiff", 1, 1), ("poly", Poly(F, [0, 2, 0, 1], var="t"))]
    dom = ProbeDomain(F, deg=11, seed=0)
    out = tm.apply_annihilator(v, factors, dom)
    assert tm.is_zero_point(out, dom)


def test_probe_detects_nontorsion():
    F = field_for_q(3)
    motive = Motive(F, (4, 2))
    tm = TModule.from_motive(motive)
    v = motive.special_point_v()
    factors = [("frobdiff", 1, 1), ("poly", Poly(F, [0, 2, 0, 1], var="t"))]
    dom = ProbeDomain(F, deg=21, seed=0)
    out = tm.apply_annihilator(v, factors, dom)
    assert not tm.is_zero_point(out, dom)


def test_carlitz_module_shape():
    F = field_for_q(3)
    tm = carlitz_tensor_module(F, 3)
    th = Poly.gen(F)
    assert tm.entry(0, 0).terms == {0: th}
    assert tm.entry(0, 1).terms == {0: Poly.one(F)}
    assert tm.entry(2, 0).terms == {1: Poly.one(F)}
    assert tm.entry(2, 1).is_zero()


def test_render_matches_golden_layout():
    F = field_for_q(3)
    tm = TModule.from_motive(Motive(F, (2, 4)))
    text = tm.render()
    lines = text.splitlines()
    assert len(lines) == 10
    assert lines[5].split() == ["τ", "0", "0", "0", "0", "θ", "2τ", "0", "0", "0"]
