import random

import pytest

from ffmzv.criterion import (
    annihilator_cmpl,
    annihilator_mzv,
    check_suffix_consistency,
    decompose_weight,
    default_zetalike_bound,
    is_cmpl_eulerian,
    is_eulerian,
    is_zeta_like,
    torsion_witness,
)
from ffmzv.fields import field_for_q
from ffmzv.poly import Poly, RatFrac


# -- weight decomposition ----------------------------------------------------

@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_decompose_weight_q_minus_one(q):
    d = decompose_weight(q, q - 1)
    assert (d.h, d.ell, d.n) == (1, 0, 1)


def test_decompose_weight_examples():
    d = decompose_weight(3, 6)  # 6 = 3¹·1·(3¹-1)
    assert (d.h, d.ell, d.n) == (1, 1, 1)
    d = decompose_weight(3, 8)  # 8 = 3⁰·1·(3²-1)
    assert (d.h, d.ell, d.n) == (2, 0, 1)
    d = decompose_weight(2, 7)  # h must be the LARGEST valid exponent
    assert (d.h, d.ell, d.n) == (3, 0, 1)
    d = decompose_weight(2, 12)  # 12 = 2²·1·(2²-1)
    assert (d.h, d.ell, d.n) == (2, 2, 1)


@pytest.mark.parametrize("q", [2, 3, 5])
def test_decompose_weight_reconstructs(q):
    p = 2 if q % 2 == 0 else q
    for w in range(q - 1, 60, q - 1 if q > 2 else 1):
        d = decompose_weight(q, w)
        assert w == p ** d.ell * d.n * (q ** d.h - 1)
        assert d.n % p != 0
        # maximality of h
        for h2 in range(d.h + 1, 8):
            if q ** h2 - 1 <= w:
                assert w % (q ** h2 - 1) != 0


def test_decompose_weight_rejects_bad_weight():
    with pytest.raises(ValueError):
        decompose_weight(3, 5)


# -- annihilator construction ------------------------------------------------

def test_annihilator_q3_2_4():
    F = field_for_q(3)
    ann = annihilator_mzv(F, (2, 4))
    t = Poly(F, [0, 1], var="t")
    frob = t ** 3 - t
    depth_one = t ** 3 + t.scale(2)
    assert ann.expanded(F) == frob ** 3 * depth_one
    assert ann.degree == 9 + 3


def test_annihilator_q2_1_1():
    F = field_for_q(2)
    ann = annihilator_mzv(F, (1, 1))
    t = Poly(F, [0, 1], var="t")
    assert ann.expanded(F) == (t * t - t) ** 2 * (t * t + t)


def test_annihilator_cmpl_examples():
    F3 = field_for_q(3)
    t3 = Poly(F3, [0, 1], var="t")
    assert annihilator_cmpl(F3, (2, 4)).expanded(F3) == (t3 ** 3 - t3) ** 4
    F2 = field_for_q(2)
    t2 = Poly(F2, [0, 1], var="t")
    assert annihilator_cmpl(F2, (1, 2)).expanded(F2) == (
        (t2 * t2 - t2) ** 2 * (t2 ** 4 - t2)
    )


def test_annihilator_strict_rejects_odd_entries():
    F = field_for_q(3)
    with pytest.raises(ValueError):
        annihilator_mzv(F, (3, 4))
    ann = annihilator_mzv(F, (3, 4), strict=False)
    assert 7 in ann.skipped  # suffix weight 3+4 has no decomposition


# -- the main decision procedure ---------------------------------------------

@pytest.mark.parametrize("q", [2, 3])
def test_depth_one_ground_truth(q):
    F = field_for_q(q)
    for n in range(1, 13):
        v = is_eulerian(F, (n,))
        assert v.eulerian == (n % (q - 1) == 0 if q > 2 else True), n


def test_certified_verdicts():
    F3 = field_for_q(3)
    F2 = field_for_q(2)
    assert is_eulerian(F3, (2, 4)).eulerian
    assert is_eulerian(F2, (1, 2, 4)).eulerian
    assert not is_eulerian(F3, (4, 2)).eulerian
    assert not is_eulerian(F3, (2, 2, 2)).eulerian


def test_precheck_shortcut_and_soundness():
    F = field_for_q(3)
    quick = is_eulerian(F, (3, 4))
    assert not quick.eulerian
    assert quick.precheck is not None
    # the full pipeline, precheck disabled, must agree
    for s in [(3, 4), (1, 2), (2, 3, 2), (5, 2)]:
        full = is_eulerian(F, s, precheck=False)
        assert not full.eulerian, s
        assert full.precheck is None


def test_primitive_reduction_agreement():
    rng = random.Random(7)
    for q in (2, 3):
        F = field_for_q(q)
        p = 2 if q == 2 else 3
        for _ in range(10):
            depth = rng.randint(1, 2)
            s = tuple(rng.randint(1, 4) * (q - 1) for _ in range(depth))
            if sum(s) * p > 16:
                continue
            sp = tuple(p * x for x in s)
            a = is_eulerian(F, s)
            b = is_eulerian(F, sp)
            assert a.eulerian == b.eulerian, (s, sp)
            assert b.reduced == a.reduced


def test_probe_and_exact_agree():
    F = field_for_q(3)
    for s in [(2, 4), (4, 2), (2, 2), (2, 6)]:
        with_probe = is_eulerian(F, s)
        exact = is_eulerian(F, s, use_probe=False)
        assert with_probe.eulerian == exact.eulerian, s


# -- torsion witnesses vs the factored annihilator ---------------------------

def test_witness_found_exactly_for_eulerian_q3():
    F = field_for_q(3)
    for s in [(2,), (2, 4), (4, 2), (2, 2)]:
        ann = annihilator_mzv(F, s)
        verdict = is_eulerian(F, s)
        witness = torsion_witness(F, s, 2 * ann.degree)
        assert (witness is not None) == verdict.eulerian, s


def test_witness_degree_within_annihilator_degree():
    """On Eulerian instances the minimal witness divides (in degree) the
    constructed annihilator."""
    F3, F2 = field_for_q(3), field_for_q(2)
    for F, s in [(F3, (2, 4)), (F2, (1, 1)), (F2, (1, 2))]:
        ann = annihilator_mzv(F, s)
        w = torsion_witness(F, s, ann.degree)
        assert w is not None
        assert w.degree <= ann.degree


# -- polylogarithm variant ---------------------------------------------------

def test_cmpl_depth_one_at_one_is_eulerian():
    F = field_for_q(3)
    v = is_cmpl_eulerian(F, (2,), (1,))
    assert v.eulerian
    assert v.conditional is False


def test_cmpl_conditional_flag():
    F = field_for_q(3)
    th = Poly.gen(F)
    v = is_cmpl_eulerian(F, (2,), (th ** 4,))
    assert v.conditional is True


def test_cmpl_rejects_zero_coordinate():
    F = field_for_q(3)
    with pytest.raises(ValueError):
        is_cmpl_eulerian(F, (2,), (0,))


def test_cmpl_rational_point():
    F = field_for_q(3)
    th = Poly.gen(F)
    u = RatFrac(Poly.one(F), th)
    v = is_cmpl_eulerian(F, (2,), (u,))
    assert v.conditional is False
    assert isinstance(v.eulerian, bool)


# -- zeta-like search --------------------------------------------------------

def test_zetalike_delegates_when_weight_divisible():
    F = field_for_q(2)
    v = is_zeta_like(F, (1, 2))
    assert v.outcome == "reduced-to-eulerian"
    assert v.delegate.eulerian


def test_zetalike_search_finds_witness():
    F = field_for_q(3)
    v = is_zeta_like(F, (1, 2))
    assert v.outcome == "zeta-like"
    assert v.witness_a is not None and not v.witness_a.is_zero()


def test_zetalike_default_bound():
    assert default_zetalike_bound(3, 26) == 81
    assert default_zetalike_bound(2, 3) == 8


def test_zetalike_requires_depth_two():
    F = field_for_q(3)
    with pytest.raises(ValueError):
        is_zeta_like(F, (4,))


# -- suffix consistency ------------------------------------------------------

def test_suffix_consistency_clean():
    verdicts = {(2, 4): True, (4,): True, (4, 2): False, (2,): True}
    assert check_suffix_consistency(verdicts) == []


def test_suffix_consistency_detects_violation():
    verdicts = {(2, 4): True, (4,): False}
    assert check_suffix_consistency(verdicts) == [((2, 4), (4,))]


def test_suffix_consistency_requires_closure():
    with pytest.raises(KeyError):
        check_suffix_consistency({(2, 4): True})


def test_verdict_json_schema():
    F = field_for_q(3)
    d = is_eulerian(F, (2, 4)).to_json()
    assert set(d) == {
        "q", "modulus", "tuple", "weight", "depth",
        "eulerian", "precheck", "annihilator_degree", "elapsed_ms",
    }
    assert d["q"] == 3 and d["tuple"] == [2, 4] and d["eulerian"] is True
