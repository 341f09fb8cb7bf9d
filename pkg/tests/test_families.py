import pytest

from ffmzv.families import (
    FamilyTuple,
    compare_sweep,
    eu_base,
    eu_canonical,
    extra_family,
    is_primitive,
    predicted_eulerian,
)


def test_eu_base_recursion():
    assert eu_base(3, 1) == (2,)
    assert eu_base(3, 2) == (2, 6)
    assert eu_base(3, 3) == (2, 6, 18)
    assert eu_base(2, 3) == (1, 2, 4)


def test_eu_canonical():
    assert eu_canonical(3, 1, 2) == (8,)
    assert eu_canonical(3, 2, 2) == (8, 18)
    assert eu_canonical(2, 2, 1) == (1, 2)
    assert eu_canonical(2, 3, 2) == (3, 4, 8)


@pytest.mark.parametrize("q", [2, 3, 4])
def test_canonical_weight_formula(q):
    """Eu_r(ℓ) has weight q^{r+ℓ-1} - 1."""
    for r in range(1, 5):
        for ell in range(1, 4):
            if r + ell > 6:
                continue
            assert sum(eu_canonical(q, r, ell)) == q ** (r + ell - 1) - 1


@pytest.mark.parametrize("q", [2, 3])
def test_extra_family_weight(q):
    for ell in range(1, 4):
        s = extra_family(q, ell)
        assert len(s) == 2
        assert sum(s) == q ** (ell + 2) - 1


def test_predictions_satisfy_divisibility_precheck():
    """For q >= 3 every predicted tuple must have all entries divisible
    by q-1 (otherwise it could not be Eulerian at all)."""
    for q in (3, 4, 5):
        for fam in predicted_eulerian(q, 200, 4):
            assert all(x % (q - 1) == 0 for x in fam.s), fam


def test_predictions_are_primitive():
    for q in (2, 3):
        for fam in predicted_eulerian(q, 100, 4):
            assert is_primitive(q, fam.s), fam


def test_predicted_q3_weight_26():
    got = {f.s for f in predicted_eulerian(3, 26, 3)}
    assert got == {(2, 4), (2, 6), (8, 18), (6, 20), (2, 6, 18)}


def test_predicted_q2_weight_4():
    got = {f.s for f in predicted_eulerian(2, 4, 3)}
    assert got == {(1, 1), (1, 2), (1, 3), (1, 1, 2)}


def test_predicted_q2_weight_8_depth_3():
    got = {f.s for f in predicted_eulerian(2, 8, 3)}
    # depth-2 weight-8 primitive pair is (3,5); both weight-8 depth-3
    # recursive candidates appear
    assert (3, 5) in got
    assert (1, 3, 4) in got
    assert (1, 2, 5) in got
    assert (1, 7) not in got
    # depth-2 predictions at weight <= 8 are exactly these
    depth2 = {s for s in got if len(s) == 2}
    assert depth2 == {(1, 1), (1, 2), (1, 3), (2, 5), (3, 4), (3, 5)}


def test_is_primitive():
    assert is_primitive(3, (2, 4))
    assert not is_primitive(3, (6, 12))
    assert is_primitive(2, (1, 2))
    assert not is_primitive(2, (2, 4))


def test_compare_sweep_clean():
    predicted = predicted_eulerian(3, 8, 2)
    computed = {
        (2,): True, (4,): True, (6,): True, (8,): True,
        (2, 4): True, (4, 2): False, (2, 2): False,
        (2, 6): True, (6, 2): False, (4, 4): False,
        (2, 2, 2): False,
    }
    report = compare_sweep(3, predicted, computed)
    assert report.clean
    assert report.matches == [(2, 4), (2, 6)]


def test_compare_sweep_flags_disagreements():
    predicted = {FamilyTuple((2, 4), "x")}
    computed = {(2, 4): False, (4, 2): True, (6, 12): True}
    report = compare_sweep(3, predicted, computed)
    assert report.false_negatives == [(2, 4)]
    assert report.false_positives == [(4, 2)]  # (6,12) not primitive
    assert not report.clean


def test_compare_sweep_reports_missing():
    predicted = {FamilyTuple((2, 4), "x")}
    report = compare_sweep(3, predicted, {})
    assert report.missing == [(2, 4)]
