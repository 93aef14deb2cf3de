import pytest
from hypothesis import given
from hypothesis import strategies as st

from tyv.harness import MUTABLE
from tyv.pbw import to_lie
from tyv.twisted_current import COEFF_DEFAULTS, TwistedCurrent, check_derivation_chain, check_presentation

from conftest import ACCEPTANCE_TYPES


def _by_id(items):
    return {it.id: it for it in items}


def test_generators_in_the_current_algebra(chevalley):
    cb = chevalley("B2")
    tc = TwistedCurrent(cb, 3)
    for i in range(2):
        k = cb.rs.index[cb.rs.simple(i)]
        xp, xm, h = cb.xp(k), cb.xm(k), cb.h(i)
        assert to_lie(tc.h(i, 1)) == {(h, 1): 2}
        assert to_lie(tc.b(i, 1)) == {(xp, 1): 1, (xm, 1): 1}
        assert to_lie(tc.b(i, 0)) == {(xp, 0): 1, (xm, 0): -1}
        assert tc.h(i, 2).is_zero()
        assert tc.b(i, 4).is_zero()


def test_budget_must_be_positive(chevalley):
    with pytest.raises(ValueError):
        TwistedCurrent(chevalley("A1"), 0)


@pytest.mark.parametrize("t, D", [("A2", 5), ("A1", 5), ("G2", 4)])
def test_presentation_passes(chevalley, t, D):
    items = _by_id(check_presentation(chevalley(t), D))
    assert all(it.passed for it in items.values())
    assert "extra-verified" in items
    assert items["tchbf"].detail["instances"] > 0


def test_serre_families_match_cartan_entries(chevalley):
    assert "tcfSerre3f" in _by_id(check_presentation(chevalley("G2"), 3))
    assert "tcfSerre2f" in _by_id(check_presentation(chevalley("C2"), 3))
    assert "tcfSerre0f" in _by_id(check_presentation(chevalley("A3"), 3))


def test_serre_negative_control(chevalley):
    items = _by_id(check_presentation(chevalley("C2"), 6, {"tcfSerre2f": -5}))
    assert not items["tcfSerre2f"].passed
    assert items["tcfSerre2f"].detail["residuals"][0]["residual"]["terms"] > 0
    assert all(it.passed for k, it in items.items() if k != "tcfSerre2f")


@pytest.mark.parametrize("t", ["A2", "C2", "G2"])
@given(data=st.data())
def test_any_single_coefficient_mutation_is_caught(chevalley, t, data):
    cb = chevalley(t)
    used = {it.id for it in check_presentation(cb, 3)} | {"tchbf", "tcbbf"}
    key = data.draw(st.sampled_from(sorted(MUTABLE["classical"] & used)))
    value = data.draw(st.integers(-12, 12).filter(lambda v: v != COEFF_DEFAULTS[key]))
    items = check_presentation(cb, 3, {key: value})
    assert any(not it.passed for it in items)


def test_derivation_chain_b2(chevalley):
    items = _by_id(check_derivation_chain(chevalley("B2"), 6))
    assert all(it.passed for it in items.values())
    for key in ("bbhelper", "bi1bi2=hi3", "todo1-todo3", "hi1bjr"):
        assert items[key].detail["instances"] > 0


def test_chain_identities_directly(chevalley):
    tc = TwistedCurrent(chevalley("C3"), 8)
    for i in range(3):
        assert tc.b(i, 1).commutator(tc.b(i, 2)) == -tc.h(i, 3)
        for r in range(3):
            for s in range(r + 1):
                lhs = tc.b(i, r + s + 1).commutator(tc.b(i, r - s))
                assert lhs == tc.h(i, 2 * r + 1) * (-1) ** (r + s + 1)


@pytest.mark.parametrize("t", ACCEPTANCE_TYPES)
def test_residuals_are_exact_zero(chevalley, t):
    items = check_presentation(chevalley(t), 4) + check_derivation_chain(chevalley(t), 4)
    failed = [it.id for it in items if not it.passed]
    assert failed == []
