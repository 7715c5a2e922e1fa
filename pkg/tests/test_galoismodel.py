"""Exhaustive model enumeration and claim checking on Z/9 x Z/3."""

from dataclasses import replace

import pytest

from purecubic.galoismodel import (
    ALL_ELEMS,
    Elem93,
    Endo93,
    EXPLICIT_MODEL_ENCODING,
    IDENTITY93,
    ModelConstraints,
    ZERO93,
    check_prop_claims,
    check_theorem_claims,
    enumerate_frames,
    enumerate_models,
    explicit_model,
    full_report,
    span,
    verify_model,
)


def test_elem_group_law():
    assert Elem93(8, 2) + Elem93(1, 1) == ZERO93
    assert Elem93(1, 0).order() == 9
    assert Elem93(3, 1).order() == 3
    assert Elem93(0, 2).order() == 3
    assert ZERO93.order() == 1
    assert len(ALL_ELEMS) == 27


def test_span():
    assert span([Elem93(1, 0)]) == frozenset(Elem93(x, 0) for x in range(9))
    assert len(span([Elem93(1, 0), Elem93(0, 1)])) == 27
    assert span([]) == frozenset({ZERO93})


def test_endo_well_definedness():
    with pytest.raises(ValueError):
        Endo93(Elem93(1, 0), Elem93(1, 0))  # 3 * image(e2) != 0
    phi = Endo93(Elem93(2, 1), Elem93(3, 0))
    assert phi.apply(Elem93(1, 1)) == Elem93(5, 1)


def test_identity_endo():
    for g in ALL_ELEMS:
        assert IDENTITY93.apply(g) == g
    assert IDENTITY93.is_automorphism()


def test_explicit_model_satisfies_all_constraints():
    m = explicit_model()
    assert verify_model(m, ModelConstraints())
    assert m.encoding() == EXPLICIT_MODEL_ENCODING
    assert m.csigma == frozenset({ZERO93, Elem93(3, 0), Elem93(6, 0)})
    assert m.cminus == frozenset({ZERO93, Elem93(3, 1), Elem93(6, 2)})
    assert len(m.cplus) == 9
    assert m.s_invariant == 3


def test_identity_sigma_rejected():
    # |ker(sigma - 1)| = 27, so the identity cannot be sigma
    models = enumerate_models()
    assert all(m.sigma != IDENTITY93 for m in models)


def test_enumeration_contains_explicit_model_and_is_deterministic():
    a = enumerate_models()
    b = enumerate_models()
    assert [m.encoding() for m in a] == [m.encoding() for m in b]
    assert any(m.encoding() == EXPLICIT_MODEL_ENCODING for m in a)
    assert len(a) > 0


def test_relaxation_gives_more_models():
    full = enumerate_models()
    relaxed = enumerate_models(replace(ModelConstraints(), ambiguous_order_3=False))
    assert len(relaxed) >= len(full)
    encodings = {m.encoding() for m in relaxed}
    assert all(m.encoding() in encodings for m in full)


def test_frames():
    m = explicit_model()
    frames = enumerate_frames(m)
    assert frames
    for f in frames:
        assert f.X.order() == 9
        assert m.tau.apply(f.X) == f.X
        assert f.Y == m.sigma.apply(f.X)
        assert f.W == m.sigma.apply(f.Y)
        assert f.X + f.Y + f.W == ZERO93
        # tau swaps Y and W
        assert m.tau.apply(f.Y) == f.W
    assert any(f.X == Elem93(1, 0) for f in frames)


def test_prop_claims_explicit_model():
    claims = check_prop_claims(explicit_model())
    assert claims["i_csigma_in_cplus"]
    assert claims["ii_csigma_is_cube_of_any_cplus_generator"]
    assert claims["iii_csigma_from_any_cminus_generator"]
    assert claims["v_genus_is_csigma_times_cminus_type_3_3"]
    assert claims["vi_s_equals_3"]
    # both printed readings of claim (iv) fail here: with A = e1 the
    # subgroup generated is {(0, y)}, not the minus eigencomponent
    assert not claims["iv_sigma_minus_1_forall_A"]
    assert not claims["iv_1_minus_sigma_forall_A"]


def test_theorem_claims_explicit_model():
    m = explicit_model()
    f = next(fr for fr in enumerate_frames(m) if fr.X == Elem93(1, 0))
    assert f.X + f.Y.scale(2) == Elem93(3, 1)
    claims = check_theorem_claims(m, f)
    assert all(claims.values())


def test_full_report_universal_theorem_claims():
    rep = full_report()
    assert rep.model_count > 0
    assert rep.explicit_model_present
    assert all(n > 0 for n in rep.frame_counts)
    for st in rep.theorem_claims.values():
        assert st.status == "holds-universally"
        assert st.witness_holds is not None
    for name in ("iv_sigma_minus_1_forall_A", "iv_sigma_minus_1_exists_A",
                 "iv_1_minus_sigma_forall_A", "iv_1_minus_sigma_exists_A"):
        assert name in rep.prop_claims  # recorded, not asserted


def test_full_report_relaxed_still_total():
    rep = full_report(replace(ModelConstraints(), cminus_order_3=False))
    assert rep.model_count >= full_report().model_count
    assert set(rep.prop_claims) == set(full_report().prop_claims)
