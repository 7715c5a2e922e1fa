"""Class group computation and the sextic-closure structure decision."""

from fractions import Fraction

import pytest
from sympy import primerange

from purecubic.classgroup import (
    BudgetExhausted,
    ClassGroupStructure,
    ambiguous_order,
    build_factor_base,
    class_group,
    collect_relations,
    decide_k_structure,
    minkowski_bound,
    relation_row,
)
from purecubic.cubicfield import classify
from purecubic.ideals import ElementGamma


def test_minkowski_bound_values():
    mb199 = minkowski_bound(classify(199))
    assert Fraction(97) < mb199 < Fraction(98)
    mb2 = minkowski_bound(classify(2))
    assert Fraction(2) < mb2 < Fraction(3)


def test_minkowski_bound_monotone():
    last = Fraction(0)
    for d in (2, 3, 5, 6, 7):
        mb = minkowski_bound(classify(d))
        assert mb > last
        last = mb


def test_factor_base_complete():
    F = classify(2)
    fb = build_factor_base(F)
    # every prime ideal of norm <= bound appears
    for p in fb.primes:
        assert p.norm <= fb.bound
    qs = {p.q for p in fb.primes}
    assert 2 in qs and 3 in qs


def test_relation_rows_reassemble():
    F = classify(2)
    fb = build_factor_base(F)
    theta = ElementGamma(F, 0, 1, 0)
    row = relation_row(F, fb, theta)  # norm 2, supported above 2
    assert row is not None
    assert sum(row) > 0
    rows = collect_relations(F, fb, max_rows=10)
    assert len(rows) == 10


def test_relation_row_rejects_rough_norm():
    F = classify(2)
    fb = build_factor_base(F)
    # 101 is prime and beyond the bound, so (101, 0, 0) is not smooth
    assert relation_row(F, fb, ElementGamma(F, 101, 0, 0)) is None


@pytest.mark.parametrize("d,h", [(2, 1), (3, 1), (5, 1), (7, 3)])
def test_class_numbers_certified(d, h):
    cg = class_group(classify(d), budget_seconds=120)
    assert cg.h == h
    assert cg.certified


def test_class_group_deterministic():
    a = class_group(classify(7), budget_seconds=120)
    b = class_group(classify(7), budget_seconds=120)
    assert (a.h, a.divisors, a.p3_type) == (b.h, b.divisors, b.p3_type)


def test_budget_exhaustion_signal():
    with pytest.raises(BudgetExhausted):
        class_group(classify(199), budget_seconds=0.01)


def test_ambiguous_order_examples():
    assert ambiguous_order(199) == 3
    assert ambiguous_order(7) == 3
    for p in primerange(7, 500):
        if p % 3 == 1:
            assert ambiguous_order(p) == 3


def test_ambiguous_order_rejects_bad_input():
    with pytest.raises(ValueError):
        ambiguous_order(5)
    with pytest.raises(ValueError):
        ambiguous_order(3)
    with pytest.raises(ValueError):
        ambiguous_order(49)


def _cg(p3_type, h3):
    return ClassGroupStructure(199, p3_type, h3, h3, p3_type, True)


def test_decide_k_structure_classified_cases():
    rep = decide_k_structure(_cg((9,), 9), u=1)
    assert rep.h_k3 == 27
    assert rep.k_type == "(9,3)"
    assert rep.h_over_27 == "3 does not divide h"
    rep2 = decide_k_structure(_cg((3, 3), 9), u=1)
    assert rep2.k_type == "(3,3,3)"
    assert rep2.h_k3 == 27


def test_decide_k_structure_unclassified():
    rep = decide_k_structure(_cg((9,), 9), u=3)
    assert rep.h_k3 == 81
    assert rep.k_type == "outside classified cases"


def test_decide_k_structure_formula_invariant():
    for u in (1, 3):
        for h3 in (3, 9, 27):
            rep = decide_k_structure(_cg((h3,), h3), u=u)
            assert rep.h_k3 * 3 == u * h3 * h3


def test_decide_k_structure_validation():
    with pytest.raises(ValueError):
        decide_k_structure(_cg((9,), 9), u=2)
    with pytest.raises(ValueError):
        decide_k_structure(_cg((9,), 9), u=1, p=7)  # 7 is not 1 mod 9
