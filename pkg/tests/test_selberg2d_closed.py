import pytest

from fpselberg.errors import DomainError
from fpselberg.selberg_core import SelbergParams, selberg_bruteforce
from fpselberg.selberg2d_closed import (
    Branch,
    CaseTag,
    CycleClass,
    classify,
    condition_set,
    delta_boundary_forms,
    describe,
    eval_closed,
    in_condition_sets,
    relations_check,
    skew_symmetry_check,
)

from reference_impl import PRIMES, all_triples


def tag(p, a, b, c, l1, l2) -> CaseTag:
    return classify(SelbergParams(a, b, c, p), l1, l2)


def test_classify_examples():
    assert tag(7, 3, 4, 3, 1, 1).branch == Branch.C11_ii
    assert tag(7, 1, 1, 1, 1, 1) == CaseTag(CycleClass.C11, Branch.NOT_APPLICABLE_zero)
    assert tag(7, 6, 6, 6, 2, 3).branch == Branch.C23_zero
    assert tag(5, 1, 1, 1, 1, 2).branch == Branch.C12_delta_neg_zero
    assert tag(5, 2, 3, 4, 1, 4).branch == Branch.OTHER_zero
    assert tag(7, 6, 6, 3, 2, 2) == CaseTag(CycleClass.C22, Branch.C22_i)


def test_classify_canonicalizes_cycle_order():
    params = SelbergParams(3, 4, 3, 7)
    assert classify(params, 2, 1) == classify(params, 1, 2)
    with pytest.raises(ValueError):
        classify(params, 0, 1)


def test_classify_is_total_and_branches_mutually_consistent():
    seen = set()
    for p in PRIMES:
        for a, b, c in all_triples(p):
            params = SelbergParams(a, b, c, p)
            for l1 in range(1, 5):
                for l2 in range(l1, 5):
                    t = classify(params, l1, l2)  # GuardError would fail the test
                    seen.add((t.cycle_class, t.branch))
    assert {b for _, b in seen} == set(Branch)
    # degree-infeasibility vanishing occurs for both diagonal cycle classes
    assert (CycleClass.C11, Branch.NOT_APPLICABLE_zero) in seen
    assert (CycleClass.C22, Branch.NOT_APPLICABLE_zero) in seen


def test_eval_closed_reference_values():
    assert eval_closed(SelbergParams(3, 4, 3, 7), 1, 1) == 1
    assert eval_closed(SelbergParams(6, 6, 6, 7), 2, 2) == 5
    assert eval_closed(SelbergParams(6, 6, 3, 7), 2, 2) == 5
    # the [1,3] value is pinned through the relation: -1/2 * 5 = 1 mod 7
    assert eval_closed(SelbergParams(6, 6, 6, 7), 1, 3) == 1
    assert eval_closed(SelbergParams(2, 3, 4, 5), 1, 4) == 0


@pytest.mark.parametrize("p", [5, 7])
def test_eval_closed_equals_bruteforce(p):
    for a, b, c in all_triples(p):
        params = SelbergParams(a, b, c, p)
        spec = params.spec(2)
        for l1 in range(1, 5):
            for l2 in range(l1, 5):
                assert eval_closed(params, l1, l2) == selberg_bruteforce(spec, (l1, l2))


@pytest.mark.parametrize("p", [5, 7, 11])
def test_nonvanishing_iff_2c_below_p(p):
    for a, b, c in all_triples(p):
        params = SelbergParams(a, b, c, p)
        for l1, l2, branches in [
            (1, 1, (Branch.C11_i, Branch.C11_ii)),
            (2, 2, (Branch.C22_i,)),
        ]:
            t = classify(params, l1, l2)
            if t.branch in branches:
                assert bool(eval_closed(params, l1, l2)) == (2 * c < p)
        t22 = classify(params, 2, 2)
        if t22.branch == Branch.C22_ii:
            assert eval_closed(params, 2, 2) != 0
        t13 = classify(params, 1, 3)
        if t13.branch == Branch.C13_formula:
            assert eval_closed(params, 1, 3) != 0


def test_condition_sets_examples():
    assert condition_set(SelbergParams(6, 6, 6, 7)) == "R3"
    assert condition_set(SelbergParams(6, 6, 3, 7)) == "R2"
    assert condition_set(SelbergParams(1, 1, 1, 7)) is None
    # R1 example: 2c < p, a+c <= p-1, b+c >= p, a+b+2c >= 2p-1
    assert condition_set(SelbergParams(3, 4, 3, 7)) == "R1"
    assert condition_set(SelbergParams(4, 5, 2, 7)) == "R1"


@pytest.mark.parametrize("p", PRIMES)
def test_condition_sets_are_mutually_exclusive(p):
    for a, b, c in all_triples(p):
        flags = in_condition_sets(SelbergParams(a, b, c, p))
        assert sum(flags) <= 1


def test_relations_reports():
    r3 = relations_check(SelbergParams(6, 6, 6, 7))
    assert r3.condition_set == "R3"
    assert r3.relation_holds is True
    assert r3.uniqueness_holds is None
    assert set(r3.values) == {(2, 2), (1, 3), (3, 1)}
    assert r3.ok

    r2 = relations_check(SelbergParams(6, 6, 3, 7))
    assert r2.condition_set == "R2"
    assert r2.relation_holds is True
    assert -r2.values[(2, 2)] / 2 == r2.values[(1, 2)]

    none = relations_check(SelbergParams(1, 1, 1, 7))
    assert none.condition_set is None
    assert none.relation_holds is None
    assert none.uniqueness_holds is True
    assert all(v == 0 for v in none.values.values())


@pytest.mark.parametrize("p", [5, 7])
def test_relations_hold_exhaustively(p):
    for a, b, c in all_triples(p):
        report = relations_check(SelbergParams(a, b, c, p))
        assert report.ok, (p, a, b, c, report.condition_set)


def test_delta_boundary_forms_agree():
    checked = 0
    for p in (5, 7, 11, 13):
        for a, b, c in all_triples(p):
            params = SelbergParams(a, b, c, p)
            if params.delta != 0 or a + b < p - 1:
                continue
            forms = delta_boundary_forms(params)
            # at least one side condition always holds at delta = 0
            assert set(forms) & {"a_side", "b_side"}
            assert len({int(v) for v in forms.values()}) == 1
            assert forms["canonical"] == selberg_bruteforce(params.spec(2), (1, 2))
            checked += 1
    assert checked > 0


def test_delta_boundary_forms_domain_error():
    with pytest.raises(DomainError):
        delta_boundary_forms(SelbergParams(1, 1, 1, 7))  # delta < 0
    with pytest.raises(DomainError):
        delta_boundary_forms(SelbergParams(1, 2, 5, 7))  # delta = 0 but a+b < p-1


def test_skew_symmetry_examples():
    assert skew_symmetry_check(SelbergParams(6, 6, 6, 7)) is True
    assert skew_symmetry_check(SelbergParams(5, 6, 6, 7)) is True
    with pytest.raises(DomainError):
        skew_symmetry_check(SelbergParams(3, 4, 3, 7))  # 2c < p


def test_describe_output():
    text = describe(SelbergParams(3, 4, 3, 7), 1, 1)
    assert "C11_ii" in text
    assert "value 1" in text
    assert "(2c)!/c!" in text
    zero_text = describe(SelbergParams(1, 1, 1, 7), 1, 1)
    assert "value 0" in zero_text
    assert "NOT_APPLICABLE_zero" in zero_text
