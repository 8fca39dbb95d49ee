import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from reference_impls import avoids_marked_ref, contains_ref

from permpaths import (
    MarkedPattern,
    avoids_all,
    avoids_barred,
    avoids_hatted,
    contains_classical,
    format_marked_pattern,
    neighbor_condition_holds,
    parse_class_spec,
    parse_marked_pattern,
)
from permpaths.patterns import _avoids_marked


def all_perms(n):
    return itertools.permutations(range(1, n + 1))


# ---------------------------------------------------------------------------
# marked-pattern parsing


def test_parse_compact_forms():
    mp = parse_marked_pattern("2^13")
    assert mp == MarkedPattern((2, 1, 3), "hat", 2)
    assert parse_marked_pattern("2-13") == MarkedPattern((2, 1, 3), "bar", 2)
    assert parse_marked_pattern("132") == MarkedPattern((1, 3, 2))
    assert parse_marked_pattern("^21") == MarkedPattern((2, 1), "hat", 1)


def test_parse_long_form():
    assert parse_marked_pattern("2 1 3 ^2") == MarkedPattern((2, 1, 3), "hat", 2)
    assert parse_marked_pattern("10 1 2 3 4 5 6 7 8 9 -1") == MarkedPattern(
        (10, 1, 2, 3, 4, 5, 6, 7, 8, 9), "bar", 1
    )
    assert parse_marked_pattern("1 2") == MarkedPattern((1, 2))


def test_format_roundtrips():
    for text in ["2^13", "2-13", "132", "^21", "1", "4321"]:
        assert format_marked_pattern(parse_marked_pattern(text)) == text
    long = MarkedPattern(tuple([10] + list(range(1, 10))), "hat", 1)
    assert parse_marked_pattern(format_marked_pattern(long)) == long


@pytest.mark.parametrize(
    "bad", ["", "1^^2", "^1-2", "13^", "102", "1x2", "21 ^9", "1 2 ^x"]
)
def test_parse_rejects_malformed(bad):
    with pytest.raises(ValueError):
        parse_marked_pattern(bad)


def test_marked_pattern_validation():
    with pytest.raises(ValueError):
        MarkedPattern((1, 2), "hat", None)
    with pytest.raises(ValueError):
        MarkedPattern((1, 2), None, 1)
    with pytest.raises(ValueError):
        MarkedPattern((1, 2), "hat", 3)
    with pytest.raises(ValueError):
        MarkedPattern((1, 1), "hat", 1)


def test_parse_class_spec():
    spec = parse_class_spec("132,2^13")
    assert spec == (MarkedPattern((1, 3, 2)), MarkedPattern((2, 1, 3), "hat", 2))
    with pytest.raises(ValueError):
        parse_class_spec("132,,21")


def test_reduced_pattern():
    assert parse_marked_pattern("2^13").reduced() == (1, 2)
    assert parse_marked_pattern("^132").reduced() == (2, 1)
    assert parse_marked_pattern("^1").reduced() == ()


# ---------------------------------------------------------------------------
# classical containment


def test_contains_examples():
    assert contains_classical((2, 1, 4, 3), (1, 3, 2))
    assert not contains_classical((1, 2, 3), (2, 1))
    assert not contains_classical((), (1,))
    assert contains_classical((), ())
    assert contains_classical((1,), (1,))


def test_s3_of_21():
    assert [p for p in all_perms(3) if not contains_classical(p, (2, 1))] == [(1, 2, 3)]


def test_contains_matches_reference_exhaustively():
    patterns = [
        tau
        for k in range(1, 5)
        for tau in itertools.permutations(range(1, k + 1))
    ]
    for n in range(7):
        for pi in all_perms(n):
            for tau in patterns:
                assert contains_classical(pi, tau) == contains_ref(pi, tau), (pi, tau)


def test_contains_long_pattern_matches_reference():
    tau = (3, 1, 4, 2, 5)
    for pi in all_perms(6):
        assert contains_classical(pi, tau) == contains_ref(pi, tau)


# ---------------------------------------------------------------------------
# marked avoidance


def test_s3_marked_classes():
    hat = MarkedPattern((2, 1), "hat", 1)
    bar = MarkedPattern((2, 1), "bar", 1)
    assert {p for p in all_perms(3) if avoids_hatted(p, hat)} == {
        (3, 2, 1),
        (3, 1, 2),
        (2, 3, 1),
    }
    assert [p for p in all_perms(3) if avoids_barred(p, bar)] == []


def test_2143_separates_hat_from_bar():
    assert avoids_hatted((2, 1, 4, 3), parse_marked_pattern("2^13"))
    assert not avoids_barred((2, 1, 4, 3), parse_marked_pattern("2-13"))


def test_short_permutations_avoid_vacuously():
    mp_hat = parse_marked_pattern("2^13")
    mp_bar = parse_marked_pattern("2-13")
    for pi in [(), (1,)]:
        assert avoids_hatted(pi, mp_hat)
        assert avoids_barred(pi, mp_bar)


def test_single_element_pattern():
    # the empty occurrence must extend to a single element: possible iff n >= 1
    hat = parse_marked_pattern("^1")
    bar = parse_marked_pattern("-1")
    assert not avoids_hatted((), hat)
    assert not avoids_barred((), bar)
    for n in (1, 2, 3):
        assert all(avoids_hatted(p, hat) for p in all_perms(n))
        assert all(avoids_barred(p, bar) for p in all_perms(n))


def test_mark_kind_enforced():
    with pytest.raises(ValueError):
        avoids_hatted((1,), parse_marked_pattern("-21"))
    with pytest.raises(ValueError):
        avoids_barred((1,), parse_marked_pattern("^21"))


def test_marked_checkers_match_reference():
    cases = [
        (tau, i)
        for k in (2, 3)
        for tau in itertools.permutations(range(1, k + 1))
        for i in range(1, k + 1)
    ]
    for n in range(6):
        for pi in all_perms(n):
            for tau, i in cases:
                for barred in (False, True):
                    assert _avoids_marked(pi, tau, i, barred) == avoids_marked_ref(
                        pi, tau, i, barred
                    ), (pi, tau, i, barred)


@given(
    st.permutations(tuple(range(1, 7))),
    st.sampled_from(
        [
            (tau, i)
            for tau in itertools.permutations(range(1, 5))
            for i in range(1, 5)
        ]
    ),
)
def test_marked_checkers_match_reference_random_k4(pi, case):
    tau, i = case
    pi = tuple(pi)
    for barred in (False, True):
        assert _avoids_marked(pi, tau, i, barred) == avoids_marked_ref(pi, tau, i, barred)


def test_neighbor_condition():
    assert not neighbor_condition_holds(parse_marked_pattern("2^13"))
    assert neighbor_condition_holds(parse_marked_pattern("^132"))
    assert neighbor_condition_holds(parse_marked_pattern("21^3"))
    for k in (2, 3, 4):
        increasing = "".join(str(v) for v in range(1, k + 1))
        for i in range(1, k + 1):
            text = increasing[: i - 1] + "^" + increasing[i - 1 :]
            assert not neighbor_condition_holds(parse_marked_pattern(text))
    with pytest.raises(ValueError):
        neighbor_condition_holds(parse_marked_pattern("132"))


def test_bar_avoidance_implies_hat_avoidance_and_hat1_equalities():
    """One sweep over every marked pattern of length 2..4 and every n <= 7.

    Checks the subset relation (any hat-violator must violate bar too) and
    that marked indices with equal deleted-reductions define equal hatted
    classes.
    """
    for k in (2, 3, 4):
        for tau in itertools.permutations(range(1, k + 1)):
            reductions = {
                i: MarkedPattern(tau, "hat", i).reduced() for i in range(1, k + 1)
            }
            for n in range(1, 8):
                hat_sets: dict[int, set] = {i: set() for i in range(1, k + 1)}
                for pi in all_perms(n):
                    for i in range(1, k + 1):
                        if _avoids_marked(pi, tau, i, barred=False):
                            hat_sets[i].add(pi)
                        else:
                            assert not _avoids_marked(pi, tau, i, barred=True), (
                                pi, tau, i)
                for i, j in itertools.combinations(range(1, k + 1), 2):
                    if reductions[i] == reductions[j]:
                        assert hat_sets[i] == hat_sets[j], (tau, i, j, n)


def test_avoids_all_mixed_constraints():
    constraints = parse_class_spec("132,2^13")
    assert avoids_all((4, 2, 1, 3), constraints)
    assert not avoids_all((1, 3, 2), constraints)
    assert not avoids_all((2, 3, 1), constraints)  # the factor 23 is an inextensible 12
