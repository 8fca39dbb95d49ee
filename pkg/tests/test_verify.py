"""Harness-level checks, including the verified boundary of the path-factor
claim (equality for p in {3, 4}, strict inclusion beyond)."""

import itertools

from permpaths import (
    MarkedPattern,
    avoids_hatted,
    contains_u_dpow_u,
    enumerate_dyck,
    indexed_path_word,
    run_embedding,
    theta,
)
from permpaths.oracle import all_132_avoiders
from permpaths.patterns import _avoids_marked
from permpaths.verify import (
    THEOREM_CHECKS,
    _hat_descending_then_top,
    verify_path_factor_classes,
)


def test_all_theorem_checks_run_at_small_bounds():
    expected = {"cat", "udu", "fac", "mot", "equ", "eco", "sta"}
    assert set(THEOREM_CHECKS) == expected
    for code, (check, _) in THEOREM_CHECKS.items():
        ok, lines = check(4)
        assert ok, (code, lines)
        assert lines


def test_path_factor_equality_holds_for_p_3_and_4():
    for n in range(3, 9):
        members = all_132_avoiders(n)
        words = tuple(enumerate_dyck(n))
        for p in (3, 4):
            if p > n:
                continue
            mp = _hat_descending_then_top(p)
            image = {
                indexed_path_word(theta(pi))
                for pi in members
                if _avoids_marked(pi, mp.pattern, mp.marked_index, False)
            }
            expected = {w for w in words if not contains_u_dpow_u(w, p)}
            assert image == expected, (n, p)


def test_path_factor_image_is_always_a_subset():
    """The forward inclusion holds for every p: class members map to paths
    without the factor."""
    for n in range(3, 8):
        members = all_132_avoiders(n)
        for p in range(3, n + 1):
            mp = _hat_descending_then_top(p)
            for pi in members:
                if _avoids_marked(pi, mp.pattern, mp.marked_index, False):
                    assert not contains_u_dpow_u(indexed_path_word(theta(pi)), p)


def test_path_factor_equality_fails_for_p_5():
    """Pinned counterexample: the reverse inclusion is false from p = 5 on."""
    pi = (3, 2, 4, 1, 5)
    word = indexed_path_word(theta(pi))
    assert word == "uudduuddud"
    assert not contains_u_dpow_u(word, 5)
    assert not avoids_hatted(pi, MarkedPattern((4, 3, 2, 1, 5), "hat", 4))
    ok, lines = verify_path_factor_classes(5)
    assert not ok
    assert any("n=5 p=5" in line and "MISMATCH" in line for line in lines)


def test_consecutive_run_embedding_escapes_hatted_classes():
    """Whenever the marked element sits directly above its right neighbour,
    every embedded image avoids the hatted pattern (k = pattern length)."""
    cases = [
        ((2, 1), 1),
        ((1, 3, 2), 2),
        ((2, 1, 3), 1),
        ((3, 2, 1), 1),
        ((3, 2, 1), 2),
    ]
    for tau, i in cases:
        assert tau[i - 1] == tau[i] + 1
        k = len(tau)
        for n in range(6):
            for pi in itertools.permutations(range(1, n + 1)):
                image = run_embedding(pi, k)
                assert _avoids_marked(image, tau, i, barred=False), (tau, i, pi)
