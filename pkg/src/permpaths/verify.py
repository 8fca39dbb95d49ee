"""Exhaustive verification suites tying the maps to the path classes.

Every checker replays one of the package's structural claims at desk scale:
it enumerates the full avoidance class through the brute-force oracle,
pushes it through the relevant bijection, and compares against the lattice
paths filtered by their own predicates.  Each returns ``(ok, lines)`` where
``lines`` is a human-readable transcript, one entry per checked instance.
"""

from __future__ import annotations

import itertools

from .bijections import (
    indexed_path_word,
    nested_pairs_have_smaller_labels,
    peaks_carry_equal_labels,
    phi,
    phi_recursive,
    psi,
    psi_inverse,
    simion_schmidt,
    theta,
    valleys_carry_consecutive_labels,
    validate_indexed_path,
)
from .ecotree import OMEGA, ROOT_PERM, iter_levels, verify_succession
from .oracle import (
    all_132_avoiders,
    catalan,
    check_hat_bar_criterion,
    motzkin_number,
)
from .paths import contains_u_dpow_u, enumerate_dyck, enumerate_motzkin, has_peak_at_height, stats
from .patterns import HAT, MarkedPattern, _avoids_marked, contains_classical
from .permutations import has_adjacent_consecutive_factor, left_to_right_minima


def _hat_increasing(p: int) -> MarkedPattern:
    # increasing pattern of length p+1, hat on the first element
    return MarkedPattern(tuple(range(1, p + 2)), HAT, 1)


def _hat_descending_then_top(p: int) -> MarkedPattern:
    # (p-1)(p-2)...2 1 p with the hat on the 1 (slot p-1)
    return MarkedPattern(tuple(range(p - 1, 0, -1)) + (p,), HAT, p - 1)


def _hatted_members(members, mp: MarkedPattern):
    return [pi for pi in members if _avoids_marked(pi, mp.pattern, mp.marked_index, False)]


def verify_peak_height_classes(n_max: int) -> tuple[bool, list[str]]:
    """phi maps the hat-marked increasing class onto Dyck paths with no peak
    at height p, for every 1 <= p <= n; for p > n the class is all of
    S_n(132)."""
    ok = True
    lines = []
    for n in range(1, n_max + 1):
        members = all_132_avoiders(n)
        words = tuple(enumerate_dyck(n))
        for p in range(1, n + 1):
            image = {phi(pi) for pi in _hatted_members(members, _hat_increasing(p))}
            expected = {w for w in words if not has_peak_at_height(w, p)}
            good = image == expected
            ok &= good
            lines.append(f"n={n} p={p}: image {len(image)} paths, "
                         f"{'ok' if good else 'MISMATCH'}")
        full = _hatted_members(members, _hat_increasing(n + 1))
        good = tuple(full) == members
        ok &= good
        lines.append(f"n={n} p={n + 1}: class collapses to all of S_n(132), "
                     f"{'ok' if good else 'MISMATCH'}")
    return ok, lines


def verify_path_factor_classes(n_max: int) -> tuple[bool, list[str]]:
    """theta (labels dropped) maps the hat-marked descending-then-top class
    onto Dyck paths with no factor u d^(p-2) u, for 3 <= p <= n."""
    ok = True
    lines = []
    for n in range(3, n_max + 1):
        members = all_132_avoiders(n)
        words = tuple(enumerate_dyck(n))
        for p in range(3, n + 1):
            mp = _hat_descending_then_top(p)
            image = {indexed_path_word(theta(pi)) for pi in _hatted_members(members, mp)}
            expected = {w for w in words if not contains_u_dpow_u(w, p)}
            good = image == expected
            ok &= good
            lines.append(f"n={n} p={p}: image {len(image)} paths, "
                         f"{'ok' if good else 'MISMATCH'}")
    return ok, lines


def verify_factor_free_characterization(n_max: int) -> tuple[bool, list[str]]:
    """Within S_n(132), hat-avoiding 213-marked-at-1 is exactly factor-freeness."""
    mp = MarkedPattern((2, 1, 3), HAT, 2)
    ok = True
    lines = []
    for n in range(1, n_max + 1):
        members = all_132_avoiders(n)
        hatted = set(_hatted_members(members, mp))
        factor_free = {pi for pi in members if not has_adjacent_consecutive_factor(pi)}
        good = hatted == factor_free
        ok &= good
        lines.append(f"n={n}: {len(hatted)} hat-avoiders vs {len(factor_free)} "
                     f"factor-free, {'ok' if good else 'MISMATCH'}")
    return ok, lines


def verify_motzkin_bijection(n_max: int) -> tuple[bool, list[str]]:
    """psi is a bijection from Motzkin n-words onto the factor-free
    132-avoiders of length n+1, with both roundtrips the identity."""
    mp = MarkedPattern((2, 1, 3), HAT, 2)
    ok = True
    lines = []
    for n in range(n_max + 1):
        words = tuple(enumerate_motzkin(n))
        images = [psi(w) for w in words]
        members = _hatted_members(all_132_avoiders(n + 1), mp)
        good = (
            len(set(images)) == len(words)
            and set(images) == set(members)
            and all(psi_inverse(pi) == w for w, pi in zip(words, images))
            and all(psi(psi_inverse(pi)) == pi for pi in members)
        )
        ok &= good
        lines.append(f"n={n}: {len(words)} words <-> {len(members)} permutations, "
                     f"{'ok' if good else 'MISMATCH'}")
    return ok, lines


def verify_hat_bar_boundary(n_max: int) -> tuple[bool, list[str]]:
    """Hat- and bar-avoidance agree for all n <= n_max exactly when the
    marked element is not within 1 of either neighbour; swept over every
    marked pattern of length 2..4."""
    ok = True
    lines = []
    for k in (2, 3, 4):
        agreements = 0
        cases = 0
        for tau in itertools.permutations(range(1, k + 1)):
            for i in range(1, k + 1):
                cases += 1
                if check_hat_bar_criterion(tau, i, n_max):
                    agreements += 1
        good = agreements == cases
        ok &= good
        lines.append(f"k={k}: {agreements}/{cases} marked patterns consistent, "
                     f"{'ok' if good else 'MISMATCH'}")
    return ok, lines


def verify_generating_tree(depth: int) -> tuple[bool, list[str]]:
    """Level sizes follow the Motzkin numbers, every node's child labels obey
    the succession rule, and each level's permutations are exactly the
    factor-free 132-avoiders one longer."""
    mp = MarkedPattern((2, 1, 3), HAT, 2)
    ok = True
    lines = []
    for n, nodes in enumerate(iter_levels(depth), start=1):
        size_ok = len(nodes) == motzkin_number(n)
        succession_ok = all(verify_succession(node) for node in nodes)
        members = _hatted_members(all_132_avoiders(n + 1), mp)
        set_ok = {node.perm for node in nodes} == set(members)
        good = size_ok and succession_ok and set_ok
        ok &= good
        lines.append(
            f"level {n}: {len(nodes)} nodes (motzkin {motzkin_number(n)}), "
            f"succession {'ok' if succession_ok else 'BAD'}, "
            f"class match {'ok' if set_ok else 'BAD'}")
    root_ok = ROOT_PERM == (2, 1) and OMEGA.root_label == 2
    ok &= root_ok
    lines.append(f"root 21 with label 2: {'ok' if root_ok else 'BAD'}")
    return ok, lines


def _minima_and_labels_ok(pi: tuple[int, ...]) -> bool:
    n = len(pi)
    word = phi(pi)
    if word != phi_recursive(pi):
        return False
    peaks = stats(word).peaks
    minima = left_to_right_minima(pi)
    if len(peaks) != len(minima):
        return False
    for (_, height), idx in zip(peaks, minima):
        taller_after = sum(1 for j in range(idx, n) if pi[j] > pi[idx - 1])
        if height != taller_after + 1:
            return False
    path = theta(pi)
    try:
        validate_indexed_path(path)
    except ValueError:
        return False
    return (nested_pairs_have_smaller_labels(path)
            and peaks_carry_equal_labels(path)
            and valleys_carry_consecutive_labels(path))


def verify_minima_peak_statistics(n_max: int) -> tuple[bool, list[str]]:
    """Peaks of phi(pi) correspond 1-1, in order, to the left-to-right minima
    of pi, the peak for entry i at height one more than the number of later,
    larger entries; phi and its recursive form agree; theta images satisfy
    the well-matching label properties."""
    ok = True
    lines = []
    for n in range(n_max + 1):
        members = all_132_avoiders(n)
        good = all(_minima_and_labels_ok(pi) for pi in members)
        ok &= good
        lines.append(f"n={n}: {len(members)} permutations checked, "
                     f"{'ok' if good else 'MISMATCH'}")
    return ok, lines


def verify_wilf_transport(n_max: int, p_max: int = 5) -> tuple[bool, list[str]]:
    """The minima-preserving map sends 132-avoiders that hat-avoid the
    increasing pattern (hat on last) onto 123-avoiders that hat-avoid
    1 p (p-1) ... 2 (hat on the p)."""
    ok = True
    lines = []
    for n in range(n_max + 1):
        members = all_132_avoiders(n)
        targets = tuple(pi for pi in itertools.permutations(range(1, n + 1))
                        if not contains_classical(pi, (1, 2, 3)))
        for p in range(1, p_max + 1):
            source_mp = MarkedPattern(tuple(range(1, p + 1)), HAT, p)
            target_mp = MarkedPattern((1, p) + tuple(range(p - 1, 1, -1)), HAT, 2) \
                if p >= 2 else MarkedPattern((1,), HAT, 1)
            image = {simion_schmidt(pi) for pi in _hatted_members(members, source_mp)}
            expected = set(_hatted_members(targets, target_mp))
            good = image == expected
            ok &= good
            lines.append(f"n={n} p={p}: {len(image)} mapped, "
                         f"{'ok' if good else 'MISMATCH'}")
    return ok, lines


THEOREM_CHECKS = {
    "cat": (verify_peak_height_classes,
            "phi: hat-marked increasing classes <-> no peak at height p"),
    "udu": (verify_path_factor_classes,
            "theta: hat-marked classes <-> no u d...d u factor"),
    "fac": (verify_factor_free_characterization,
            "hat-avoiding 2^13 within S_n(132) = no adjacent consecutive factor"),
    "mot": (verify_motzkin_bijection,
            "psi: Motzkin words <-> factor-free 132-avoiders"),
    "equ": (verify_hat_bar_boundary,
            "hat class = bar class exactly under the neighbour condition"),
    "eco": (verify_generating_tree,
            "generating tree: Motzkin level sizes and succession labels"),
    "sta": (verify_minima_peak_statistics,
            "peaks of phi <-> left-to-right minima; label properties of theta"),
}
