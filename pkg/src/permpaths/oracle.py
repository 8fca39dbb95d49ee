"""Brute-force enumeration of avoidance classes and the sequences they count.

The enumerator iterates all n! permutations and filters by the avoidance
predicates, deliberately ignoring every structural shortcut so that it can
serve as an independent check of the bijections.  Number sequences come from
closed forms or recurrences (Catalan, Motzkin) or from exhaustive path
filtering (Fine), never from stored constant tables.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple

from .paths import enumerate_dyck, has_peak_at_height
from .patterns import (
    BAR,
    HAT,
    MarkedPattern,
    PatternLike,
    _avoids_marked,
    as_marked,
    contains_classical,
    neighbor_condition_holds,
)
from .permutations import Permutation


def enumerate_class(n: int, constraints: Iterable[PatternLike]) -> Iterator[Permutation]:
    """Yield all length-n permutations avoiding every constraint, in
    lexicographic order.

    >>> list(enumerate_class(3, [(2, 1)]))
    [(1, 2, 3)]
    >>> list(enumerate_class(3, ["^21"]))
    [(2, 3, 1), (3, 1, 2), (3, 2, 1)]
    """
    if n < 0:
        raise ValueError("length must be >= 0")
    marked = tuple(as_marked(c) for c in constraints)
    # classical patterns filter hardest and cheapest: check them first
    marked = tuple(sorted(marked, key=lambda mp: mp.mark is not None))
    for perm in itertools.permutations(range(1, n + 1)):
        ok = True
        for mp in marked:
            if mp.mark is None:
                if contains_classical(perm, mp.pattern):
                    ok = False
                    break
            elif not _avoids_marked(perm, mp.pattern, mp.marked_index, mp.mark == BAR):
                ok = False
                break
        if ok:
            yield perm


def count_class(n: int, constraints: Iterable[PatternLike]) -> int:
    return sum(1 for _ in enumerate_class(n, constraints))


@lru_cache(maxsize=None)
def all_132_avoiders(n: int) -> tuple[Permutation, ...]:
    """Materialized S_n(132), cached: the workhorse set for every sweep."""
    return tuple(enumerate_class(n, [(1, 3, 2)]))


def catalan(n: int) -> int:
    """Closed form via the central binomial coefficient.

    >>> [catalan(n) for n in range(7)]
    [1, 1, 2, 5, 14, 42, 132]
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    return math.comb(2 * n, n) // (n + 1)


def motzkin_number(n: int) -> int:
    """Convolution recurrence M_n = M_{n-1} + sum M_j M_{n-2-j}.

    >>> [motzkin_number(n) for n in range(8)]
    [1, 1, 2, 4, 9, 21, 51, 127]
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    m = [1] * (n + 1)
    for i in range(2, n + 1):
        m[i] = m[i - 1] + sum(m[j] * m[i - 2 - j] for j in range(i - 1))
    return m[n]


def fine_number(n: int) -> int:
    """Count Dyck n-paths with no peak at height 1 by exhaustive filtering.

    >>> [fine_number(n) for n in range(6)]
    [1, 0, 1, 2, 6, 18]
    """
    return sum(1 for w in enumerate_dyck(n) if not has_peak_at_height(w, 1))


def check_hat_bar_criterion(pattern: tuple[int, ...], marked_index: int,
                            n_max: int) -> bool:
    """Compare hat- and bar-avoidance classes of one marked pattern.

    Returns True iff exhaustive agreement up to n_max matches the neighbour
    condition: the classes coincide for every n <= n_max exactly when the
    marked element differs by more than 1 from both neighbours.  With
    n_max >= len(pattern) a violating pattern always exhibits a witness.

    >>> check_hat_bar_criterion((2, 1, 3), 2, 6)
    True
    >>> check_hat_bar_criterion((1, 3, 2), 1, 6)
    True
    """
    condition = neighbor_condition_holds(MarkedPattern(pattern, HAT, marked_index))
    classes_equal = True
    for n in range(1, n_max + 1):
        for perm in itertools.permutations(range(1, n + 1)):
            hat = _avoids_marked(perm, pattern, marked_index, barred=False)
            bar = _avoids_marked(perm, pattern, marked_index, barred=True)
            if hat != bar:
                classes_equal = False
                break
        if not classes_equal:
            break
    return classes_equal == condition


class GrowthTable(NamedTuple):
    counts: tuple[int, ...]
    ratios: tuple[float | None, ...]


def growth_table(constraint: PatternLike, n_max: int) -> GrowthTable:
    """Class sizes for n = 1..n_max plus consecutive ratios for eyeballing
    the growth rate.  Makes no asymptotic claim.

    >>> growth_table((1, 3, 2), 5).counts
    (1, 2, 5, 14, 42)
    """
    mp = as_marked(constraint)
    counts = tuple(count_class(n, [mp]) for n in range(1, n_max + 1))
    ratios: list[float | None] = [None]
    for prev, cur in zip(counts, counts[1:]):
        ratios.append(cur / prev if prev else None)
    return GrowthTable(counts, tuple(ratios[: len(counts)]))
