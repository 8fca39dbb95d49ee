"""Slow, definition-literal reference implementations used to cross-check
the library's optimized predicates."""

import itertools


def reduce_ref(seq):
    order = sorted(seq)
    return tuple(order.index(v) + 1 for v in seq)


def contains_ref(perm, pattern):
    pattern = tuple(pattern)
    return any(
        reduce_ref(sub) == pattern
        for sub in itertools.combinations(perm, len(pattern))
    )


def avoids_marked_ref(perm, pattern, index, barred):
    """Direct transcription of the bar/hat avoidance definitions."""
    n, k = len(perm), len(pattern)
    pattern = tuple(pattern)
    rest = reduce_ref(pattern[: index - 1] + pattern[index:])
    for occ in itertools.combinations(range(n), k - 1):
        if reduce_ref([perm[j] for j in occ]) != rest:
            continue
        if barred:
            lo = occ[index - 2] + 1 if index >= 2 else 0
            hi = occ[index - 1] if index <= k - 1 else n
            candidates = [t for t in range(lo, hi) if t not in occ]
        else:
            candidates = [t for t in range(n) if t not in occ]
        if not any(
            reduce_ref([perm[j] for j in sorted(set(occ) | {t})]) == pattern
            for t in candidates
        ):
            return False
    return True
