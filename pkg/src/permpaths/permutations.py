"""Permutations in one-line notation over {1, ..., n}.

A permutation is a plain tuple of ints containing each of 1..n exactly once;
the empty tuple is the unique permutation of length 0.  This module covers
order-isomorphic reduction, the three trivial symmetries, left-to-right
minimum structure, adjacent consecutive factors, and the embedding that
replaces every value by a run of consecutive integers.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple, Sequence

Permutation = tuple[int, ...]


class DomainError(ValueError):
    """Input lies outside the domain of the requested map."""


def is_permutation(seq: Sequence[int]) -> bool:
    """True iff seq contains each of 1..len(seq) exactly once.

    >>> [is_permutation(s) for s in [(), (1,), (2, 1), (1, 3), (1, 1)]]
    [True, True, True, False, False]
    """
    return sorted(seq) == list(range(1, len(seq) + 1))


def ensure_permutation(seq: Iterable[int]) -> Permutation:
    """Coerce to a tuple and reject anything that is not a permutation of 1..n."""
    perm = tuple(seq)
    if not is_permutation(perm):
        raise ValueError(f"not a permutation of 1..{len(perm)}: {perm}")
    return perm


def parse_permutation(text: str) -> Permutation:
    """Parse the one-line text format, e.g. "5 4 6 2 1 3 7"."""
    values = []
    for pos, token in enumerate(text.split(), start=1):
        try:
            values.append(int(token))
        except ValueError:
            raise ValueError(f"bad integer {token!r} at token {pos}") from None
    return ensure_permutation(values)


def format_permutation(perm: Sequence[int]) -> str:
    return " ".join(str(v) for v in perm)


def reduce(q: Sequence[int]) -> Permutation:
    """Relabel a sequence of distinct integers order-isomorphically onto 1..m.

    The i-th smallest entry becomes i.  Duplicate entries are rejected; see
    :func:`reduce_multiset` for the dense-rank variant.

    >>> reduce((3, 5, 7, 1, 4, 6))
    (2, 4, 6, 1, 3, 5)
    >>> reduce((1, 2, 3))
    (1, 2, 3)
    """
    rank = {v: r for r, v in enumerate(sorted(q), start=1)}
    if len(rank) != len(q):
        raise ValueError("reduce requires pairwise distinct entries")
    return tuple(rank[v] for v in q)


def reduce_multiset(q: Sequence[int]) -> tuple[int, ...]:
    """Dense-rank reduction: the i-th smallest *distinct* value becomes i,
    so equal entries share a rank.

    >>> reduce_multiset((3, 5, 7, 1, 3, 6))
    (2, 3, 5, 1, 2, 4)
    """
    rank = {v: r for r, v in enumerate(sorted(set(q)), start=1)}
    return tuple(rank[v] for v in q)


def reverse(perm: Sequence[int]) -> Permutation:
    return tuple(reversed(perm))


def complement(perm: Sequence[int]) -> Permutation:
    """Replace each value x by n+1-x.

    >>> complement((1, 3, 2))
    (3, 1, 2)
    """
    n = len(perm)
    return tuple(n + 1 - v for v in perm)


def inverse(perm: Sequence[int]) -> Permutation:
    """Group inverse: position of each value.

    >>> inverse((2, 3, 1))
    (3, 1, 2)
    """
    out = [0] * len(perm)
    for pos, v in enumerate(perm, start=1):
        out[v - 1] = pos
    return tuple(out)


SYMMETRIES = {"reverse": reverse, "complement": complement, "inverse": inverse}


def symmetry(perm: Sequence[int], which: str) -> Permutation:
    """Apply one of the trivial symmetries: reverse, complement or inverse."""
    try:
        fn = SYMMETRIES[which]
    except KeyError:
        raise ValueError(f"unknown symmetry {which!r}; choose from {sorted(SYMMETRIES)}") from None
    return fn(ensure_permutation(perm))


def left_to_right_minima(perm: Sequence[int]) -> tuple[int, ...]:
    """1-based indices i with perm[i] smaller than every earlier entry.

    >>> left_to_right_minima((5, 4, 6, 2, 1, 3, 7))
    (1, 2, 4, 5)
    """
    out = []
    best: int | None = None
    for idx, v in enumerate(perm, start=1):
        if best is None or v < best:
            out.append(idx)
            best = v
    return tuple(out)


class LtrmDecomposition(NamedTuple):
    """Blocks of a permutation, each starting at a left-to-right minimum.

    ``indices`` holds the 1-based start position of each block; concatenating
    ``blocks`` restores the source permutation.
    """

    blocks: tuple[Permutation, ...]
    indices: tuple[int, ...]


def ltrm_decompose(perm: Sequence[int]) -> LtrmDecomposition:
    """Cut perm before every left-to-right minimum.

    >>> ltrm_decompose((5, 4, 6, 2, 1, 3, 7)).blocks
    ((5,), (4, 6), (2,), (1, 3, 7))
    """
    perm = tuple(perm)
    indices = left_to_right_minima(perm)
    blocks = []
    for j, start in enumerate(indices):
        end = indices[j + 1] - 1 if j + 1 < len(indices) else len(perm)
        blocks.append(perm[start - 1 : end])
    return LtrmDecomposition(tuple(blocks), indices)


def satisfies_ltrm_conditions(decomp: LtrmDecomposition) -> bool:
    """True iff block heads strictly decrease left to right and every block
    is strictly increasing."""
    heads = [b[0] for b in decomp.blocks]
    if any(nxt >= prev for nxt, prev in zip(heads[1:], heads)):
        return False
    return all(all(x < y for x, y in zip(b, b[1:])) for b in decomp.blocks)


def has_adjacent_consecutive_factor(perm: Sequence[int]) -> bool:
    """True iff some adjacent pair reads a, a+1.

    >>> has_adjacent_consecutive_factor((2, 3, 1))
    True
    >>> has_adjacent_consecutive_factor((8, 6, 5, 7, 9, 3, 2, 1, 4, 10))
    False
    """
    return any(b == a + 1 for a, b in zip(perm, perm[1:]))


def run_embedding(perm: Sequence[int], k: int) -> Permutation:
    """Replace each value v by the increasing run vk-k+1, ..., vk in place.

    >>> run_embedding((3, 1, 2), 3)
    (7, 8, 9, 1, 2, 3, 4, 5, 6)
    >>> run_embedding((2, 1), 2)
    (3, 4, 1, 2)
    """
    if k < 1:
        raise ValueError("run length k must be >= 1")
    out: list[int] = []
    for v in ensure_permutation(perm):
        out.extend(range(v * k - k + 1, v * k + 1))
    return tuple(out)
