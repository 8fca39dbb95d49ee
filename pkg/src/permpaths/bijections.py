"""Four explicit bijections between restricted permutations and lattice paths.

* ``phi``: 132-avoiding permutations -> Dyck words, by the left-to-right
  reading rule (with an equivalent recursive form ``phi_recursive``).
* ``theta``: distinct-integer sequences -> Dyck words whose steps carry
  integer labels; restricted to 132-avoiders it is a bijection.
* ``simion_schmidt``: 132-avoiders -> 123-avoiders, preserving left-to-right
  minima in value and position.
* ``psi``: Motzkin words of length n -> 132-avoiding permutations of length
  n+1 with no adjacent consecutive values, through a geometric representation
  of left-to-right-minimum blocks as arcs on the number line.

All maps come with inverses and reject inputs outside their domain with
:class:`~permpaths.permutations.DomainError`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .patterns import contains_classical
from .permutations import (
    DomainError,
    Permutation,
    ensure_permutation,
    has_adjacent_consecutive_factor,
    ltrm_decompose,
    satisfies_ltrm_conditions,
)
from .paths import DyckWord, MotzkinWord, heights, parse_path, proper_segments

IndexedStep = tuple[str, int]
IndexedDyckPath = tuple[IndexedStep, ...]


def _require_132_avoiding(perm: Permutation) -> None:
    if contains_classical(perm, (1, 3, 2)):
        raise DomainError(f"{perm} contains the pattern 132")


def _count_greater_after(perm: Sequence[int]) -> tuple[int, ...]:
    n = len(perm)
    return tuple(
        sum(1 for j in range(i + 1, n) if perm[j] > perm[i]) for i in range(n)
    )


def phi(perm: Sequence[int]) -> DyckWord:
    """Map a 132-avoiding permutation to a Dyck word, reading left to right.

    Reading entry i, the path climbs to one more than the number of later,
    larger entries, then takes a single down-step.

    >>> phi((5, 4, 6, 2, 1, 3, 7))
    'uuududduududdd'
    >>> phi((1, 2, 3))
    'uuuddd'
    """
    perm = ensure_permutation(perm)
    _require_132_avoiding(perm)
    out = []
    height = 0
    for h in _count_greater_after(perm):
        target = h + 1
        # 132-avoidance guarantees the path never sits above the target here
        out.append("u" * (target - height))
        out.append("d")
        height = h
    return "".join(out)


def phi_recursive(perm: Sequence[int]) -> DyckWord:
    """Equivalent recursive form of :func:`phi`: split at the maximum m,
    emit u <left part> d <right part>.

    >>> phi_recursive((4, 5, 2, 3, 6, 1))
    'uuudduudddud'
    """
    perm = ensure_permutation(perm)
    _require_132_avoiding(perm)

    def rec(seq: tuple[int, ...]) -> str:
        if not seq:
            return ""
        pos = seq.index(max(seq))
        return "u" + rec(seq[:pos]) + "d" + rec(seq[pos + 1 :])

    return rec(perm)


def phi_inverse(word: DyckWord) -> Permutation:
    """Inverse of :func:`phi`; the image is always 132-avoiding.

    After the i-th down-step the path sits at the number of later, larger
    entries of the i-th value, which pins that value to the (h+1)-th largest
    value still unused.

    >>> phi_inverse("uuududduududdd")
    (5, 4, 6, 2, 1, 3, 7)
    """
    word = parse_path(word, "dyck")
    height = 0
    hs = []
    for ch in word:
        height += 1 if ch == "u" else -1
        if ch == "d":
            hs.append(height)
    avail = list(range(1, len(hs) + 1))
    out = []
    for h in hs:
        out.append(avail.pop(len(avail) - 1 - h))
    return tuple(out)


# ---------------------------------------------------------------------------
# theta and indexed Dyck paths


def theta(seq: Sequence[int]) -> IndexedDyckPath:
    """Map a distinct-integer sequence to a label-indexed Dyck path.

    Splitting at the maximum m gives <left part> u_m <right part> d_m,
    recursively.  Restricted to 132-avoiding permutations the unlabelled
    word determines the labels, making the map bijective.

    >>> format_indexed_path(theta((4, 5, 2, 3, 6, 1)))
    'u4 d4 u5 u2 d2 u3 d3 d5 u6 u1 d1 d6'
    """
    seq = tuple(seq)
    if len(set(seq)) != len(seq):
        raise ValueError("theta requires pairwise distinct entries")

    def rec(s: tuple[int, ...]) -> IndexedDyckPath:
        if not s:
            return ()
        m = max(s)
        pos = s.index(m)
        return rec(s[:pos]) + (("u", m),) + rec(s[pos + 1 :]) + (("d", m),)

    return rec(seq)


def indexed_path_word(path: IndexedDyckPath) -> DyckWord:
    """Forget the labels."""
    return "".join(step for step, _ in path)


def format_indexed_path(path: IndexedDyckPath) -> str:
    return " ".join(f"{step}{label}" for step, label in path)


def parse_indexed_path(text: str) -> IndexedDyckPath:
    """Parse the "u4 d4 u5 ..." format."""
    steps = []
    for pos, token in enumerate(text.split(), start=1):
        if len(token) < 2 or token[0] not in "ud":
            raise ValueError(f"bad indexed step {token!r} at token {pos}")
        try:
            steps.append((token[0], int(token[1:])))
        except ValueError:
            raise ValueError(f"bad label in {token!r} at token {pos}") from None
    return tuple(steps)


def index_dyck_word(word: DyckWord) -> IndexedDyckPath:
    """The unique labelling of a Dyck word arising from theta on a
    132-avoiding permutation.

    The final down-step and its matching up-step get the largest value; the
    segment between them recurses on the smallest remaining values, the
    prefix on the rest.
    """
    word = parse_path(word, "dyck")

    def build(w: str, values: tuple[int, ...]) -> IndexedDyckPath:
        if not w:
            return ()
        balance = 0
        a = 0
        for idx in range(len(w) - 2, -1, -1):
            balance += 1 if w[idx] == "u" else -1
            if balance == 1:
                a = idx
                break
        inner = (len(w) - 2 - a) // 2
        m = values[-1]
        return (
            build(w[:a], values[inner:-1])
            + (("u", m),)
            + build(w[a + 1 : -1], values[:inner])
            + (("d", m),)
        )

    return build(word, tuple(range(1, len(word) // 2 + 1)))


def theta_inverse(word: DyckWord) -> Permutation:
    """Read the up-step labels of the unique indexing, left to right.

    >>> theta_inverse("uduududduudd")
    (4, 5, 2, 3, 6, 1)
    """
    return tuple(label for step, label in index_dyck_word(word) if step == "u")


def _label_spans(path: IndexedDyckPath) -> dict[int, tuple[int, int]]:
    spans: dict[int, list[int | None]] = {}
    for pos, (step, label) in enumerate(path):
        spans.setdefault(label, [None, None])[0 if step == "u" else 1] = pos
    out = {}
    for label, (u_pos, d_pos) in spans.items():
        if u_pos is None or d_pos is None:
            raise ValueError(f"label {label} missing an up- or down-step")
        out[label] = (u_pos, d_pos)
    return out


def validate_indexed_path(path: IndexedDyckPath) -> None:
    """Check the well-matching invariants; raise ValueError on violation.

    Each label appears on exactly one up- and one down-step, the up-step
    first, with a balanced subword in between, and the unlabelled word is a
    valid Dyck word.
    """
    word = indexed_path_word(path)
    parse_path(word, "dyck")
    labels = [label for _, label in path]
    if len(set(labels)) * 2 != len(labels):
        raise ValueError("each label must appear exactly twice")
    for label, (u_pos, d_pos) in _label_spans(path).items():
        if u_pos > d_pos:
            raise ValueError(f"label {label}: down-step precedes up-step")
        balance = 0
        for step, _ in path[u_pos + 1 : d_pos]:
            balance += 1 if step == "u" else -1
            if balance < 0:
                raise ValueError(f"label {label}: intervening subword unbalanced")
        if balance != 0:
            raise ValueError(f"label {label}: intervening subword unbalanced")


def nested_pairs_have_smaller_labels(path: IndexedDyckPath) -> bool:
    """Whenever two well-matching pairs meet, the inner one carries the
    smaller label."""
    spans = list(_label_spans(path).items())
    for (la, (ua, da)), (lb, (ub, db)) in itertools.combinations(spans, 2):
        if ua < ub < da < db or ub < ua < db < da:
            return False  # crossing pairs: not well-matched at all
        if ua < ub and db < da and not lb < la:
            return False
        if ub < ua and da < db and not la < lb:
            return False
    return True


def peaks_carry_equal_labels(path: IndexedDyckPath) -> bool:
    """Every up-step immediately followed by a down-step shares its label."""
    return all(
        path[j][1] == path[j + 1][1]
        for j in range(len(path) - 1)
        if path[j][0] == "u" and path[j + 1][0] == "d"
    )


def valleys_carry_consecutive_labels(path: IndexedDyckPath) -> bool:
    """Every down-step immediately followed by an up-step reads d_k u_{k+1}."""
    return all(
        path[j + 1][1] == path[j][1] + 1
        for j in range(len(path) - 1)
        if path[j][0] == "d" and path[j + 1][0] == "u"
    )


# ---------------------------------------------------------------------------
# Simion-Schmidt


def simion_schmidt(perm: Sequence[int]) -> Permutation:
    """Map a 132-avoider to a 123-avoider, fixing the left-to-right minima
    and refilling the other slots with the largest available value above the
    running minimum.

    >>> simion_schmidt((7, 5, 6, 1, 2, 3, 4))
    (7, 5, 6, 1, 4, 3, 2)
    """
    perm = ensure_permutation(perm)
    _require_132_avoiding(perm)
    n = len(perm)
    out: list[int] = []
    used = set()
    x = 0
    for pos, v in enumerate(perm):
        if pos == 0 or v < x:
            out.append(v)
            used.add(v)
            x = v
        else:
            k = n
            while k in used:
                k -= 1
            assert k > x, "no available value above the running minimum"
            out.append(k)
            used.add(k)
    return tuple(out)


def simion_schmidt_inverse(perm: Sequence[int]) -> Permutation:
    """Inverse map: non-minimum slots refill with the smallest available
    value above the running minimum.

    >>> simion_schmidt_inverse((7, 5, 6, 1, 4, 3, 2))
    (7, 5, 6, 1, 2, 3, 4)
    """
    perm = ensure_permutation(perm)
    if contains_classical(perm, (1, 2, 3)):
        raise DomainError(f"{perm} contains the pattern 123")
    n = len(perm)
    out: list[int] = []
    used = set()
    x = 0
    for pos, v in enumerate(perm):
        if pos == 0 or v < x:
            out.append(v)
            used.add(v)
            x = v
        else:
            k = x + 1
            while k in used:
                k += 1
            assert k <= n, "no available value above the running minimum"
            out.append(k)
            used.add(k)
    return tuple(out)


# ---------------------------------------------------------------------------
# geometric representation and psi


@dataclass(frozen=True)
class GeometricRepresentation:
    """Arcs and isolated points on the number line encoding the blocks.

    Each block (v1, ..., vm) contributes the chained arcs (v1,v2), ...,
    (v_{m-1},v_m); singleton blocks contribute their value to ``singles``.
    """

    arcs: tuple[tuple[int, int], ...]
    singles: tuple[int, ...]


def representation_of_blocks(blocks: Iterable[Sequence[int]]) -> GeometricRepresentation:
    arcs: list[tuple[int, int]] = []
    singles: list[int] = []
    for block in blocks:
        block = tuple(block)
        if len(block) == 1:
            singles.append(block[0])
        else:
            arcs.extend(zip(block, block[1:]))
    return GeometricRepresentation(tuple(sorted(arcs)), tuple(sorted(singles)))


def geometric_representation(perm: Sequence[int]) -> GeometricRepresentation:
    """Arc diagram of the left-to-right-minimum blocks.

    Requires decreasing block heads and increasing blocks.

    >>> g = geometric_representation((8, 6, 5, 7, 9, 3, 2, 1, 4, 10))
    >>> g.arcs
    ((1, 4), (4, 10), (5, 7), (7, 9))
    >>> g.singles
    (2, 3, 6, 8)
    """
    perm = ensure_permutation(perm)
    decomp = ltrm_decompose(perm)
    if not satisfies_ltrm_conditions(decomp):
        raise DomainError(
            f"{perm}: blocks must have decreasing heads and increase within")
    return representation_of_blocks(decomp.blocks)


def blocks_overlap(g: GeometricRepresentation) -> bool:
    """True iff two arcs strictly interleave (a < c < b < d).

    Arcs of a single block chain through shared endpoints and can never
    strictly interleave, so any interleaving pair witnesses two overlapping
    blocks.

    >>> blocks_overlap(representation_of_blocks([(1, 7, 11, 13), (2, 6, 12)]))
    True
    """
    for (a, b), (c, d) in itertools.combinations(g.arcs, 2):
        if a < c < b < d or c < a < d < b:
            return True
    return False


def psi(word: MotzkinWord) -> Permutation:
    """Map a Motzkin word of length n to a permutation of length n+1.

    For every level, the touch points of each maximal flat-free excursion
    form one block of abscissas; concatenating all blocks in decreasing
    order of their first elements gives the permutation.

    >>> psi("ufduududd")
    (8, 6, 5, 7, 9, 3, 2, 1, 4, 10)
    >>> psi("fff")
    (4, 3, 2, 1)
    """
    word = parse_path(word, "motzkin")
    top = max(heights(word))
    blocks: list[tuple[int, ...]] = []
    for level in range(top + 1):
        blocks.extend(proper_segments(word, level))
    blocks.sort(key=lambda b: b[0], reverse=True)
    return tuple(v for block in blocks for v in block)


def psi_inverse(perm: Sequence[int]) -> MotzkinWord:
    """Inverse of :func:`psi`.

    Walk the values 1..n+1 over the geometric representation: go up when i
    starts an arc (even if it also ends one), go down when i+1 ends an arc,
    otherwise go flat.

    >>> psi_inverse((8, 6, 5, 7, 9, 3, 2, 1, 4, 10))
    'ufduududd'
    >>> psi_inverse((2, 1))
    'f'
    """
    perm = ensure_permutation(perm)
    _require_132_avoiding(perm)
    if has_adjacent_consecutive_factor(perm):
        raise DomainError(f"{perm} contains an adjacent consecutive factor")
    g = geometric_representation(perm)
    arc_starts = {a for a, _ in g.arcs}
    arc_ends = {b for _, b in g.arcs}
    steps = []
    for i in range(1, len(perm)):
        if i in arc_starts:
            steps.append("u")
        elif i + 1 in arc_ends:
            steps.append("d")
        else:
            steps.append("f")
    return "".join(steps)
