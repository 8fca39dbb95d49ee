"""Classical containment plus bar- and hat-marked pattern avoidance.

A marked pattern is a permutation with at most one marked element.  Marks
change what "avoiding" means.  Write rho for the pattern with its marked
element deleted (and reduced):

* classical (no mark): pi contains the pattern if some subsequence of pi is
  order-isomorphic to it; otherwise pi avoids it.
* bar mark on slot i: pi avoids the marked pattern iff every occurrence of
  rho in pi can be extended to an occurrence of the full pattern by inserting
  one element of pi positionally between the occurrence's slots i-1 and i
  (before the first slot when i = 1, after the last when i = k).  The
  inserted element plays exactly the marked role.
* hat mark on slot i: weaker requirement — every occurrence of rho must be
  contained, as an index set, in *some* occurrence of the full pattern.  The
  extra index may sit anywhere and the original elements may change roles.

Avoiding by bar implies avoiding by hat.  Occurrence scanning is exhaustive
over index subsets, so these predicates double as a brute-force oracle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence, Union

from .permutations import Permutation, ensure_permutation

HAT = "hat"
BAR = "bar"


@dataclass(frozen=True)
class MarkedPattern:
    """A pattern permutation with an optional bar/hat mark on one element.

    ``marked_index`` is 1-based.  ``mark`` is None (classical), "bar" or "hat".
    """

    pattern: tuple[int, ...]
    mark: str | None = None
    marked_index: int | None = None

    def __post_init__(self) -> None:
        ensure_permutation(self.pattern)
        if self.mark is None:
            if self.marked_index is not None:
                raise ValueError("marked_index given without a mark")
        else:
            if self.mark not in (HAT, BAR):
                raise ValueError(f"mark must be 'hat' or 'bar', got {self.mark!r}")
            if len(self.pattern) < 1:
                raise ValueError("marked pattern must be non-empty")
            if self.marked_index is None:
                raise ValueError(f"{self.mark} mark requires a marked_index")
            if not 1 <= self.marked_index <= len(self.pattern):
                raise ValueError(f"marked_index {self.marked_index} out of range")

    def reduced(self) -> tuple[int, ...]:
        """Pattern with the marked element deleted, relabelled onto 1..k-1."""
        if self.mark is None:
            raise ValueError("classical pattern has no marked element")
        i = self.marked_index
        rest = self.pattern[: i - 1] + self.pattern[i:]
        rank = {v: r for r, v in enumerate(sorted(rest), start=1)}
        return tuple(rank[v] for v in rest)

    def __str__(self) -> str:
        return format_marked_pattern(self)


PatternLike = Union[MarkedPattern, Sequence[int], str]


def as_marked(obj: PatternLike) -> MarkedPattern:
    """Coerce a MarkedPattern, bare tuple (classical) or text spec."""
    if isinstance(obj, MarkedPattern):
        return obj
    if isinstance(obj, str):
        return parse_marked_pattern(obj)
    return MarkedPattern(tuple(obj))


def parse_marked_pattern(text: str) -> MarkedPattern:
    """Parse pattern text.

    Compact form (values 1..9): digits with '^' (hat) or '-' (bar) prefixed to
    the marked element, e.g. "2^13" or "2-13".  Long form (any size):
    space-separated values, optionally followed by a final "^i" or "-i" token
    giving the 1-based marked position, e.g. "2 1 3 ^2".
    """
    text = text.strip()
    if not text:
        raise ValueError("empty pattern")
    if " " in text:
        tokens = text.split()
        mark = None
        index = None
        if tokens[-1][:1] in ("^", "-"):
            tail = tokens[-1]
            mark = HAT if tail[0] == "^" else BAR
            try:
                index = int(tail[1:])
            except ValueError:
                raise ValueError(f"bad mark position {tail!r}") from None
            tokens = tokens[:-1]
        try:
            values = tuple(int(t) for t in tokens)
        except ValueError:
            raise ValueError(f"bad pattern value in {text!r}") from None
        return MarkedPattern(values, mark, index)

    values_l: list[int] = []
    mark = None
    index = None
    pending: str | None = None
    for pos, ch in enumerate(text, start=1):
        if ch in ("^", "-"):
            if pending is not None or mark is not None:
                raise ValueError(f"more than one mark in {text!r}")
            pending = HAT if ch == "^" else BAR
        elif ch.isdigit():
            if ch == "0":
                raise ValueError(f"pattern values start at 1 (char {pos})")
            values_l.append(int(ch))
            if pending is not None:
                mark = pending
                index = len(values_l)
                pending = None
        else:
            raise ValueError(f"illegal character {ch!r} at position {pos}")
    if pending is not None:
        raise ValueError(f"dangling mark in {text!r}")
    return MarkedPattern(tuple(values_l), mark, index)


def format_marked_pattern(mp: MarkedPattern) -> str:
    """Inverse of :func:`parse_marked_pattern` (compact when values fit digits)."""
    if all(1 <= v <= 9 for v in mp.pattern):
        sigil = {None: "", HAT: "^", BAR: "-"}[mp.mark]
        return "".join(
            (sigil if mp.marked_index == idx else "") + str(v)
            for idx, v in enumerate(mp.pattern, start=1)
        )
    parts = [str(v) for v in mp.pattern]
    if mp.mark is not None:
        parts.append(("^" if mp.mark == HAT else "-") + str(mp.marked_index))
    return " ".join(parts)


def parse_class_spec(text: str) -> tuple[MarkedPattern, ...]:
    """Parse a comma-separated list of patterns, e.g. "132,2^13"."""
    specs = [part.strip() for part in text.split(",")]
    if any(not part for part in specs):
        raise ValueError(f"empty pattern in class spec {text!r}")
    return tuple(parse_marked_pattern(part) for part in specs)


# ---------------------------------------------------------------------------
# classical containment


def contains_classical(perm: Sequence[int], pattern: Sequence[int]) -> bool:
    """True iff some subsequence of perm is order-isomorphic to pattern.

    Lengths 1..3 use direct scans; longer patterns fall back to a pruned
    depth-first search over index choices.  Both routes are exhaustive.

    >>> contains_classical((2, 1, 4, 3), (1, 3, 2))
    True
    >>> contains_classical((1, 2, 3), (2, 1))
    False
    """
    perm = tuple(perm)
    pattern = tuple(pattern)
    n, k = len(perm), len(pattern)
    if k == 0:
        return True
    if n < k:
        return False
    if k == 1:
        return True
    if k == 2:
        return _contains_pair(perm, pattern[0] < pattern[1])
    if k == 3:
        return _contains_triple(perm, pattern)
    return _contains_dfs(perm, pattern)


def _contains_pair(perm: tuple[int, ...], ascending: bool) -> bool:
    if ascending:
        lo = perm[0]
        for v in perm[1:]:
            if v > lo:
                return True
            lo = v
        return False
    hi = perm[0]
    for v in perm[1:]:
        if v < hi:
            return True
        hi = v
    return False


def _contains_triple(perm: tuple[int, ...], pattern: tuple[int, ...]) -> bool:
    c01 = pattern[0] < pattern[1]
    c02 = pattern[0] < pattern[2]
    c12 = pattern[1] < pattern[2]
    n = len(perm)
    for i in range(n - 2):
        vi = perm[i]
        for j in range(i + 1, n - 1):
            vj = perm[j]
            if (vi < vj) != c01:
                continue
            for t in range(j + 1, n):
                vt = perm[t]
                if (vi < vt) == c02 and (vj < vt) == c12:
                    return True
    return False


def _contains_dfs(perm: tuple[int, ...], pattern: tuple[int, ...]) -> bool:
    n, k = len(perm), len(pattern)
    chosen: list[int] = []

    def extend(start: int) -> bool:
        slot = len(chosen)
        if slot == k:
            return True
        tv = pattern[slot]
        for j in range(start, n - (k - slot) + 1):
            v = perm[j]
            ok = True
            for s in range(slot):
                if (v < chosen[s]) != (tv < pattern[s]):
                    ok = False
                    break
            if ok:
                chosen.append(v)
                if extend(j + 1):
                    return True
                chosen.pop()
        return False

    return extend(0)


# ---------------------------------------------------------------------------
# marked avoidance


def _sorted_positions(seq: Sequence[int]) -> tuple[int, ...]:
    # positions of seq in increasing order of value; empty seq -> ()
    return tuple(sorted(range(len(seq)), key=seq.__getitem__))


def _is_order_iso(values: Sequence[int], order: tuple[int, ...]) -> bool:
    # distinct values match the pattern whose sorted-position witness is `order`
    if not order:
        return True
    prev = values[order[0]]
    for idx in order[1:]:
        v = values[idx]
        if v < prev:
            return False
        prev = v
    return True


@lru_cache(maxsize=None)
def _marked_orders(pattern: tuple[int, ...], index: int):
    rest = pattern[: index - 1] + pattern[index:]
    return _sorted_positions(rest), _sorted_positions(pattern)


def _avoids_marked(perm: tuple[int, ...], pattern: tuple[int, ...], index: int,
                   barred: bool) -> bool:
    n, k = len(perm), len(pattern)
    if n < k - 1:
        return True  # no occurrence of the reduced pattern, vacuously avoided
    rest_order, full_order = _marked_orders(pattern, index)
    for occ in itertools.combinations(range(n), k - 1):
        vals = tuple(perm[j] for j in occ)
        if not _is_order_iso(vals, rest_order):
            continue
        if barred:
            lo = occ[index - 2] + 1 if index >= 2 else 0
            hi = occ[index - 1] if index <= k - 1 else n
            extended = False
            for t in range(lo, hi):
                if t in occ:
                    continue
                ext = vals[: index - 1] + (perm[t],) + vals[index - 1 :]
                if _is_order_iso(ext, full_order):
                    extended = True
                    break
            if not extended:
                return False
        else:
            extended = False
            for t in range(n):
                if t in occ:
                    continue
                pos = 0
                while pos < k - 1 and occ[pos] < t:
                    pos += 1
                ext = vals[:pos] + (perm[t],) + vals[pos:]
                if _is_order_iso(ext, full_order):
                    extended = True
                    break
            if not extended:
                return False
    return True


def avoids_barred(perm: Sequence[int], mp: MarkedPattern) -> bool:
    """Bar-avoidance: every occurrence of the pattern-minus-mark extends by an
    insertion exactly at the marked slot.

    >>> p = parse_marked_pattern("2-13")
    >>> avoids_barred((2, 1, 4, 3), p)
    False
    """
    if mp.mark != BAR:
        raise ValueError("avoids_barred requires a bar-marked pattern")
    return _avoids_marked(tuple(perm), mp.pattern, mp.marked_index, barred=True)


def avoids_hatted(perm: Sequence[int], mp: MarkedPattern) -> bool:
    """Hat-avoidance: every occurrence of the pattern-minus-mark is an index
    subset of some occurrence of the full pattern.

    >>> p = parse_marked_pattern("2^13")
    >>> avoids_hatted((2, 1, 4, 3), p)
    True
    """
    if mp.mark != HAT:
        raise ValueError("avoids_hatted requires a hat-marked pattern")
    return _avoids_marked(tuple(perm), mp.pattern, mp.marked_index, barred=False)


def neighbor_condition_holds(mp: MarkedPattern) -> bool:
    """True iff the marked element differs by more than 1 from both of its
    neighbours in the pattern (missing neighbours impose no condition).

    Exactly when this holds, bar- and hat-avoidance define the same class of
    permutations for every length.

    >>> neighbor_condition_holds(parse_marked_pattern("2^13"))
    False
    >>> neighbor_condition_holds(parse_marked_pattern("^132"))
    True
    """
    if mp.mark is None:
        raise ValueError("neighbor condition applies to marked patterns only")
    tau, i = mp.pattern, mp.marked_index
    if i >= 2 and abs(tau[i - 1] - tau[i - 2]) == 1:
        return False
    if i <= len(tau) - 1 and abs(tau[i - 1] - tau[i]) == 1:
        return False
    return True


def avoids_all(perm: Sequence[int], constraints: Iterable[PatternLike]) -> bool:
    """True iff perm avoids every constraint (classical, barred or hatted)."""
    perm = tuple(perm)
    for c in constraints:
        mp = as_marked(c)
        if mp.mark is None:
            if contains_classical(perm, mp.pattern):
                return False
        elif mp.mark == BAR:
            if not _avoids_marked(perm, mp.pattern, mp.marked_index, barred=True):
                return False
        else:
            if not _avoids_marked(perm, mp.pattern, mp.marked_index, barred=False):
                return False
    return True
