"""Dyck and Motzkin words: parsing, statistics, predicates and generation.

Paths are plain strings over the step alphabet 'u' (up), 'd' (down) and,
for Motzkin words, 'f' (flat).  A word is valid when every prefix has at
least as many ups as downs and the whole word balances.  A Dyck word of
semilength n has 2n steps; a Motzkin word of length n has n steps.

Geometric conventions: a path of n steps visits the n+1 integer points
x = 1, ..., n+1 (heights given by :func:`heights`); a peak is the vertex of
an up-step followed by a down-step, a valley the vertex of a down-step
followed by an up-step, and each carries the vertex's y-coordinate as its
height and its x-offset from the start as its position.
"""

from __future__ import annotations

from typing import Iterator, NamedTuple

DyckWord = str
MotzkinWord = str


class PathParseError(ValueError):
    """Malformed path text; ``position`` is the 1-based offending step."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


def parse_path(text: str, alphabet: str = "dyck") -> str:
    """Validate path text and return it.

    ``alphabet`` is "dyck" (steps u, d) or "motzkin" (steps u, d, f).
    Illegal characters, prefixes dipping below the baseline, and unbalanced
    words are reported distinctly.

    >>> parse_path("uuududduududdd")
    'uuududduududdd'
    >>> parse_path("ufduududd", "motzkin")
    'ufduududd'
    """
    if alphabet not in ("dyck", "motzkin"):
        raise ValueError(f"unknown alphabet {alphabet!r}")
    allowed = "ud" if alphabet == "dyck" else "udf"
    height = 0
    for pos, ch in enumerate(text, start=1):
        if ch not in allowed:
            raise PathParseError(
                f"illegal character {ch!r} at step {pos} (alphabet {alphabet})", pos)
        if ch == "u":
            height += 1
        elif ch == "d":
            height -= 1
        if height < 0:
            raise PathParseError(f"prefix drops below the baseline at step {pos}", pos)
    if height != 0:
        raise PathParseError(f"unbalanced word: {height} unmatched up-step(s)")
    return text


def is_dyck_word(text: str) -> bool:
    try:
        parse_path(text, "dyck")
    except PathParseError:
        return False
    return True


def is_motzkin_word(text: str) -> bool:
    try:
        parse_path(text, "motzkin")
    except PathParseError:
        return False
    return True


def heights(word: str) -> tuple[int, ...]:
    """Vertex heights along the path: len(word)+1 values starting and ending at 0."""
    out = [0]
    for ch in word:
        out.append(out[-1] + (1 if ch == "u" else -1 if ch == "d" else 0))
    return tuple(out)


class PathStats(NamedTuple):
    """Peaks and valleys as (position, height) pairs, in path order.

    A vertex after j steps has position j; peak heights are >= 1, valley
    heights >= 0.
    """

    peaks: tuple[tuple[int, int], ...]
    valleys: tuple[tuple[int, int], ...]
    max_height: int


def stats(word: str) -> PathStats:
    """Collect peaks, valleys and the maximum height of a path.

    >>> stats("uudd").peaks
    ((2, 2),)
    >>> stats("udud")
    PathStats(peaks=((1, 1), (3, 1)), valleys=((2, 0),), max_height=1)
    """
    hs = heights(word)
    peaks = []
    valleys = []
    for j in range(1, len(word)):
        if word[j - 1] == "u" and word[j] == "d":
            peaks.append((j, hs[j]))
        elif word[j - 1] == "d" and word[j] == "u":
            valleys.append((j, hs[j]))
    return PathStats(tuple(peaks), tuple(valleys), max(hs))


def has_peak_at_height(word: str, p: int) -> bool:
    """True iff some up-step immediately followed by a down-step tops out at y = p."""
    hs = heights(word)
    return any(
        word[j - 1] == "u" and word[j] == "d" and hs[j] == p
        for j in range(1, len(word))
    )


def contains_u_dpow_u(word: str, p: int) -> bool:
    """True iff word contains the contiguous factor u d^(p-2) u  (p >= 3).

    >>> contains_u_dpow_u("uuududduududdd", 3)
    True
    >>> contains_u_dpow_u("uuudddud", 4)
    False
    """
    if p < 3:
        raise ValueError("factor length p must be >= 3")
    return ("u" + "d" * (p - 2) + "u") in word


def enumerate_dyck(n: int) -> Iterator[DyckWord]:
    """Yield every Dyck word of semilength n once, lexicographically (u < d).

    >>> list(enumerate_dyck(2))
    ['uudd', 'udud']
    """
    if n < 0:
        raise ValueError("semilength must be >= 0")

    def rec(word: str, ups: int, height: int) -> Iterator[str]:
        if ups == n:
            yield word + "d" * height
            return
        yield from rec(word + "u", ups + 1, height + 1)
        if height:
            yield from rec(word + "d", ups, height - 1)

    return rec("", 0, 0)


def enumerate_motzkin(n: int) -> Iterator[MotzkinWord]:
    """Yield every Motzkin word of length n once, lexicographically (u < d < f).

    >>> list(enumerate_motzkin(3))
    ['udf', 'ufd', 'fud', 'fff']
    """
    if n < 0:
        raise ValueError("length must be >= 0")

    def rec(word: str, left: int, height: int) -> Iterator[str]:
        if left == 0:
            yield word
            return
        if height + 1 <= left - 1:
            yield from rec(word + "u", left - 1, height + 1)
        if height:
            yield from rec(word + "d", left - 1, height - 1)
        if height <= left - 1:
            yield from rec(word + "f", left - 1, height)

    return rec("", n, 0)


def proper_segments(word: MotzkinWord, level: int) -> list[tuple[int, ...]]:
    """Group the path's touch points on y = level into blocks of abscissas.

    The path is drawn from (1, 0) to (n+1, 0).  Within each maximal interval
    where the path stays at or above the level, consecutive touch points
    belong to one block unless a flat step lying on the level separates them;
    flats strictly above the level do not split.  Blocks are returned left to
    right.

    >>> proper_segments("ufduududd", 0)
    [(1, 4, 10)]
    >>> proper_segments("ufduududd", 1)
    [(2,), (3,), (5, 7, 9)]
    """
    if level < 0:
        raise ValueError("level must be >= 0")
    hs = heights(word)
    blocks: list[tuple[int, ...]] = []
    current: list[int] = []
    for x in range(1, len(hs) + 1):
        y = hs[x - 1]
        if y < level:
            if current:
                blocks.append(tuple(current))
                current = []
            continue
        if y == level:
            if current and word[x - 2] == "f":
                # incoming flat lies on the level: split
                blocks.append(tuple(current))
                current = []
            current.append(x)
    if current:
        blocks.append(tuple(current))
    return blocks


def render_path(word: str) -> str:
    """Draw a path with '/' (up), '\\' (down) and '_' (flat), one row per level.

    >>> print(render_path("uufdd"))
      _
     / \\
    /   \\
    """
    if not word:
        return ""
    hs = heights(word)
    # an up/down step occupies the band of its upper end; a flat at height h
    # sits at the bottom of band h+1
    bands = []
    for j, ch in enumerate(word):
        if ch == "u":
            bands.append(hs[j + 1])
        elif ch == "d":
            bands.append(hs[j])
        else:
            bands.append(hs[j] + 1)
    glyphs = {"u": "/", "d": "\\", "f": "_"}
    top = max(bands)
    rows = []
    for band in range(top, 0, -1):
        row = "".join(
            glyphs[ch] if bands[j] == band else " " for j, ch in enumerate(word)
        )
        rows.append(row.rstrip())
    return "\n".join(rows)
