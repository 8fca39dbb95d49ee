"""Generating tree for 132-avoiders without adjacent consecutive values.

Nodes are permutations; the children of a length-m node arise by inserting
m+1 into its active sites, the gaps where the insertion keeps the
permutation 132-avoiding and free of factors a(a+1).  The root is 21 at
level 1, so level n carries permutations of length n+1, and level sizes
follow the Motzkin numbers.  Labels (= number of active sites) evolve by
the succession rule with root (2) and (k) -> (k+1)(k-1)(k-2)...(2)(1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from .patterns import contains_classical
from .permutations import Permutation, has_adjacent_consecutive_factor

ROOT_PERM: Permutation = (2, 1)


@dataclass(frozen=True)
class TreeNode:
    perm: Permutation
    active_sites: tuple[int, ...]
    label: int
    parent: Permutation | None = None


@dataclass(frozen=True)
class SuccessionRule:
    root_label: int
    produce: Callable[[int], tuple[int, ...]]


def _omega_produce(k: int) -> tuple[int, ...]:
    return (k + 1,) + tuple(range(k - 1, 0, -1))


OMEGA = SuccessionRule(root_label=2, produce=_omega_produce)


def in_tree_class(perm: Sequence[int]) -> bool:
    """Membership test for node permutations: avoid 132 and factors a(a+1)."""
    return not contains_classical(perm, (1, 3, 2)) and not has_adjacent_consecutive_factor(perm)


def insert_max(perm: Sequence[int], site: int) -> Permutation:
    """Insert n+1 into the gap numbered ``site`` (1 = leftmost, n+1 = rightmost).

    >>> insert_max((2, 1), 1)
    (3, 2, 1)
    >>> insert_max((2, 1), 3)
    (2, 1, 3)
    """
    perm = tuple(perm)
    n = len(perm)
    if not 1 <= site <= n + 1:
        raise ValueError(f"site {site} out of range 1..{n + 1}")
    return perm[: site - 1] + (n + 1,) + perm[site - 1 :]


def active_sites(perm: Sequence[int]) -> tuple[int, ...]:
    """Sites where inserting the new maximum keeps the permutation in the class.

    >>> active_sites((2, 1))
    (1, 3)
    >>> active_sites((2, 1, 3))
    (1,)
    """
    perm = tuple(perm)
    return tuple(
        s for s in range(1, len(perm) + 2) if in_tree_class(insert_max(perm, s))
    )


def make_node(perm: Sequence[int], parent: Permutation | None = None) -> TreeNode:
    perm = tuple(perm)
    sites = active_sites(perm)
    return TreeNode(perm, sites, len(sites), parent)


def root() -> TreeNode:
    return make_node(ROOT_PERM)


def children(node: TreeNode) -> list[TreeNode]:
    """Children in site order, left to right."""
    return [make_node(insert_max(node.perm, s), parent=node.perm) for s in node.active_sites]


def iter_levels(max_level: int) -> Iterator[list[TreeNode]]:
    """Yield levels 1..max_level, each a list of nodes in tree order."""
    if max_level < 1:
        raise ValueError("max_level must be >= 1")
    level = [root()]
    yield level
    for _ in range(max_level - 1):
        level = [child for node in level for child in children(node)]
        yield level


def expand_level(level: int) -> list[TreeNode]:
    """All nodes at the given level (root = level 1), left to right."""
    for nodes in iter_levels(level):
        pass
    return nodes


def verify_succession(node: TreeNode) -> bool:
    """Ordered child labels must match the rule's production for the node label."""
    got = tuple(child.label for child in children(node))
    return got == OMEGA.produce(node.label)


def tree_as_dicts(max_level: int) -> list[dict]:
    """Flat node list for JSON export: perm, label, active sites, parent, level."""
    out = []
    for depth, nodes in enumerate(iter_levels(max_level), start=1):
        for node in nodes:
            out.append(
                {
                    "level": depth,
                    "perm": list(node.perm),
                    "label": node.label,
                    "active_sites": list(node.active_sites),
                    "parent": list(node.parent) if node.parent is not None else None,
                }
            )
    return out
