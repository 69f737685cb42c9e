"""Partitions of an edge set into color blocks, and the cover-free predicate."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from colornet.graph import ColoredEdgeGraph

__all__ = [
    "BlockPartition",
    "partition_of_graph",
    "mu_of_partition",
    "mu_of_partition_bruteforce",
    "is_cff",
]


@dataclass(frozen=True)
class BlockPartition:
    """``m`` disjoint blocks of indices covering ``range(ground_size)``.

    Equality ignores block order: two partitions are equal when their blocks
    form the same multiset.
    """

    ground_size: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        seen = [i for block in self.blocks for i in block]
        if sorted(seen) != list(range(self.ground_size)):
            raise ValueError("blocks must be disjoint and cover the ground set")
        object.__setattr__(self, "blocks", tuple(tuple(sorted(b)) for b in self.blocks))

    @property
    def m(self) -> int:
        return len(self.blocks)

    def sizes(self) -> list[int]:
        return sorted(len(b) for b in self.blocks)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BlockPartition):
            return NotImplemented
        return self.ground_size == other.ground_size and sorted(self.blocks) == sorted(
            other.blocks
        )

    def __hash__(self) -> int:
        return hash((self.ground_size, tuple(sorted(self.blocks))))

    @classmethod
    def from_sizes(cls, sizes: list[int]) -> BlockPartition:
        blocks, start = [], 0
        for s in sizes:
            blocks.append(tuple(range(start, start + s)))
            start += s
        return cls(start, tuple(blocks))


def partition_of_graph(g: ColoredEdgeGraph) -> BlockPartition:
    """Block ``c`` holds the positions (in canonical edge order) of color-``c`` edges."""
    blocks: list[list[int]] = [[] for _ in range(g.m)]
    for i, e in enumerate(g.edges):
        blocks[e.color].append(i)
    return BlockPartition(g.num_edges, tuple(tuple(b) for b in blocks))


def _check_t(p: BlockPartition, t: int) -> None:
    if not 0 <= t <= p.m:
        raise ValueError(f"t={t} outside [0, {p.m}]")


def mu_of_partition(p: BlockPartition, t: int) -> int:
    """Elements left after removing the ``t`` largest blocks."""
    _check_t(p, t)
    return sum(p.sizes()[: p.m - t])


def mu_of_partition_bruteforce(p: BlockPartition, t: int) -> int:
    """Minimum over all ``t``-subsets of blocks of the elements left uncovered."""
    _check_t(p, t)
    return min(
        p.ground_size - sum(len(p.blocks[i]) for i in chosen)
        for chosen in combinations(range(p.m), t)
    )


def is_cff(p: BlockPartition, t: int, threshold: int) -> bool:
    """Whether removing any ``t`` blocks leaves at least ``threshold`` elements."""
    return mu_of_partition(p, t) >= threshold
