"""Bitset helpers. A bitset is a plain ``int``; bit ``i`` is member ``i``."""

from __future__ import annotations

from typing import Iterable, Iterator


def from_members(members: Iterable[int]) -> int:
    acc = 0
    for i in members:
        acc |= 1 << i
    return acc


def members(bits: int) -> Iterator[int]:
    i = 0
    while bits:
        if bits & 1:
            yield i
        bits >>= 1
        i += 1


def popcount(bits: int) -> int:
    return bin(bits).count("1")


def to_bitstring(bits: int, width: int) -> str:
    """Coordinate 0 is the leftmost character."""
    return "".join("1" if bits >> i & 1 else "0" for i in range(width))


def from_bitstring(text: str) -> int:
    acc = 0
    for i, ch in enumerate(text):
        if ch == "1":
            acc |= 1 << i
        elif ch != "0":
            raise ValueError(f"not a bitstring: {text!r}")
    return acc


def canonical_partition(class_of: Iterable) -> tuple[int, ...]:
    """Relabel class ids in order of first appearance (restricted growth form)."""
    seen: dict = {}
    out = []
    for c in class_of:
        if c not in seen:
            seen[c] = len(seen)
        out.append(seen[c])
    return tuple(out)


def partition_blocks(class_of: Iterable[int]) -> list[list[int]]:
    blocks: dict[int, list[int]] = {}
    for i, c in enumerate(class_of):
        blocks.setdefault(c, []).append(i)
    return list(blocks.values())


def refines(finer: tuple[int, ...], coarser: tuple[int, ...]) -> bool:
    """True iff every block of ``finer`` lies inside a block of ``coarser``."""
    image: dict[int, int] = {}
    for a, b in zip(finer, coarser):
        if image.setdefault(a, b) != b:
            return False
    return True


def meet_partitions(*parts: tuple[int, ...]) -> tuple[int, ...]:
    return canonical_partition(zip(*parts))
