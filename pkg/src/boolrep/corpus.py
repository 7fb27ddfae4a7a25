"""Named desk-scale semigroups used by the tests and the CLI."""

from __future__ import annotations

from itertools import product
from typing import Callable

from .errors import UnknownFixture
from .semigroup import FiniteSemigroup


def _from_op(elements, op, labels=None) -> FiniteSemigroup:
    index = {x: i for i, x in enumerate(elements)}
    table = [[index[op(a, b)] for b in elements] for a in elements]
    return FiniteSemigroup.from_table(table, labels or [str(x) for x in elements])


def chain(k: int) -> FiniteSemigroup:
    """Semilattice 0 > 1 > ... > k-1 under max; element 0 is the identity."""
    return _from_op(list(range(k)), max)


def semilattice() -> FiniteSemigroup:
    return FiniteSemigroup.from_table([[0, 1], [1, 1]], ["1", "e"])


def left_zero(k: int) -> FiniteSemigroup:
    return _from_op(list(range(k)), lambda a, b: a)


def right_zero(k: int) -> FiniteSemigroup:
    return _from_op(list(range(k)), lambda a, b: b)


def rectangular_band(rows: int, cols: int) -> FiniteSemigroup:
    elems = list(product(range(rows), range(cols)))
    return _from_op(elems, lambda a, b: (a[0], b[1]), [f"{i}{l}" for i, l in elems])


def cyclic_group(k: int) -> FiniteSemigroup:
    return _from_op(list(range(k)), lambda a, b: (a + b) % k)


def symmetric_group_3() -> FiniteSemigroup:
    return FiniteSemigroup.from_transformations(3, [[1, 0, 2], [1, 2, 0]])


def brandt_b2() -> FiniteSemigroup:
    """Matrix units e_ij of size 2 plus zero."""
    elems = [(1, 1), (1, 2), (2, 1), (2, 2), None]

    def op(a, b):
        if a is None or b is None or a[1] != b[0]:
            return None
        return (a[0], b[1])

    return _from_op(elems, op, ["e11", "e12", "e21", "e22", "0"])


def full_transformation_monoid(m: int) -> FiniteSemigroup:
    if m == 1:
        return FiniteSemigroup.from_transformations(1, [[0]])
    gens = [[1, 0] + list(range(2, m)), list(range(1, m)) + [0], [0, 0] + list(range(2, m))]
    return FiniteSemigroup.from_transformations(m, gens)


def syntactic_ab_star() -> FiniteSemigroup:
    """Syntactic monoid of (ab)*: {1, a, b, ab, ba, 0}."""
    names = ["1", "a", "b", "ab", "ba", "0"]

    def reduce(word: str) -> str:
        if word == "":
            return "1"
        if "aa" in word or "bb" in word:
            return "0"
        # alternating word: determined by first letter, last letter
        first, last = word[0], word[-1]
        if len(word) == 1 or first == last:
            return first
        return first + last

    def op(x, y):
        if "0" in (x, y):
            return "0"
        wx = "" if x == "1" else x
        wy = "" if y == "1" else y
        return reduce(wx + wy)

    return _from_op(names, op, names)


def null_semigroup(k: int = 2) -> FiniteSemigroup:
    return _from_op(list(range(k)), lambda a, b: 0)


FIXTURES: dict[str, Callable[[], FiniteSemigroup]] = {
    "trivial": lambda: FiniteSemigroup.from_table([[0]]),
    "semilattice": semilattice,
    "chain-2": lambda: chain(2),
    "chain-3": lambda: chain(3),
    "chain-4": lambda: chain(4),
    "left-zero-2": lambda: left_zero(2),
    "left-zero-3": lambda: left_zero(3),
    "right-zero-2": lambda: right_zero(2),
    "right-zero-3": lambda: right_zero(3),
    "rect-band-2x2": lambda: rectangular_band(2, 2),
    "rect-band-2x3": lambda: rectangular_band(2, 3),
    "z2": lambda: cyclic_group(2),
    "z3": lambda: cyclic_group(3),
    "s3": symmetric_group_3,
    "brandt-b2": brandt_b2,
    "t2": lambda: full_transformation_monoid(2),
    "t3": lambda: full_transformation_monoid(3),
    "ab-star": syntactic_ab_star,
    "null-2": lambda: null_semigroup(2),
}


def load_corpus(name: str) -> FiniteSemigroup:
    try:
        return FIXTURES[name]()
    except KeyError:
        raise UnknownFixture(f"unknown fixture {name!r}; known: {', '.join(FIXTURES)}") from None


def corpus_names() -> list[str]:
    return list(FIXTURES)
