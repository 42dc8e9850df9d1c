"""
Permutations in one-line notation and pattern machinery.

A permutation of rank n is stored as a tuple ``(w(1), ..., w(n))`` of the
integers 1..n. Tuple indexing is 0-based as usual; calling the permutation
is 1-based, so ``w(i)`` reads the same as the mathematics.

>>> w = Permutation([3, 2, 4, 1])
>>> w(1), w.n, length(w)
(3, 4, 4)
>>> apply_left(3, Permutation.parse("4231"))
Permutation('3241')
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import IndexOutOfRange, NotAPermutation


class Permutation(tuple):
    """A permutation of {1..n} in one-line notation (an immutable tuple)."""

    __slots__ = ()

    def __new__(cls, values: Iterable[int] = ()):
        values = tuple(int(v) for v in values)
        if sorted(values) != list(range(1, len(values) + 1)):
            raise NotAPermutation(f"{values!r} is not a permutation of 1..{len(values)}")
        return tuple.__new__(cls, values)

    @classmethod
    def _trusted(cls, values: Iterable[int]) -> "Permutation":
        # skips validation; callers guarantee a bijection
        return tuple.__new__(cls, values)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls._trusted(range(1, n + 1))

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """
        Parse ``"3 2 4 1"``, ``"3,2,4,1"`` or the compact ``"3241"`` (n <= 9).

        >>> Permutation.parse("3,2,4,1") == Permutation.parse("3241")
        True
        """
        return cls(_parse_ints(text))

    @property
    def n(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        return self[i - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, v in enumerate(self, 1):
            inv[v - 1] = i
        return Permutation._trusted(inv)

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self, 1))

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"Permutation({format_word(self)!r})"


def _parse_ints(text: str) -> list[int]:
    text = text.strip().strip("()[]")
    if not text:
        return []
    if re.fullmatch(r"\d+", text):
        return [int(c) for c in text]
    parts = [t for t in re.split(r"[\s,]+", text) if t]
    try:
        return [int(t) for t in parts]
    except ValueError as exc:
        raise NotAPermutation(f"cannot parse {text!r}") from exc


def format_word(seq: Sequence[int], compact: bool | None = None) -> str:
    """Digits run together when every entry is below 10, else space-separated."""
    if compact is None:
        compact = all(0 <= v <= 9 for v in seq)
    return ("" if compact else " ").join(str(v) for v in seq)


def from_one_line(seq: Sequence[int]) -> Permutation:
    """
    >>> from_one_line([1, 1, 2])
    Traceback (most recent call last):
    ...
    redwords.errors.NotAPermutation: (1, 1, 2) is not a permutation of 1..3
    """
    return Permutation(seq)


def as_perm(w) -> Permutation:
    if isinstance(w, Permutation):
        return w
    if isinstance(w, str):
        return Permutation.parse(w)
    return Permutation(w)


def length(w: Sequence[int]) -> int:
    """Number of inversions."""
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def standardize(seq: Sequence[int]) -> Permutation:
    """
    The permutation order-isomorphic to ``seq``.

    >>> standardize([4, 2, 5])
    Permutation('213')
    """
    ranks = {v: r for r, v in enumerate(sorted(seq), 1)}
    return Permutation._trusted(ranks[v] for v in seq)


def apply_left(i: int, w: Sequence[int]) -> Permutation:
    """sigma_i * w: exchange the positions of the values i and i+1."""
    n = len(w)
    if not 1 <= i < n:
        raise IndexOutOfRange(f"generator {i} out of range for rank {n}")
    swap = {i: i + 1, i + 1: i}
    return Permutation._trusted(swap.get(v, v) for v in w)


def apply_right(w: Sequence[int], j: int) -> Permutation:
    """w * sigma_j: exchange the entries in positions j and j+1."""
    n = len(w)
    if not 1 <= j < n:
        raise IndexOutOfRange(f"generator {j} out of range for rank {n}")
    out = list(w)
    out[j - 1], out[j] = out[j], out[j - 1]
    return Permutation._trusted(out)


def reverse_complement(w: Sequence[int]) -> Permutation:
    n = len(w)
    return Permutation._trusted(n + 1 - v for v in reversed(w))


def all_permutations(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic order."""
    from itertools import permutations

    for t in permutations(range(1, n + 1)):
        yield Permutation._trusted(t)


@dataclass(frozen=True)
class Occurrence:
    """An occurrence of ``pattern`` in ``host`` at 1-based ``positions``."""

    positions: tuple[int, ...]
    pattern: Permutation
    host: Permutation

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(self.host[i - 1] for i in self.positions)

    def value_at(self, j: int) -> int:
        """The host value playing the role of pattern entry j (1-based)."""
        return self.host[self.positions[j - 1] - 1]


def _occurrence_positions(p: Sequence[int], w: Sequence[int]) -> Iterator[tuple[int, ...]]:
    # backtracking; a partial choice is pruned as soon as its relative order
    # disagrees with the corresponding prefix of p
    k, n = len(p), len(w)
    chosen: list[int] = []

    def extend(start: int) -> Iterator[tuple[int, ...]]:
        t = len(chosen)
        if t == k:
            yield tuple(i + 1 for i in chosen)
            return
        for i in range(start, n - (k - t) + 1):
            v = w[i]
            if all((w[c] < v) == (p[s] < p[t]) for s, c in enumerate(chosen)):
                chosen.append(i)
                yield from extend(i + 1)
                chosen.pop()

    yield from extend(0)


def occurrences(p: Sequence[int], w: Sequence[int]) -> list[Occurrence]:
    """
    All occurrences of p in w, positions in lexicographic order.

    >>> [o.values for o in occurrences(Permutation.parse("213"), Permutation.parse("42135"))]
    [(4, 2, 5), (4, 1, 5), (4, 3, 5), (2, 1, 3), (2, 1, 5)]
    """
    p, w = as_perm(p), as_perm(w)
    return [Occurrence(pos, p, w) for pos in _occurrence_positions(p, w)]


def contains(p: Sequence[int], w: Sequence[int]) -> bool:
    return next(_occurrence_positions(p, w), None) is not None


def count_pattern(p: Sequence[int], w: Sequence[int]) -> int:
    return sum(1 for _ in _occurrence_positions(p, w))


@dataclass(frozen=True)
class BarredPattern:
    """A permutation ``full`` whose entries at 1-based positions ``barred`` carry bars."""

    full: Permutation
    barred: frozenset[int] = frozenset()

    def __post_init__(self):
        if not all(1 <= b <= len(self.full) for b in self.barred):
            raise NotAPermutation(f"barred positions {sorted(self.barred)} outside 1..{len(self.full)}")

    @property
    def undecorated(self) -> Permutation:
        return standardize([v for i, v in enumerate(self.full, 1) if i not in self.barred])

    @classmethod
    def parse(cls, text: str) -> "BarredPattern":
        """
        >>> str(BarredPattern.parse("2 6 1 3* 4 7 5"))
        '2 6 1 3* 4 7 5'
        """
        tokens = [t for t in re.split(r"[\s,]+", text.strip()) if t]
        if len(tokens) == 1 and "*" not in tokens[0]:
            return cls(Permutation.parse(tokens[0]))
        values, barred = [], set()
        for i, tok in enumerate(tokens, 1):
            if tok.endswith("*"):
                barred.add(i)
                tok = tok[:-1]
            values.append(int(tok))
        return cls(Permutation(values), frozenset(barred))

    def __str__(self) -> str:
        return " ".join(f"{v}*" if i in self.barred else str(v) for i, v in enumerate(self.full, 1))


def contains_barred(qbar: BarredPattern, w: Sequence[int]) -> bool:
    """
    True iff some occurrence of the undecorated portion of ``qbar`` in ``w``
    is not the unbarred part of an occurrence of the full pattern.

    >>> contains_barred(BarredPattern.parse("3 2* 1 4"), Permutation.parse("42135"))
    True
    """
    if not qbar.barred:
        return contains(qbar.full, w)
    unbarred = [i for i in range(1, len(qbar.full) + 1) if i not in qbar.barred]
    blocked = {tuple(pos[i - 1] for i in unbarred) for pos in _occurrence_positions(qbar.full, w)}
    return any(pos not in blocked for pos in _occurrence_positions(qbar.undecorated, w))


P2143 = Permutation((2, 1, 4, 3))


def spreads(p: Sequence[int]) -> list[BarredPattern]:
    """
    The spreads of p: every way to insert one barred entry into a 2143
    occurrence of p, positioned between its "1" and "4" and valued between
    its "2" and "3", turning it into 21354. A 2143-avoiding p is its own
    only spread.

    >>> [str(q) for q in spreads(Permutation.parse("251364"))]
    ['2 6 1 3* 4 7 5', '2 6 1 4 3* 7 5', '2 6 1 4* 3 7 5', '2 6 1 3 4* 7 5']
    """
    p = as_perm(p)
    found: dict[tuple[Permutation, int], None] = {}
    for pos in _occurrence_positions(P2143, p):
        two, one, four, three = (p[i - 1] for i in pos)
        for value in range(two, three):          # new value sits at value + 1/2
            for slot in range(pos[1], pos[2]):   # new entry goes right after position `slot`
                vals = [2 * v for v in p]
                vals.insert(slot, 2 * value + 1)
                found.setdefault((standardize(vals), slot + 1), None)
    if not found:
        return [BarredPattern(p)]
    return [BarredPattern(q, frozenset({b})) for q, b in found]


def spreads_contained(p: Sequence[int], w: Sequence[int]) -> bool:
    """Every spread of p is contained in w."""
    w = as_perm(w)
    return all(contains_barred(q, w) for q in spreads(p))
