"""
Reduced words, commutation classes and the braid graph of a permutation.

Words are read as products: the word ``i_1 ... i_l`` stands for
``sigma_{i_1} ... sigma_{i_l}``, so evaluating it starts from the identity and
swaps positions ``i_t, i_t + 1`` for each letter in turn.

>>> [str(r) for r in enumerate_reduced_words("3241")]
['1213', '1231', '2123']
>>> [(str(c.canonical), c.size) for c in commutation_classes("3241")]
[('1213', 2), ('2123', 1)]
"""
from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

import networkx as nx

from .errors import IndexOutOfRange, TooLarge
from .permutation_core import Permutation, as_perm, format_word, length

DEFAULT_MAX_WORDS = 10**7

Word = tuple[int, ...]


def max_words() -> int:
    return int(os.environ.get("REDWORDS_MAX_WORDS", DEFAULT_MAX_WORDS))


@dataclass(frozen=True, order=True)
class ReducedWord:
    letters: Word
    rank: int

    def __post_init__(self):
        if any(not 1 <= a < self.rank for a in self.letters):
            raise IndexOutOfRange(f"letters {self.letters} out of range for rank {self.rank}")

    @classmethod
    def parse(cls, text: str, rank: int | None = None) -> "ReducedWord":
        text = text.strip()
        if not text:
            letters: Word = ()
        elif text.isdigit():
            letters = tuple(int(c) for c in text)
        else:
            letters = tuple(int(t) for t in text.replace(",", " ").split())
        if rank is None:
            rank = max(letters, default=0) + 1
        return cls(letters, rank)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self) -> str:
        return format_word(self.letters)

    def to_json(self) -> dict:
        return {"word": list(self.letters), "rank": self.rank}


def evaluate(word: Iterable[int], rank: int | None = None) -> Permutation:
    """
    >>> evaluate((2, 1, 2, 3), 4)
    Permutation('3241')
    """
    if isinstance(word, ReducedWord):
        word, rank = word.letters, word.rank if rank is None else rank
    word = tuple(word)
    if rank is None:
        rank = max(word, default=0) + 1
    w = list(range(1, rank + 1))
    for a in word:
        if not 1 <= a < rank:
            raise IndexOutOfRange(f"letter {a} out of range for rank {rank}")
        w[a - 1], w[a] = w[a], w[a - 1]
    return Permutation._trusted(w)


def is_reduced(word: Iterable[int], rank: int | None = None) -> bool:
    if isinstance(word, ReducedWord):
        word, rank = word.letters, word.rank
    word = tuple(word)
    return length(evaluate(word, rank)) == len(word)


def right_descents(w: Sequence[int]) -> list[int]:
    return [j for j in range(1, len(w)) if w[j - 1] > w[j]]


def left_descents(w: Sequence[int]) -> list[int]:
    """Generators i with i+1 appearing before i in w."""
    inv = as_perm(w).inverse()
    return [i for i in range(1, len(w)) if inv[i - 1] > inv[i]]


@lru_cache(maxsize=None)
def count_reduced_words(w: tuple[int, ...]) -> int:
    """|R(w)| by the descent recursion, without materializing words."""
    descents = [j for j in range(1, len(w)) if w[j - 1] > w[j]]
    if not descents:
        return 1
    total = 0
    for j in descents:
        v = list(w)
        v[j - 1], v[j] = v[j], v[j - 1]
        total += count_reduced_words(tuple(v))
    return total


@lru_cache(maxsize=4096)
def _reduced_words(w: tuple[int, ...]) -> tuple[Word, ...]:
    descents = [j for j in range(1, len(w)) if w[j - 1] > w[j]]
    if not descents:
        return ((),)
    out: list[Word] = []
    for j in descents:
        v = list(w)
        v[j - 1], v[j] = v[j], v[j - 1]
        out.extend(r + (j,) for r in _reduced_words(tuple(v)))
    return tuple(sorted(out))


def reduced_word_tuples(w: Sequence[int], cap: int | None = None) -> tuple[Word, ...]:
    """R(w) as sorted letter tuples; raises TooLarge above the cap."""
    w = tuple(w)
    cap = max_words() if cap is None else cap
    if count_reduced_words(w) > cap:
        raise TooLarge(f"|R({format_word(w)})| = {count_reduced_words(w)} exceeds cap {cap}")
    return _reduced_words(w)


def enumerate_reduced_words(w, cap: int | None = None) -> list[ReducedWord]:
    w = as_perm(w)
    return [ReducedWord(r, w.n) for r in reduced_word_tuples(w, cap)]


def lex_greatest_reduced_word(w) -> ReducedWord:
    """
    Greedy: the largest left descent always starts some reduced word.

    >>> str(lex_greatest_reduced_word("321"))
    '212'
    """
    w = as_perm(w)
    cur, letters = w, []
    while True:
        desc = left_descents(cur)
        if not desc:
            break
        i = desc[-1]
        letters.append(i)
        cur = Permutation._trusted(i + 1 if v == i else i if v == i + 1 else v for v in cur)
    return ReducedWord(tuple(letters), w.n)


def lex_least_reduced_word(w) -> ReducedWord:
    w = as_perm(w)
    cur, letters = w, []
    while True:
        desc = left_descents(cur)
        if not desc:
            break
        i = desc[0]
        letters.append(i)
        cur = Permutation._trusted(i + 1 if v == i else i if v == i + 1 else v for v in cur)
    return ReducedWord(tuple(letters), w.n)


def commutation_neighbors(word: Word) -> list[Word]:
    return [
        word[:t] + (word[t + 1], word[t]) + word[t + 2:]
        for t in range(len(word) - 1)
        if abs(word[t] - word[t + 1]) > 1
    ]


def braid_neighbors(word: Word) -> list[Word]:
    out = []
    for t in range(len(word) - 2):
        a, b, c = word[t:t + 3]
        if a == c and abs(a - b) == 1:
            out.append(word[:t] + (b, a, b) + word[t + 3:])
    return out


def commutation_closure(word: Word) -> frozenset[Word]:
    """Everything reachable from ``word`` by commutation moves (BFS)."""
    seen = {word}
    queue = deque([word])
    while queue:
        cur = queue.popleft()
        for nxt in commutation_neighbors(cur):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return frozenset(seen)


@dataclass(frozen=True)
class CommutationClass:
    """A commutation class, identified by its lexicographically least member."""

    canonical: ReducedWord
    size: int
    members: tuple[Word, ...] | None = field(default=None, compare=False, repr=False)

    @property
    def letter_sum(self) -> int:
        return sum(self.canonical.letters)

    def __str__(self) -> str:
        return f"{{{self.canonical}}}x{self.size}"


def canonical_word(word: Iterable[int]) -> Word:
    """
    The lex-least word commutation-equivalent to ``word``: repeatedly take
    the smallest letter that commutes with every letter still before it.

    >>> canonical_word((3, 1, 2, 1))
    (1, 3, 2, 1)
    """
    rest = list(word)
    out = []
    while rest:
        best = None
        for t, a in enumerate(rest):
            if (best is None or a < rest[best]) and all(abs(a - b) > 1 for b in rest[:t]):
                best = t
        out.append(rest.pop(best))
    return tuple(out)

def class_of_word(word: Iterable[int], rank: int) -> CommutationClass:
    members = commutation_closure(tuple(word))
    ordered = tuple(sorted(members))
    return CommutationClass(ReducedWord(ordered[0], rank), len(ordered), ordered)


@lru_cache(maxsize=1024)
def _classes(w: tuple[int, ...]) -> tuple[tuple[Word, ...], ...]:
    words = reduced_word_tuples(w)
    # union-find over R(w), joining words one commutation apart
    parent = {r: r for r in words}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for r in words:
        for s in commutation_neighbors(r):
            a, b = find(r), find(s)
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[Word, list[Word]] = {}
    for r in words:
        groups.setdefault(find(r), []).append(r)
    return tuple(sorted(tuple(sorted(g)) for g in groups.values()))


def commutation_classes(w) -> list[CommutationClass]:
    """C(w), ordered by canonical (lex-least) word."""
    w = as_perm(w)
    return [CommutationClass(ReducedWord(g[0], w.n), len(g), g) for g in _classes(w)]


def count_commutation_classes(w: Sequence[int]) -> int:
    return len(_classes(tuple(w)))



@lru_cache(maxsize=None)
def fast_count_commutation_classes(w: tuple[int, ...]) -> int:
    """
    |C(w)| without listing words. Commutation classes are traces, and
    inclusion-exclusion over the possible sets of last letters (pairwise
    commuting right descents) counts them:
    N(w) = sum over nonempty such D of (-1)^(|D|+1) N(w * prod D), N(e) = 1.

    >>> fast_count_commutation_classes((4, 3, 2, 1)), fast_count_commutation_classes((3, 2, 4, 1))
    (8, 2)
    """
    descents = [j for j in range(1, len(w)) if w[j - 1] > w[j]]
    if not descents:
        return 1
    total = 0

    def subsets(start: int, chosen: list[int]):
        nonlocal total
        for t in range(start, len(descents)):
            j = descents[t]
            if chosen and j - chosen[-1] < 2:
                continue
            chosen.append(j)
            v = list(w)
            for a in chosen:
                v[a - 1], v[a] = v[a], v[a - 1]
            total += (-1) ** (len(chosen) + 1) * fast_count_commutation_classes(tuple(v))
            subsets(t + 1, chosen)
            chosen.pop()

    subsets(0, [])
    return total

@dataclass(frozen=True)
class BraidGraph:
    w: Permutation
    vertices: tuple[CommutationClass, ...]
    edges: frozenset[frozenset[int]]   # pairs of vertex indices

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(str(c.canonical) for c in self.vertices)
        for e in self.edges:
            a, b = sorted(e)
            g.add_edge(str(self.vertices[a].canonical), str(self.vertices[b].canonical))
        return g

    def neighbors(self, index: int) -> list[int]:
        return sorted(j for e in self.edges if index in e for j in e if j != index)

    def adjacency_text(self) -> str:
        lines = []
        for i, c in enumerate(self.vertices):
            nbrs = " ".join(str(self.vertices[j].canonical) for j in self.neighbors(i))
            lines.append(f"{c.canonical or '()'}: {nbrs}".rstrip())
        return "\n".join(lines)


def braid_graph(w) -> BraidGraph:
    w = as_perm(w)
    classes = commutation_classes(w)
    index = {r: i for i, c in enumerate(classes) for r in c.members}
    edges = set()
    for i, c in enumerate(classes):
        for r in c.members:
            for s in braid_neighbors(r):
                j = index[s]
                if j != i:
                    edges.add(frozenset((i, j)))
    return BraidGraph(w, tuple(classes), frozenset(edges))


def support(w) -> frozenset[int]:
    """
    Letters used by every reduced word of w: i is used iff w does not map
    {1..i} onto itself.

    >>> sorted(support("23451"))
    [1, 2, 3, 4]
    """
    w = as_perm(w)
    out, running = set(), 0
    for i, v in enumerate(w, 1):
        running = max(running, v)
        if running != i:
            out.add(i)
    return frozenset(out)


def has_unique_reduced_word(w) -> bool:
    """
    |R(w)| = 1 exactly when w is a single cycle i -> i+1 (or i -> i-1) on a
    window [m, m'] and fixes everything outside it.

    >>> has_unique_reduced_word("23451"), has_unique_reduced_word("3241")
    (True, False)
    """
    w = as_perm(w)
    moved = [i for i, v in enumerate(w, 1) if v != i]
    if not moved:
        return True
    lo, hi = moved[0], moved[-1]
    if len(moved) != hi - lo + 1:
        return False
    up = all(w(i) == i + 1 for i in range(lo, hi)) and w(hi) == lo
    down = all(w(i) == i - 1 for i in range(lo + 1, hi + 1)) and w(lo) == hi
    return up or down
