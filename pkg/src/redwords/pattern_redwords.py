"""
Isolated factors: when a shifted reduced word of a pattern p sits inside a
reduced word of w without being disturbed by its prefix or suffix.

A factor ``b`` of ``s = a b c`` (with ``a`` a word for u and ``c`` a word for
v) is isolated on ``[m, m']`` when m' < n, every letter of ``b`` lies in
``[m, m']``, and neither ``u * sigma_i`` nor ``sigma_i * v`` is shorter than
u (resp. v) for i in ``[m, m']``. A word of ``p`` in S_k shifted by x is
isolated when it is isolated on ``[x + 1, x + k - 1]``.

Two routes find such factors:

* :func:`find_isolated_embedding` scans all of R(w) (the oracle);
* :func:`construct_isolated_embedding` builds one directly from a pattern
  occurrence by shortening w with position swaps (right multiplication)
  and value swaps (left multiplication) that never exchange two entries of
  the tracked occurrence, until the occurrence sits in consecutive
  positions or uses consecutive values.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from .errors import (
    InternalContradiction,
    MalformedSpan,
    NoIsolatedEmbedding,
    NotContained,
    SpreadsNotContained,
)
from .permutation_core import (
    P2143,
    Occurrence,
    Permutation,
    _occurrence_positions,
    as_perm,
    length,
    spreads_contained,
    standardize,
)
from .reduced_words import (
    ReducedWord,
    evaluate,
    is_reduced,
    lex_least_reduced_word,
    reduced_word_tuples,
)


@dataclass(frozen=True)
class IsolationSpan:
    """The factor ``word.letters[start:end]`` together with a target interval [m, m2]."""

    word: ReducedWord
    start: int
    end: int
    m: int
    m2: int

    @property
    def prefix(self) -> tuple[int, ...]:
        return self.word.letters[: self.start]

    @property
    def factor(self) -> tuple[int, ...]:
        return self.word.letters[self.start: self.end]

    @property
    def suffix(self) -> tuple[int, ...]:
        return self.word.letters[self.end:]


def is_isolated(span: IsolationSpan) -> bool:
    """
    An empty interval (m = m2 + 1) is allowed; it arises from patterns of rank 1.

    >>> s = ReducedWord((1, 2, 3, 2, 5), 6)
    >>> is_isolated(IsolationSpan(s, 1, 2, 1, 2)), is_isolated(IsolationSpan(s, 3, 4, 1, 2))
    (False, True)
    """
    n = span.word.rank
    if not 0 <= span.start <= span.end <= len(span.word.letters):
        raise MalformedSpan(f"factor [{span.start}, {span.end}) outside the word")
    if span.m < 1 or span.m > span.m2 + 1:
        raise MalformedSpan(f"bad interval [{span.m}, {span.m2}]")
    if not is_reduced(span.word):
        raise MalformedSpan(f"{span.word} is not reduced")
    if span.m2 >= n:
        return False
    if any(not span.m <= a <= span.m2 for a in span.factor):
        return False
    u = evaluate(span.prefix, n)
    vinv = evaluate(span.suffix, n).inverse()
    return all(u[i - 1] < u[i] and vinv[i - 1] < vinv[i] for i in range(span.m, span.m2 + 1))


@dataclass(frozen=True)
class GapMeasure:
    gap_pos: int
    gap_val: int
    occurrence: Occurrence

    @property
    def total(self) -> int:
        return self.gap_pos + self.gap_val


def _gap_of(positions: Sequence[int], values: Sequence[int]) -> tuple[int, int]:
    k = len(positions)
    if k == 0:
        return 0, 0
    return positions[-1] - positions[0] - (k - 1), max(values) - min(values) - (k - 1)


def occurrence_gap(occ: Occurrence) -> GapMeasure:
    gp, gv = _gap_of(occ.positions, occ.values)
    return GapMeasure(gp, gv, occ)


def gap(p, w) -> GapMeasure:
    """
    Minimum of positional plus value excess over all occurrences of p in w;
    ties go to the lexicographically least positions.

    >>> gap("21", "2143").total
    0
    """
    p, w = as_perm(p), as_perm(w)
    best = None
    for pos in _occurrence_positions(p, w):
        gp, gv = _gap_of(pos, [w[i - 1] for i in pos])
        if best is None or gp + gv < best[0]:
            best = (gp + gv, gp, gv, pos)
    if best is None:
        raise NotContained(f"{p} does not occur in {w}")
    _, gp, gv, pos = best
    return GapMeasure(gp, gv, Occurrence(pos, p, w))


@dataclass(frozen=True)
class EmbeddingWitness:
    """A reduced word of ``host`` whose factor [start, end) is ``pattern`` shifted by ``shift``."""

    word: ReducedWord
    shift: int
    start: int
    end: int
    pattern: Permutation
    host: Permutation

    @property
    def interval(self) -> tuple[int, int]:
        return self.shift + 1, self.shift + self.pattern.n - 1

    @property
    def span(self) -> IsolationSpan:
        m, m2 = self.interval
        return IsolationSpan(self.word, self.start, self.end, m, m2)

    @property
    def factor(self) -> tuple[int, ...]:
        return self.word.letters[self.start: self.end]

    def realized_occurrence(self) -> Occurrence:
        """The occurrence of the pattern that the factor produces in the host."""
        n, x, k = self.host.n, self.shift, self.pattern.n
        vinv = evaluate(self.word.letters[self.end:], n).inverse()
        positions = tuple(sorted(vinv[b - 1] for b in range(x + 1, x + k + 1)))
        return Occurrence(positions, self.pattern, self.host)

    def verify(self) -> bool:
        """Reduced, evaluates to the host, factor is a shifted word of the pattern, isolated."""
        x, k = self.shift, self.pattern.n
        unshifted = tuple(a - x for a in self.factor)
        return (
            self.word.rank == self.host.n
            and x >= 0
            and x + k <= self.host.n
            and is_reduced(self.word)
            and evaluate(self.word) == self.host
            and all(1 <= a < k for a in unshifted)
            and evaluate(unshifted, k) == self.pattern
            and len(unshifted) == length(self.pattern)
            and is_isolated(self.span)
        )

    def replace_factor(self, letters: Sequence[int]) -> "EmbeddingWitness":
        """Swap in the same shift of another reduced word of the pattern."""
        shifted = tuple(a + self.shift for a in letters)
        new = self.word.letters[: self.start] + shifted + self.word.letters[self.end:]
        return EmbeddingWitness(ReducedWord(new, self.word.rank), self.shift, self.start,
                                self.start + len(shifted), self.pattern, self.host)

    def describe(self) -> str:
        m, m2 = self.interval
        return (f"word={self.word} shift={self.shift} factor=[{self.start},{self.end}) "
                f"interval=[{m},{m2}]")

    def to_json(self) -> dict:
        m, m2 = self.interval
        return {"word": list(self.word.letters), "rank": self.word.rank, "shift": self.shift,
                "factor": [self.start, self.end], "interval": [m, m2],
                "pattern": list(self.pattern), "host": list(self.host)}


def iter_isolated_factors(w, max_k: int | None = None, max_len: int | None = None,
                          cap: int | None = None) -> Iterator[EmbeddingWitness]:
    """
    Every isolated shifted factor in every element of R(w), for pattern ranks
    up to ``max_k``. Order: words sorted, then start, end, rank k, shift x.
    """
    w = as_perm(w)
    n = w.n
    max_k = n if max_k is None else min(max_k, n)
    if max_len is None:
        max_len = max_k * (max_k - 1) // 2
    for letters in reduced_word_tuples(w, cap):
        L = len(letters)
        # prefix[s] = u for a = letters[:s]; sinv[e] = v^{-1} for c = letters[e:]
        prefix = [list(range(1, n + 1))]
        for a in letters:
            u = prefix[-1][:]
            u[a - 1], u[a] = u[a], u[a - 1]
            prefix.append(u)
        sinv = [None] * (L + 1)
        sinv[L] = list(range(1, n + 1))
        for e in range(L - 1, -1, -1):
            vi = sinv[e + 1][:]
            a = letters[e]
            vi[a - 1], vi[a] = vi[a], vi[a - 1]
            sinv[e] = vi
        word = ReducedWord(letters, n)
        for s in range(L + 1):
            u = prefix[s]
            lo, hi = n, 0
            for e in range(s, min(L, s + max_len) + 1):
                if e > s:
                    lo, hi = min(lo, letters[e - 1]), max(hi, letters[e - 1])
                vi = sinv[e]
                for k in range(1, max_k + 1):
                    if e - s > k * (k - 1) // 2:
                        continue
                    x_min = 0 if e == s else max(0, hi - k + 1)
                    x_max = (n - k) if e == s else min(lo - 1, n - k)
                    for x in range(x_min, x_max + 1):
                        if all(u[i - 1] < u[i] and vi[i - 1] < vi[i] for i in range(x + 1, x + k)):
                            p = evaluate(tuple(a - x for a in letters[s:e]), k)
                            yield EmbeddingWitness(word, x, s, e, p, w)


def iter_isolated_factorizations(w, max_k: int | None = None) -> Iterator[EmbeddingWitness]:
    """
    The search of :func:`iter_isolated_factors` with the choice of words
    factored out: every w = u * p' * v with lengths adding, p' a pattern
    shifted by x, u increasing and v^{-1} increasing on x+1..x+k. For fixed
    u and x the shifted pattern is forced (the block values in the order
    they appear in u^{-1} w), so nothing is missed. Each hit is reported
    with lex-least words for u, p and v.

    >>> sorted(str(p) for p in isolated_patterns("321", 3))
    ['1', '21', '321']
    """
    w = as_perm(w)
    n = w.n
    max_k = n if max_k is None else min(max_k, n)
    ell_w = length(w)
    for u in _right_weak_lower_interval(w):
        uinv = u.inverse()
        r = [uinv[t - 1] for t in w]
        rinv = [0] * n
        for i, t in enumerate(r, 1):
            rinv[t - 1] = i
        ell_r = ell_w - length(u)
        for k in range(1, max_k + 1):
            for x in range(0, n - k + 1):
                if any(u[i - 1] > u[i] for i in range(x + 1, x + k)):
                    continue
                order = sorted(range(x + 1, x + k + 1), key=lambda b: rinv[b - 1])
                p = standardize(order)
                pinv = list(range(1, n + 1))
                for j, b in enumerate(order):
                    pinv[b - 1] = x + j + 1
                v = Permutation._trusted(pinv[t - 1] for t in r)
                if length(p) + length(v) != ell_r:
                    continue
                a = lex_least_reduced_word(u).letters
                b = tuple(c + x for c in lex_least_reduced_word(p).letters)
                c = lex_least_reduced_word(v).letters
                yield EmbeddingWitness(ReducedWord(a + b + c, n), x, len(a), len(a) + len(b), p, w)


def isolated_patterns(w, max_k: int, by_words: bool = False) -> set[Permutation]:
    """
    All patterns of rank <= max_k realized as shifted isolated factors in
    R(w). ``by_words`` switches to the literal scan over R(w).
    """
    scan = iter_isolated_factors if by_words else iter_isolated_factorizations
    return {wit.pattern for wit in scan(w, max_k)}


def find_isolated_embedding(p, w, cap: int | None = None) -> EmbeddingWitness | None:
    """Brute force over R(w): the first shifted isolated factor from R(p), or None."""
    p, w = as_perm(p), as_perm(w)
    if p.n > w.n:
        return None
    ell = length(p)
    for wit in iter_isolated_factors(w, p.n, ell, cap):
        if wit.pattern == p and wit.end - wit.start == ell:
            return wit
    return None


def extends_to_spread(occ: Occurrence) -> bool:
    """
    True when some 2143 inside the occurrence has an outside entry placed
    between its "1" and "4" with value between its "2" and "3" -- such an
    occurrence can never be realized by an isolated factor.
    """
    w = occ.host
    inside = set(occ.positions)
    for sub in combinations(range(len(occ.positions)), 4):
        pos = [occ.positions[t] for t in sub]
        vals = [w[i - 1] for i in pos]
        if standardize(vals) != P2143:
            continue
        two, _, _, three = vals
        for q in range(pos[1] + 1, pos[2]):
            if q not in inside and two < w[q - 1] < three:
                return True
    return False


def _base_word(p: Permutation, w: tuple[int, ...], positions: tuple[int, ...]):
    """Consecutive positions or values: write w as (rest) * p' or p' * (rest)."""
    n, k = len(w), p.n
    values = [w[i - 1] for i in positions]
    s = lex_least_reduced_word(p).letters
    gp, gv = _gap_of(positions, values)
    if gp == 0:
        x = positions[0] - 1
        rest = list(w)
        rest[x: x + k] = sorted(rest[x: x + k])
        t = lex_least_reduced_word(Permutation._trusted(rest)).letters
        return t + tuple(a + x for a in s), len(t), x
    if gv == 0:
        x = min(values) - 1
        rest = list(w)
        for j, i in enumerate(positions):
            rest[i - 1] = x + j + 1
        t = lex_least_reduced_word(Permutation._trusted(rest)).letters
        return tuple(a + x for a in s) + t, 0, x
    return None


def _preferred_right_move(w: tuple[int, ...], positions: tuple[int, ...]) -> int | None:
    """
    The position swap suggested by the minimal position gap x: slide x left
    when it is smaller than everything between it and the pattern entry it
    must reach, otherwise slide the rightmost gap to the right.
    """
    inside = set(positions)
    first, last = positions[0], positions[-1]
    gaps = [q for q in range(first + 1, last) if q not in inside]
    if not gaps:
        return None
    xq = min(gaps, key=lambda q: w[q - 1])
    x = w[xq - 1]
    if w[xq - 2] > x:
        return xq - 1
    g = gaps[-1]
    if w[g] < w[g - 1]:
        return g
    return None


def _embed_from(p: Permutation, w: tuple[int, ...], positions: tuple[int, ...],
                dead: set) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...], int, int] | None:
    # returns (left letters, middle word, right letters, factor start in middle, shift)
    base = _base_word(p, w, positions)
    if base is not None:
        mid, start, x = base
        return (), mid, (), start, x
    key = (w, positions)
    if key in dead:
        return None
    n = len(w)
    inside = set(positions)
    values = {w[i - 1] for i in positions}
    inv = [0] * n
    for i, v in enumerate(w, 1):
        inv[v - 1] = i

    right = [j for j in range(1, n) if w[j - 1] > w[j] and not (j in inside and j + 1 in inside)]
    pref = _preferred_right_move(w, positions)
    if pref in right:
        right.remove(pref)
        right.insert(0, pref)
    for j in right:
        nw = list(w)
        nw[j - 1], nw[j] = nw[j], nw[j - 1]
        npos = tuple(sorted(j + 1 if q == j else j if q == j + 1 else q for q in positions))
        sub = _embed_from(p, tuple(nw), npos, dead)
        if sub is not None:
            left, mid, rt, start, x = sub
            return left, mid, rt + (j,), start, x
    for i in range(1, n):
        if inv[i - 1] > inv[i] and not (i in values and i + 1 in values):
            nw = tuple(i + 1 if v == i else i if v == i + 1 else v for v in w)
            sub = _embed_from(p, nw, positions, dead)
            if sub is not None:
                left, mid, rt, start, x = sub
                return (i,) + left, mid, rt, start, x
    dead.add(key)
    return None


def construct_isolated_embedding(p, w) -> EmbeddingWitness:
    """
    Build a reduced word of w containing a shifted isolated word of p,
    without enumerating R(w).

    Occurrences are tried in order of (gap, positions). Each is shortened
    by length-decreasing swaps that never exchange two of its own entries,
    so the occurrence survives every step and the final word realizes it.
    The search over such swaps is exhaustive (failed states are memoized),
    so NoIsolatedEmbedding means R(w) has no isolated factor from R(p) at
    all -- which does happen for some pairs with every spread contained,
    e.g. p = 1324, w = 13425.

    >>> wit = construct_isolated_embedding("132", "243165")
    >>> wit.verify(), wit.factor
    (True, (2,))
    """
    p, w = as_perm(p), as_perm(w)
    if not spreads_contained(p, w):
        raise SpreadsNotContained(f"not every spread of {p} is contained in {w}")
    occs = occurrences_by_gap(p, w)
    candidates = [o for o in occs if not extends_to_spread(o)]
    if not candidates:
        raise InternalContradiction(
            f"every occurrence of {p} in {w} extends to a spread, yet all spreads are contained")
    dead: set = set()
    for occ in candidates:
        found = _embed_from(p, tuple(w), occ.positions, dead)
        if found is None:
            continue
        left, mid, right, start, x = found
        letters = left + mid + right
        start += len(left)
        wit = EmbeddingWitness(ReducedWord(letters, w.n), x, start, start + length(p), p, w)
        if not wit.verify():
            raise InternalContradiction(f"constructed witness {wit.describe()} failed verification")
        return wit
    raise NoIsolatedEmbedding(
        f"every spread of {p} is contained in {w}, but no occurrence of {p} can be "
        f"carried to consecutive positions or values without swapping two of its entries")


def occurrences_by_gap(p, w) -> list[Occurrence]:
    p, w = as_perm(p), as_perm(w)
    occs = [Occurrence(pos, p, w) for pos in _occurrence_positions(p, w)]
    return sorted(occs, key=lambda o: (occurrence_gap(o).total, o.positions))


def _right_weak_lower_interval(w: Permutation) -> Iterator[Permutation]:
    """BFS over w, w*sigma_j, ... removing one right descent at a time."""
    seen = {w}
    queue = deque([w])
    while queue:
        cur = queue.popleft()
        yield cur
        for j in range(1, cur.n):
            if cur[j - 1] > cur[j]:
                nxt = list(cur)
                nxt[j - 1], nxt[j] = nxt[j], nxt[j - 1]
                nxt = Permutation._trusted(nxt)
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)


@dataclass(frozen=True)
class ValueStableFactorization:
    """w = w_prime * v with lengths adding and p at positions start+1..start+k of w_prime."""

    host: Permutation
    pattern: Permutation
    w_prime: Permutation
    v: Permutation
    start: int

    @property
    def values(self) -> tuple[int, ...]:
        k = self.pattern.n
        return tuple(self.w_prime[self.start: self.start + k])

    def occurrence(self) -> Occurrence:
        inv = self.host.inverse()
        positions = tuple(sorted(inv[v - 1] for v in self.values))
        return Occurrence(positions, self.pattern, self.host)


def value_stable_factorizations(p, w) -> list[ValueStableFactorization]:
    """
    One factorization per value-stable occurrence, ordered by the positions
    of that occurrence in w. The lower right weak interval of w is searched
    for w' holding p in consecutive positions whose values also form p in w.
    """
    p, w = as_perm(p), as_perm(w)
    k = p.n
    if k > w.n:
        return []
    winv = w.inverse()
    found: dict[tuple[int, ...], ValueStableFactorization] = {}
    for wp in _right_weak_lower_interval(w):
        for c in range(w.n - k + 1):
            window = wp[c: c + k]
            if standardize(window) != p:
                continue
            positions = tuple(sorted(winv[v - 1] for v in window))
            if positions in found or standardize([w[i - 1] for i in positions]) != p:
                continue
            wpinv = wp.inverse()
            v = Permutation._trusted(wpinv[x - 1] for x in w)
            found[positions] = ValueStableFactorization(w, p, wp, v, c)
    return [found[pos] for pos in sorted(found)]


def value_stable_factorization(p, w) -> ValueStableFactorization | None:
    fs = value_stable_factorizations(p, w)
    return fs[0] if fs else None


def is_value_stable(p, w) -> Occurrence | None:
    """
    >>> is_value_stable("3421", "352641").values
    (3, 5, 2, 1)
    >>> is_value_stable("21354", "241365") is None
    True
    """
    f = value_stable_factorization(p, w)
    return None if f is None else f.occurrence()
