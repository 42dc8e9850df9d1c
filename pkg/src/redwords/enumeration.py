"""
Partitions, the antidiagonal bijection with 132-avoiders, length/support
tables, the Catalan refinement, monotonicity and equality checks, and
length-graded counts of 231-avoiders.

The antidiagonal filling puts r + c - 1 in row r, column c of a Young
diagram; reading rows bottom to top gives a reduced word, and its product
is a 132-avoiding permutation.

>>> lam = Partition((7, 4, 4, 2, 1))
>>> str(reading_word(lam)), str(pi_of_partition(lam))
('545345623451234567', '65472381')
>>> partition_of_perm("65472381")
Partition((7, 4, 4, 2, 1))
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterator, Sequence

from .errors import FormulaUndefined, InfiniteWithoutCap, Not132Avoiding, SuppressionViolated
from .permutation_core import (
    Permutation,
    all_permutations,
    as_perm,
    contains,
    count_pattern,
    length,
    standardize,
)
from .reduced_words import (
    ReducedWord,
    count_reduced_words,
    evaluate,
    fast_count_commutation_classes,
    lex_greatest_reduced_word,
    support,
)

P132 = Permutation((1, 3, 2))
P321 = Permutation((3, 2, 1))


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing positive parts; the empty partition is allowed."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        if any(a <= 0 for a in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"{parts} is not a partition")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        body = text.strip().strip("()[]").replace(",", " ").split()
        return cls(tuple(int(t) for t in body))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"

    def __repr__(self) -> str:
        return f"Partition({self.parts!r})"

    def staircase_index(self) -> int:
        """
        The least d with the diagram inside delta_{d+1} = (d, d-1, ..., 1),
        i.e. max over rows of lambda_r + r - 1; 0 for the empty partition.

        >>> Partition((2, 1, 1)).staircase_index(), Partition(()).staircase_index()
        (3, 0)
        """
        return max((a + r for r, a in enumerate(self.parts)), default=0)


def _partitions(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def partitions(n: int) -> list[Partition]:
    """
    All partitions of n in reverse-lex order.

    >>> [str(p) for p in partitions(4)]
    ['(4)', '(3,1)', '(2,2)', '(2,1,1)', '(1,1,1,1)']
    """
    return [Partition(t) for t in _partitions(n, n)]


def partitions_with_k_parts(n: int, k: int) -> list[Partition]:
    """
    >>> [str(p) for p in partitions_with_k_parts(4, 2)]
    ['(3,1)', '(2,2)']
    """
    return [p for p in partitions(n) if len(p) == k]


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    """p(n) by the pentagonal-number recurrence."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total, k = 0, 1
    while True:
        g1, g2 = k * (3 * k - 1) // 2, k * (3 * k + 1) // 2
        if g1 > n:
            break
        sign = 1 if k % 2 else -1
        total += sign * (partition_count(n - g1) + partition_count(n - g2))
        k += 1
    return total


def reading_word(lam: Partition) -> ReducedWord:
    """
    Rows bottom to top, each left to right, of the antidiagonal filling.
    The rank is one more than the largest letter (0 for the empty partition).

    >>> str(reading_word(Partition((3,))))
    '123'
    """
    letters: list[int] = []
    for r in range(len(lam), 0, -1):
        letters.extend(range(r, r + lam.parts[r - 1]))
    return ReducedWord(tuple(letters), max(letters, default=0) + 1 if letters else 0)


def pi_of_partition(lam: Partition) -> Permutation:
    """
    >>> pi_of_partition(Partition((3,)))
    Permutation('2341')
    """
    return evaluate(reading_word(lam))


def is_suppressed(w: Sequence[int], p: Sequence[int]) -> bool:
    """
    True when w breaks a suppression rule for p: w(n) = n is excluded if
    p(k) != k, and w(1) = 1 is excluded if p(1) != 1. Rank 0 is never
    suppressed.
    """
    if not w:
        return False
    k = len(p)
    return (p[-1] != k and w[-1] == len(w)) or (p[0] != 1 and w[0] == 1)


def partition_of_perm(w) -> Partition:
    """
    Invert pi: cut the lex-greatest reduced word into maximal runs of
    consecutive increasing letters and read the run lengths backwards.
    Any identity maps to the empty partition.

    >>> partition_of_perm("3412")
    Partition((2, 2))
    """
    w = as_perm(w)
    if w.is_identity():
        return Partition(())
    if contains(P132, w):
        raise Not132Avoiding(f"{w} contains 132")
    if is_suppressed(w, P132):
        raise SuppressionViolated(f"{w} ends in the fixed point {w.n}")
    word = lex_greatest_reduced_word(w).letters
    runs = [1]
    for a, b in zip(word, word[1:]):
        if b == a + 1:
            runs[-1] += 1
        else:
            runs.append(1)
    return Partition(tuple(reversed(runs)))


# --- avoiders ------------------------------------------------------------------

# Patterns in S_3 whose length-graded avoidance sets (with suppression) are
# finite. 132 and 213 are in bijection with partitions; 123-avoiders have
# length growing quadratically in the rank.
_FINITE = {(1, 3, 2), (2, 1, 3), (1, 2, 3)}


def _insertion_levels(p: Permutation, max_len: int, max_rank: int | None) -> Iterator[list[Permutation]]:
    """
    p-avoiders (no suppression) of length <= max_len, one list per rank from 0.
    Removing the largest value keeps a permutation p-avoiding and does not
    increase its length, so every avoider comes from one of the previous
    rank by inserting the new maximum.
    """
    level = [Permutation(())]
    n = 0
    while level and (max_rank is None or n <= max_rank):
        yield level
        n += 1
        nxt = set()
        for u in level:
            base = length(u)
            for slot in range(n):
                if base + (n - 1 - slot) > max_len:
                    continue
                v = Permutation._trusted(u[:slot] + (n,) + u[slot:])
                if not contains(p, v):
                    nxt.add(v)
        level = sorted(nxt)


def enumerate_avoiders(p, ell: int, cap: int | None = None) -> set[Permutation]:
    """
    The suppressed avoidance set of p at length ell, over ranks 0..cap.

    >>> sorted(str(w) for w in enumerate_avoiders("132", 4))
    ['23451', '3241', '3412', '4213', '51234']
    >>> enumerate_avoiders("321", 3)
    Traceback (most recent call last):
    ...
    redwords.errors.InfiniteWithoutCap: avoiders of 321 with length 3 form an infinite set; give a rank cap
    """
    p = as_perm(p)
    key = tuple(p)
    if cap is None:
        if p.n != 3 or key not in _FINITE:
            raise InfiniteWithoutCap(f"avoiders of {p} with length {ell} form an infinite set; give a rank cap")
        if key in {(1, 3, 2), (2, 1, 3)}:
            cap = ell + 1
    out = set()
    for level in _insertion_levels(p, ell, cap):
        out.update(w for w in level if length(w) == ell and not is_suppressed(w, p))
    if key in {(1, 3, 2), (2, 1, 3)} and ell <= 6 and cap == ell + 1:
        levels = list(_insertion_levels(p, ell, ell + 2))
        beyond = levels[ell + 2] if len(levels) > ell + 2 else []
        extra = [w for w in beyond if length(w) == ell and not is_suppressed(w, p)]
        if extra:
            raise AssertionError(f"rank bound for {p} fails at length {ell}: {extra[0]}")
    return out


def support_size(w) -> int:
    return len(support(w))


def avoidance_cells(p, ell: int, cap: int | None = None) -> dict[int, set[Permutation]]:
    """The set at length ell split by support size d."""
    out: dict[int, set[Permutation]] = {}
    for w in enumerate_avoiders(p, ell, cap):
        out.setdefault(support_size(w), set()).add(w)
    return out


# --- the table of 132-avoiders by length and support -------------------------


def table_132(lmax: int = 11, dmax: int = 11) -> list[list[int]]:
    """
    Rows d = 0..dmax, columns l = 0..lmax: the number of partitions of l
    fitting inside delta_{d+1} but not inside delta_d.

    >>> table_132(4, 3)
    [[1, 0, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 2, 1, 0], [0, 0, 0, 2, 3]]
    """
    rows = [[0] * (lmax + 1) for _ in range(dmax + 1)]
    for ell in range(lmax + 1):
        for lam in partitions(ell):
            d = lam.staircase_index()
            if d <= dmax:
                rows[d][ell] += 1
    return rows


def table_132_brute(lmax: int, dmax: int) -> list[list[int]]:
    """The same table by enumerating 132-avoiders and measuring support."""
    rows = [[0] * (lmax + 1) for _ in range(dmax + 1)]
    for ell in range(lmax + 1):
        for w in enumerate_avoiders(P132, ell):
            d = support_size(w)
            if d <= dmax:
                rows[d][ell] += 1
    return rows


def format_table(rows: list[list[int]]) -> str:
    lmax = len(rows[0]) - 1 if rows else -1
    width = max([len(str(v)) for r in rows for v in r] + [len(str(lmax)), 2])
    head = "d\\l".rjust(4) + "".join(str(ell).rjust(width + 1) for ell in range(lmax + 1))
    lines = [head]
    for d, r in enumerate(rows):
        lines.append(str(d).rjust(4) + "".join(str(v).rjust(width + 1) for v in r))
    return "\n".join(lines)


@lru_cache(maxsize=None)
def _staircase_polynomial(d: int, row: int, cap: int) -> tuple[int, ...]:
    # partitions occupying rows row, row+1, ... with parts <= cap and
    # lambda_r <= d - r + 1, as coefficients by size
    limit = min(cap, d - row + 1)
    poly = [1]
    for a in range(1, limit + 1):
        sub = _staircase_polynomial(d, row + 1, a)
        need = a + len(sub)
        if len(poly) < need:
            poly.extend([0] * (need - len(poly)))
        for i, c in enumerate(sub):
            poly[a + i] += c
    return tuple(poly)


def staircase_counts(d: int) -> tuple[int, ...]:
    """Coefficients by size of partitions fitting inside delta_{d+1}."""
    return _staircase_polynomial(d, 1, d) if d > 0 else (1,)


def cell_132(ell: int, d: int) -> int:
    """|132-avoiders of length ell and support d| without listing partitions."""
    if d < 0:
        return 0
    inside = staircase_counts(d)
    below = staircase_counts(d - 1) if d > 0 else ()
    a = inside[ell] if ell < len(inside) else 0
    b = below[ell] if ell < len(below) else 0
    return a - b


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def catalan_refinement(n: int) -> list[list[int]]:
    """
    For each d < n, the nonzero cells with l <= C(n, 2), in order of l.

    >>> catalan_refinement(4)
    [[1], [1], [2, 1], [2, 3, 3, 1]]
    """
    top = comb(n, 2)
    return [[c for c in (cell_132(ell, d) for ell in range(top + 1)) if c] for d in range(n)]


def catalan_refinement_check(n: int) -> bool:
    return sum(map(sum, catalan_refinement(n))) == catalan(n)


# --- 231-avoiders by length -----------------------------------------------------


@lru_cache(maxsize=None)
def _lengths_231(n: int) -> tuple[int, ...]:
    hist = [0] * (comb(n, 2) + 1)
    p = Permutation((2, 3, 1))
    for w in all_permutations(n):
        if not contains(p, w):
            hist[length(w)] += 1
    return tuple(hist)


def count_231_by_length(n: int, ell: int) -> int:
    """Brute force over S_n, no suppression."""
    hist = _lengths_231(n)
    return hist[ell] if 0 <= ell < len(hist) else 0


def formula_231(n: int, ell: int) -> int:
    """
    Closed forms for 1 <= ell <= 5.

    >>> formula_231(6, 5)
    16
    """
    if ell == 1:
        return n - 1
    if ell == 2:
        return comb(n - 1, 2)
    if ell == 3:
        return comb(n - 1, 3) + n - 2
    if ell == 4:
        return comb(n - 1, 4) + (n - 2) * (n - 3)
    if ell == 5:
        return comb(n - 1, 5) + (n - 2) * comb(n - 3, 2) + n - 3
    raise FormulaUndefined(f"no closed form for length {ell}")


# --- monotonicity and equality ---------------------------------------------------


@dataclass
class CheckReport:
    """Outcome of an exhaustive check: how many cases were examined and which failed."""

    name: str
    checked: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {"name": self.name, "checked": self.checked, "violations": list(self.violations)}

    def __str__(self) -> str:
        status = "ok" if self.ok else f"{len(self.violations)} violations"
        return f"{self.name}: {self.checked} checked, {status}"


@lru_cache(maxsize=None)
def contained_patterns(w: tuple[int, ...]) -> frozenset[Permutation]:
    """Every p with 1 <= rank(p) <= rank(w) contained in w."""
    n = len(w)
    return frozenset(standardize([w[i] for i in idx]) for k in range(1, n + 1)
                     for idx in combinations(range(n), k))


def _pairs(n_max: int) -> Iterator[tuple[Permutation, Permutation]]:
    for n in range(1, n_max + 1):
        for w in all_permutations(n):
            for p in sorted(contained_patterns(tuple(w))):
                yield p, w


def num_classes(w) -> int:
    return fast_count_commutation_classes(tuple(w))


def check_R_monotone(n_max: int) -> CheckReport:
    report = CheckReport("r-mono")
    for p, w in _pairs(n_max):
        report.checked += 1
        if count_reduced_words(tuple(p)) > count_reduced_words(tuple(w)):
            report.violations.append(f"|R({p})| > |R({w})|")
    return report


def check_C_monotone(n_max: int) -> CheckReport:
    report = CheckReport("c-mono")
    for p, w in _pairs(n_max):
        report.checked += 1
        if num_classes(p) > num_classes(w):
            report.violations.append(f"|C({p})| > |C({w})|")
    return report


def block_split_occurrence(p, w) -> tuple[int, ...] | None:
    """
    Positions of an occurrence of p in w with every other entry of w a fixed
    point and each block of the finest split of the occurrence (cut wherever
    everything before is smaller than everything after) using an interval of
    values; None if there is none.

    >>> block_split_occurrence("21", "1324")
    (2, 3)
    """
    from .permutation_core import _occurrence_positions

    p, w = as_perm(p), as_perm(w)
    for pos in _occurrence_positions(p, w):
        chosen = set(pos)
        if any(w[i - 1] != i for i in range(1, w.n + 1) if i not in chosen):
            continue
        vals = [w[i - 1] for i in pos]
        blocks, start = [], 0
        for t in range(1, len(vals) + 1):
            if t == len(vals) or max(vals[:t]) < min(vals[t:]):
                blocks.append(vals[start:t])
                start = t
        if all(max(b) - min(b) + 1 == len(b) for b in blocks):
            return pos
    return None


def check_equal_R(n_max: int) -> CheckReport:
    """
    For p in w with |R(w)| > 1: |R(p)| = |R(w)| exactly when l(p) = l(w),
    exactly when the block-split occurrence exists. Equal lengths always
    force equal counts.
    """
    report = CheckReport("equal-r")
    for p, w in _pairs(n_max):
        report.checked += 1
        rp, rw = count_reduced_words(tuple(p)), count_reduced_words(tuple(w))
        same_len = length(p) == length(w)
        if same_len and rp != rw:
            report.violations.append(f"l({p}) = l({w}) but |R| differ")
        if rw > 1:
            if (rp == rw) != same_len:
                report.violations.append(f"{p} in {w}: |R| equal is {rp == rw}, lengths equal is {same_len}")
            if (rp == rw) != (block_split_occurrence(p, w) is not None):
                report.violations.append(f"{p} in {w}: block-split occurrence disagrees with |R| equality")
    return report


def check_equal_C(n_max: int) -> CheckReport:
    report = CheckReport("equal-c")
    for p, w in _pairs(n_max):
        report.checked += 1
        same_c = num_classes(p) == num_classes(w)
        same_321 = count_pattern(P321, p) == count_pattern(P321, w)
        if same_c != same_321:
            report.violations.append(f"{p} in {w}: |C| equal is {same_c}, 321-counts equal is {same_321}")
    return report


def check_equality_theorems(n_max: int) -> CheckReport:
    a, b = check_equal_R(n_max), check_equal_C(n_max)
    return CheckReport("equality", a.checked + b.checked, a.violations + b.violations)


__all__ = [
    "Partition", "CheckReport", "partitions", "partitions_with_k_parts", "partition_count",
    "reading_word", "pi_of_partition", "partition_of_perm", "is_suppressed", "enumerate_avoiders",
    "avoidance_cells", "support_size", "table_132", "table_132_brute", "format_table", "cell_132",
    "staircase_counts", "catalan", "catalan_refinement", "catalan_refinement_check",
    "count_231_by_length", "formula_231", "contained_patterns", "check_R_monotone",
    "check_C_monotone", "block_split_occurrence", "check_equal_R", "check_equal_C",
    "check_equality_theorems",
]
