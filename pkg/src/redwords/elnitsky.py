"""
Elnitsky polygons X(w), their rhombic tilings, hexagon flips, the MONO
injection and paw-tiling witnesses.

Geometry. Each label L in 1..n owns a unit direction e_L; the left border
of X(w) walks e_1, ..., e_n from the top vertex, and the right border walks
e_{w(1)}, ..., e_{w(n)}. A vertex is therefore determined by the set of
labels on any path reaching it from the top, and a rhombus is determined by
its two labels and the label set above its top vertex.

Tilings and words. Peeling a rhombus off the right border of X(w) at path
positions j, j+1 is right multiplication by sigma_j. Reading a reduced word
right to left and peeling one rhombus per letter therefore produces a
tiling; letters are numbered 1, 2, ... in peeling order, so the word is
s_l ... s_2 s_1. Words in one commutation class give the same rhombi.

>>> [str(t.word) for t in tilings("3241")]
['1213', '2123']
>>> len(hexagon_flips(tilings("3241")[0]))
1
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import InconsistentInput, NotAnOccurrence
from .pattern_redwords import _right_weak_lower_interval, value_stable_factorization
from .permutation_core import Occurrence, Permutation, _occurrence_positions, as_perm, length, standardize
from .reduced_words import (
    CommutationClass,
    ReducedWord,
    canonical_word,
    class_of_word,
    commutation_classes,
    evaluate,
    is_reduced,
    lex_least_reduced_word,
)

Point = tuple[float, float]


def direction(label: int, n: int) -> Point:
    """
    Unit vector of sides labelled ``label`` in a rank-n polygon: the left
    border turns evenly from just below west to just below east.

    >>> [round(math.degrees(math.atan2(*reversed(direction(L, 4))))) for L in (1, 4)]
    [-158, -23]
    """
    theta = -math.pi + (label - 0.5) * math.pi / n
    return math.cos(theta), math.sin(theta)


def vertex(labels: Iterable[int], n: int) -> Point:
    """The point reached from the top vertex by one step along each label."""
    x = y = 0.0
    for c in sorted(labels):
        dx, dy = direction(c, n)
        x, y = x + dx, y + dy
    return x, y


@dataclass(frozen=True)
class Polygon:
    """X(w): convex left border labelled 1..n, right border labelled w(1)..w(n) top to bottom."""

    w: Permutation

    @property
    def n(self) -> int:
        return self.w.n

    @property
    def left_labels(self) -> tuple[int, ...]:
        return tuple(range(1, self.n + 1))

    @property
    def right_labels(self) -> tuple[int, ...]:
        """Right border labels from bottom to top, i.e. w(n), ..., w(1)."""
        return tuple(reversed(self.w))

    def left_vertices(self) -> list[Point]:
        return [vertex(range(1, i + 1), self.n) for i in range(self.n + 1)]

    def right_vertices(self) -> list[Point]:
        return [vertex(self.w[:i], self.n) for i in range(self.n + 1)]

    def sides(self) -> list[tuple[int, Point, Point]]:
        """
        All 2n sides counterclockwise from the top vertex as (label, start, end).

        >>> [s[0] for s in polygon("3241").sides()]
        [1, 2, 3, 4, 1, 4, 2, 3]
        """
        left, right = self.left_vertices(), self.right_vertices()
        out = [(i + 1, left[i], left[i + 1]) for i in range(self.n)]
        out += [(self.w[i - 1], right[i], right[i - 1]) for i in range(self.n, 0, -1)]
        return out

    def outline(self) -> list[Point]:
        return [s[1] for s in self.sides()]


def polygon(w) -> Polygon:
    return Polygon(as_perm(w))


@dataclass(frozen=True, order=True)
class Rhombus:
    """A rhombus with labels big > small whose top vertex sits below the labels in ``before``."""

    big: int
    small: int
    before: frozenset[int]

    def vertices(self, n: int) -> list[Point]:
        """Top, right, bottom, left."""
        top = set(self.before)
        return [vertex(top, n), vertex(top | {self.big}, n),
                vertex(top | {self.big, self.small}, n), vertex(top | {self.small}, n)]

    def sort_key(self) -> tuple:
        return (sorted(self.before), self.big, self.small)


@dataclass(frozen=True)
class Tile:
    """A rhombus together with its number in one labelling and its path position."""

    label: int
    position: int
    rhombus: Rhombus

    @property
    def values(self) -> tuple[int, int]:
        return self.rhombus.small, self.rhombus.big


@dataclass(frozen=True, eq=False)
class Tiling:
    """
    A rhombic tiling of X(w). Its identity is the set of rhombi; ``word`` is
    the canonical (lex-least) word of its commutation class and ``tiles``
    carry the labelling that word induces.
    """

    w: Permutation
    rhombi: frozenset[Rhombus]
    word: ReducedWord
    tiles: tuple[Tile, ...] = field(repr=False)

    def __eq__(self, other) -> bool:
        return isinstance(other, Tiling) and (self.w, self.rhombi) == (other.w, other.rhombi)

    def __hash__(self) -> int:
        return hash((self.w, self.rhombi))

    def __len__(self) -> int:
        return len(self.rhombi)

    @property
    def commutation_class(self) -> CommutationClass:
        return class_of_word(self.word.letters, self.w.n)


def _peel(w: Permutation, letters: Sequence[int]) -> list[Tile]:
    """Tiles for a word of w, reading its letters right to left."""
    path = list(w)
    tiles = []
    for label, j in enumerate(reversed(letters), 1):
        big, small = path[j - 1], path[j]
        if big < small:
            raise InconsistentInput(f"letter {j} does not remove an inversion")
        tiles.append(Tile(label, j, Rhombus(big, small, frozenset(path[: j - 1]))))
        path[j - 1], path[j] = small, big
    return tiles


def tiling_from_word(word, w=None) -> Tiling:
    """
    The tiling of X(w) peeled by ``word``; its tiles are numbered by the
    canonical word of the class, so all words of a class give equal output.

    >>> t = tiling_from_word(ReducedWord((2, 1, 2, 3), 4))
    >>> [tile.values for tile in t.tiles]
    [(1, 4), (1, 2), (1, 3), (2, 3)]
    """
    if not isinstance(word, ReducedWord):
        word = ReducedWord(tuple(word), as_perm(w).n)
    w = evaluate(word) if w is None else as_perm(w)
    if word.rank != w.n or not is_reduced(word) or evaluate(word) != w:
        raise InconsistentInput(f"{word} is not a reduced word of {w}")
    rhombi = frozenset(t.rhombus for t in _peel(w, word.letters))
    return tiling_from_rhombi(w, rhombi)


def _word_from_rhombi(w: Permutation, rhombi: frozenset[Rhombus]) -> tuple[int, ...]:
    # peel greedily at the leftmost available position; returns the word s_l ... s_1
    path = list(w)
    remaining = set(rhombi)
    peeled: list[int] = []
    while remaining:
        for j in range(1, len(path)):
            r = Rhombus(path[j - 1], path[j], frozenset(path[: j - 1]))
            if r in remaining:
                remaining.remove(r)
                peeled.append(j)
                path[j - 1], path[j] = path[j], path[j - 1]
                break
        else:
            raise InconsistentInput("rhombi do not tile the polygon")
    if path != sorted(path):
        raise InconsistentInput("rhombi do not tile the polygon")
    return tuple(reversed(peeled))


def tiling_from_rhombi(w, rhombi: Iterable[Rhombus]) -> Tiling:
    w = as_perm(w)
    rhombi = frozenset(rhombi)
    letters = _word_from_rhombi(w, rhombi)
    canonical = canonical_word(letters)
    return Tiling(w, rhombi, ReducedWord(canonical, w.n), tuple(_peel(w, canonical)))


def class_to_tiling(c: CommutationClass, w) -> Tiling:
    w = as_perm(w)
    if c.canonical.rank != w.n or evaluate(c.canonical) != w:
        raise InconsistentInput(f"class {c} does not belong to {w}")
    return tiling_from_word(c.canonical, w)


def tiling_to_class(t: Tiling) -> CommutationClass:
    """
    Read a word off the tiling by peeling from the right border, then close
    under commutations.

    >>> [str(tiling_to_class(t).canonical) for t in tilings("3241")]
    ['1213', '2123']
    """
    letters = _word_from_rhombi(t.w, t.rhombi)
    return class_of_word(letters, t.w.n)


def tilings(w, cap: int | None = None) -> list[Tiling]:
    """One tiling per commutation class, in canonical-word order."""
    w = as_perm(w)
    if cap is not None:
        from .reduced_words import reduced_word_tuples

        reduced_word_tuples(w, cap)
    return [tiling_from_word(c.canonical, w) for c in commutation_classes(w)]


def hexagon_flips(t: Tiling) -> list[Tiling]:
    """
    Tilings differing from t inside a single sub-hexagon. For labels
    a > b > c above a common vertex set S the two tilings of the hexagon are
    {(a,b,S), (a,c,S+b), (b,c,S)} and {(b,c,S+a), (a,c,S), (a,b,S+c)}.
    """
    rh = t.rhombi
    found: set[frozenset[Rhombus]] = set()
    for r in rh:
        a, b, S = r.big, r.small, r.before
        for c in range(1, b):
            one = {r, Rhombus(a, c, S | {b}), Rhombus(b, c, S)}
            if one <= rh:
                two = {Rhombus(b, c, S | {a}), Rhombus(a, c, S), Rhombus(a, b, S | {c})}
                found.add((rh - one) | two)
        a, c = r.big, r.small
        for b in range(c + 1, a):
            two = {Rhombus(b, c, S | {a}), r, Rhombus(a, b, S | {c})}
            if two <= rh:
                one = {Rhombus(a, b, S), Rhombus(a, c, S | {b}), Rhombus(b, c, S)}
                found.add((rh - two) | one)
    out = [tiling_from_rhombi(t.w, f) for f in found]
    return sorted(out, key=lambda x: x.word)


def flip_graph_edges(w) -> set[frozenset[str]]:
    """Edges of the flip graph on T(w), vertices named by canonical class words."""
    edges = set()
    for t in tilings(w):
        for u in hexagon_flips(t):
            edges.add(frozenset((str(t.word), str(u.word))))
    return edges


# --- MONO ------------------------------------------------------------------


@dataclass(frozen=True)
class MonoPiece:
    """The paw cut off at one step: its permutation q and where its word sits."""

    q: Permutation
    shift: int
    letters: tuple[int, ...]
    edges: tuple[int, ...]     # the host values along the sorted segment


@dataclass(frozen=True)
class MonoTrace:
    word: ReducedWord
    pieces: tuple[MonoPiece, ...]
    final: Permutation


def _check_occurrence(p: Permutation, w: Permutation, occ) -> tuple[int, ...]:
    positions = tuple(occ.positions if isinstance(occ, Occurrence) else occ)
    if (len(positions) != p.n or any(not 1 <= i <= w.n for i in positions)
            or list(positions) != sorted(set(positions))
            or standardize([w[i - 1] for i in positions]) != p):
        raise NotAnOccurrence(f"positions {positions} are not an occurrence of {p} in {w}")
    return positions


def mono_trace(p, w, occ, word) -> MonoTrace:
    """
    Run MONO with the tile labelling given by ``word`` in R(p). Each tile, in
    label order, names a descent j of the current p_i; the host segment
    between the two occurrence entries playing p_i(j), p_i(j+1) is sorted,
    and the cut-off paw gets the canonical (lex-least) word of its
    permutation. When p_i is the identity the rest of w_i gets its canonical
    word too.
    """
    p, w = as_perm(p), as_perm(w)
    positions = _check_occurrence(p, w, occ)
    letters = tuple(word.letters if isinstance(word, ReducedWord) else word)
    if not is_reduced(letters, p.n) or evaluate(letters, p.n) != p:
        raise InconsistentInput(f"{letters} is not a reduced word of {p}")
    cur = list(w)
    pat = list(p)
    host = [w[i - 1] for i in positions]      # host value playing pattern position j
    pieces = []
    for j in reversed(letters):
        big, small = host[j - 1], host[j]
        r, s = cur.index(big) + 1, cur.index(small) + 1
        segment = cur[r - 1: s]
        q = standardize(segment)
        qw = tuple(a + r - 1 for a in lex_least_reduced_word(q).letters)
        pieces.append(MonoPiece(q, r - 1, qw, tuple(sorted(segment))))
        cur[r - 1: s] = sorted(segment)
        pat[j - 1], pat[j] = pat[j], pat[j - 1]
        host[j - 1], host[j] = host[j], host[j - 1]
    final = Permutation._trusted(cur)
    out = lex_least_reduced_word(final).letters
    for piece in reversed(pieces):
        out += piece.letters
    result = ReducedWord(out, w.n)
    if len(out) != length(w) or evaluate(result) != w:
        raise InconsistentInput(f"MONO produced {result}, which is not a reduced word of {w}")
    return MonoTrace(result, tuple(pieces), final)


def mono_word(p, w, occ, word) -> ReducedWord:
    """The word-level injection R(p) -> R(w)."""
    return mono_trace(p, w, occ, word).word


def mono(p, w, occ, t: Tiling) -> Tiling:
    """
    The MONO image of a tiling of X(p) in T(w).

    >>> p, w = Permutation.parse("21"), Permutation.parse("321")
    >>> str(mono(p, w, (1, 3), tilings(p)[0]).word)
    '121'
    """
    p, w = as_perm(p), as_perm(w)
    if t.w != p:
        raise InconsistentInput(f"tiling is of X({t.w}), not X({p})")
    return tiling_from_word(mono_word(p, w, occ, t.word), w)


# --- paws --------------------------------------------------------------------


@dataclass(frozen=True)
class Paw:
    """An X(p)-shaped tile: its top vertex lies below ``top``; ``right_labels`` run top to bottom."""

    pattern: Permutation
    top: frozenset[int]
    right_labels: tuple[int, ...]

    @property
    def left_labels(self) -> tuple[int, ...]:
        return tuple(sorted(self.right_labels))

    def outline(self, n: int) -> list[Point]:
        top = set(self.top)
        left = [vertex(top | set(self.left_labels[:i]), n) for i in range(len(self.right_labels) + 1)]
        right = [vertex(top | set(self.right_labels[:i]), n) for i in range(len(self.right_labels) + 1)]
        return left + list(reversed(right[1:-1]))


@dataclass(frozen=True)
class PawTilingWitness:
    """A paw tiling of X(w): one X(p)-paw plus rhombi."""

    host: Permutation
    pattern: Permutation
    edges: tuple[int, ...]                 # values on the paw, increasing
    paw: Paw
    rhombi: tuple[Tile, ...]
    isolated: bool
    w_prime: Permutation
    v: Permutation

    def describe(self) -> str:
        return (f"X({self.pattern})-paw in X({self.host}) with edges "
                f"{{{','.join(map(str, self.edges))}}}: "
                f"{'isolated' if self.isolated else 'not isolated'}, {len(self.rhombi)} rhombi")

    def to_json(self) -> dict:
        return {"host": list(self.host), "pattern": list(self.pattern), "edges": list(self.edges),
                "paw_right_labels": list(self.paw.right_labels), "paw_top": sorted(self.paw.top),
                "rhombi": [[t.label, t.position, t.rhombus.small, t.rhombus.big] for t in self.rhombi],
                "isolated": self.isolated, "w_prime": list(self.w_prime), "v": list(self.v)}


def paw_is_isolated(host, right_labels: Sequence[int]) -> bool:
    """
    A rhombus can share two edges with the paw's right side exactly when two
    adjacent labels y above z with y < z must still cross on their way to
    the right border, i.e. z precedes y in the host. The paw is isolated
    when no such pair exists.

    >>> paw_is_isolated("321", (3, 1, 2)), paw_is_isolated("4321", (4, 3, 2, 1))
    (False, True)
    """
    inv = as_perm(host).inverse()
    return not any(y < z and inv[z - 1] < inv[y - 1] for y, z in zip(right_labels, right_labels[1:]))


def _paw_tiling(p: Permutation, w: Permutation, wp: Permutation, start: int) -> PawTilingWitness:
    k, n = p.n, w.n
    wpinv = wp.inverse()
    v = Permutation._trusted(wpinv[x - 1] for x in w)
    # rhombi right of the paw: peel v off w
    tiles = _peel(w, lex_least_reduced_word(v).letters)
    window = tuple(wp[start: start + k])
    paw = Paw(p, frozenset(wp[:start]), window)
    rest = list(wp)
    rest[start: start + k] = sorted(window)
    rest = Permutation._trusted(rest)
    label = len(tiles)
    for t in _peel(rest, lex_least_reduced_word(rest).letters):
        tiles.append(Tile(t.label + label, t.position, t.rhombus))
    return PawTilingWitness(w, p, tuple(sorted(window)), paw, tuple(tiles),
                            paw_is_isolated(w, window), wp, v)


def paw_tilings(p, w) -> list[PawTilingWitness]:
    """
    One paw tiling per factorization w = w' * v (lengths adding) with p in
    consecutive positions of w', isolated ones first, then by paw edges.
    """
    p, w = as_perm(p), as_perm(w)
    k = p.n
    if k > w.n:
        return []
    out = {}
    for wp in _right_weak_lower_interval(w):
        for c in range(w.n - k + 1):
            if standardize(wp[c: c + k]) == p:
                wit = _paw_tiling(p, w, wp, c)
                out.setdefault((not wit.isolated, wit.edges, wit.paw.top, wit.paw.right_labels), wit)
    return [out[key] for key in sorted(out, key=lambda t: (t[0], t[1], sorted(t[2]), t[3]))]


def paw_tiling(p, w) -> PawTilingWitness | None:
    """Some paw tiling of X(w) with an X(p)-paw, preferring an isolated paw."""
    found = paw_tilings(p, w)
    return found[0] if found else None


def paw_witness(p, w) -> PawTilingWitness | None:
    """
    A paw tiling with an isolated X(p)-paw whose edges are the value-stable
    occurrence of (p, w); None when the pair is not value-stable.

    >>> paw_witness("3421", "352641").describe()
    'X(3421)-paw in X(352641) with edges {1,2,3,5}: isolated, 4 rhombi'
    >>> paw_witness("312", "321") is None
    True
    """
    p, w = as_perm(p), as_perm(w)
    f = value_stable_factorization(p, w)
    if f is None:
        return None
    return _paw_tiling(p, w, f.w_prime, f.start)



# --- rendering -----------------------------------------------------------------

_SCALE = 60.0
_MARGIN = 30.0


def _fmt(x: float) -> str:
    s = f"{x:.2f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def _points(pts: Sequence[Point], shift: Point) -> str:
    return " ".join(f"{_fmt(x * _SCALE + shift[0])},{_fmt(-y * _SCALE + shift[1])}" for x, y in pts)


def render_svg(obj, tile_labels: bool = False) -> str:
    """
    SVG text for a Polygon, a Tiling or a PawTilingWitness. Output depends
    only on its arguments (fixed precision, sorted drawing order), so equal
    inputs give byte-identical files. ``tile_labels`` writes each rhombus's
    number at its centre.

    >>> render_svg(polygon("21")).splitlines()[0][:4]
    '<svg'
    """
    if isinstance(obj, Polygon):
        poly, rhombi, paw = obj, [], None
    elif isinstance(obj, Tiling):
        poly, rhombi, paw = Polygon(obj.w), list(obj.tiles), None
    elif isinstance(obj, PawTilingWitness):
        poly, rhombi, paw = Polygon(obj.host), list(obj.rhombi), obj.paw
    else:
        raise TypeError(f"cannot render {type(obj).__name__}")
    n = poly.n
    outline = poly.outline() or [(0.0, 0.0)]
    xs = [x for x, _ in outline]
    ys = [-y for _, y in outline]
    shift = (_MARGIN - min(xs) * _SCALE, _MARGIN - min(ys) * _SCALE)
    width = (max(xs) - min(xs)) * _SCALE + 2 * _MARGIN
    height = (max(ys) - min(ys)) * _SCALE + 2 * _MARGIN
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" height="{_fmt(height)}" '
           f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
           f'<title>X({poly.w})</title>']
    for t in sorted(rhombi, key=lambda t: t.label):
        r = t.rhombus
        out.append(f'<polygon class="rhombus" data-label="{t.label}" data-values="{r.small},{r.big}" '
                   f'points="{_points(r.vertices(n), shift)}" fill="#dde6f2" stroke="#333" stroke-width="1"/>')
        if tile_labels:
            vs = r.vertices(n)
            cx, cy = sum(x for x, _ in vs) / 4, sum(y for _, y in vs) / 4
            out.append(f'<text class="tile-label" x="{_fmt(cx * _SCALE + shift[0])}" '
                       f'y="{_fmt(-cy * _SCALE + shift[1] + 4)}" font-family="sans-serif" font-size="11" '
                       f'text-anchor="middle" fill="#555">{t.label}</text>')
    if paw is not None:
        out.append(f'<polygon class="paw" data-pattern="{paw.pattern}" points="{_points(paw.outline(n), shift)}" '
                   f'fill="#f2d9a6" stroke="#000" stroke-width="2.5"/>')
    out.append(f'<polygon class="outline" points="{_points(outline, shift)}" '
               f'fill="none" stroke="#000" stroke-width="2"/>')
    for side, (label, a, b) in enumerate(poly.sides()):
        mx, my = (a[0] + b[0]) / 2, (a[1] + b[1]) / 2
        # push labels outward, away from the left/right border
        dx = -0.25 if side < n else 0.25
        out.append(f'<text x="{_fmt((mx + dx) * _SCALE + shift[0])}" y="{_fmt(-my * _SCALE + shift[1] + 4)}" '
                   f'font-family="sans-serif" font-size="12" text-anchor="middle">{label}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


__all__ = [
    "Polygon", "Rhombus", "Tile", "Tiling", "MonoPiece", "MonoTrace", "Paw", "PawTilingWitness",
    "direction", "vertex", "polygon", "tiling_from_word", "tiling_from_rhombi", "class_to_tiling",
    "tiling_to_class", "tilings", "hexagon_flips", "flip_graph_edges", "mono_trace", "mono_word",
    "mono", "paw_is_isolated", "paw_tilings", "paw_tiling", "paw_witness", "render_svg",
]
