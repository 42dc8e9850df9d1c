import math
from pathlib import Path

import networkx as nx
import pytest

from redwords.elnitsky import (
    Rhombus,
    class_to_tiling,
    direction,
    flip_graph_edges,
    hexagon_flips,
    mono,
    mono_trace,
    mono_word,
    paw_is_isolated,
    paw_tiling,
    paw_tilings,
    paw_witness,
    polygon,
    render_svg,
    tiling_from_rhombi,
    tiling_from_word,
    tiling_to_class,
    tilings,
)
from redwords.errors import InconsistentInput, NotAnOccurrence
from redwords.pattern_redwords import _right_weak_lower_interval, is_value_stable
from redwords.permutation_core import Permutation, all_permutations, length, occurrences
from redwords.reduced_words import (
    ReducedWord,
    braid_graph,
    commutation_classes,
    count_commutation_classes,
    enumerate_reduced_words,
    lex_least_reduced_word,
)

P = Permutation.parse
DATA = Path(__file__).parent / "data"


def close(a, b):
    return math.isclose(a[0], b[0], abs_tol=1e-9) and math.isclose(a[1], b[1], abs_tol=1e-9)


def tiling_for(w, word):
    return next(t for t in tilings(w) if str(t.word) == word)


# --- polygon ---------------------------------------------------------------------


def test_polygon_3241():
    poly = polygon("3241")
    assert poly.right_labels == (1, 4, 2, 3)
    sides = poly.sides()
    assert len(sides) == 8
    assert close(sides[0][1], sides[-1][2])            # closed outline
    for (la, a0, a1) in sides:
        for (lb, b0, b1) in sides:
            va = (a1[0] - a0[0], a1[1] - a0[1])
            vb = (b1[0] - b0[0], b1[1] - b0[1])
            parallel = math.isclose(va[0] * vb[1] - va[1] * vb[0], 0, abs_tol=1e-9)
            assert parallel == (la == lb)


def test_polygon_degenerate_and_rhombus():
    ident = polygon("12")
    assert all(close(a, b) for a, b in zip(ident.left_vertices(), ident.right_vertices()))
    assert len(ident.sides()) == 4
    r = polygon("21")
    assert len(tilings("21")) == 1 and len(tilings("21")[0]) == 1
    assert close(r.left_vertices()[-1], r.right_vertices()[-1])


def test_left_border_convex():
    n = 6
    angles = [math.atan2(direction(L, n)[1], direction(L, n)[0]) for L in range(1, n + 1)]
    assert all(a < b for a, b in zip(angles, angles[1:]))
    assert all(-math.pi < a < 0 for a in angles)


# --- tilings and classes ---------------------------------------------------------------


def test_tilings_of_3241_match_the_labelled_figures():
    t1, t2 = tiling_for("3241", "2123"), tiling_for("3241", "1213")
    assert len(tilings("3241")) == 2
    assert [t.values for t in t1.tiles] == [(1, 4), (1, 2), (1, 3), (2, 3)]
    assert [t.values for t in t2.tiles] == [(1, 4), (2, 3), (1, 3), (1, 2)]
    assert tiling_to_class(t1).members == ((2, 1, 2, 3),)
    assert set(tiling_to_class(t2).members) == {(1, 2, 1, 3), (1, 2, 3, 1)}
    # both words of the second class draw the same rhombi
    assert tiling_from_word(ReducedWord((1, 2, 3, 1), 4)) == t2


def test_tilings_small_cases():
    (e,) = tilings("123")
    assert len(e) == 0 and str(tiling_to_class(e).canonical) == ""
    assert hexagon_flips(e) == []
    assert len(tilings("4321")) == 8


def test_tiling_words_read_back():
    for n in range(6):
        for w in all_permutations(n):
            for t in tilings(w):
                assert len(t) == length(w)
                word = tuple(x.position for x in reversed(t.tiles))
                assert word == t.word.letters


def test_bijection_round_trip_rank_6():
    for n in range(7):
        for w in all_permutations(n):
            ts = tilings(w)
            assert len(set(ts)) == count_commutation_classes(w)
            for c, t in zip(commutation_classes(w), ts):
                assert tiling_to_class(t).canonical == c.canonical
                assert class_to_tiling(c, w) == t


def test_inconsistent_input():
    with pytest.raises(InconsistentInput):
        tiling_from_word(ReducedWord((1, 1), 2), "12")
    with pytest.raises(InconsistentInput):
        class_to_tiling(commutation_classes("21")[0], "231")
    with pytest.raises(InconsistentInput):
        tiling_from_rhombi("21", [Rhombus(3, 1, frozenset())])


def test_flip_graph_matches_braid_graph_rank_5():
    t1 = tiling_for("3241", "2123")
    assert hexagon_flips(t1) == [tiling_for("3241", "1213")]
    for n in range(6):
        for w in all_permutations(n):
            bg = braid_graph(w)
            named = {frozenset(str(bg.vertices[i].canonical) for i in e) for e in bg.edges}
            flips = flip_graph_edges(w)
            assert flips == named
            g = nx.Graph()
            g.add_nodes_from(str(t.word) for t in tilings(w))
            g.add_edges_from(tuple(e) for e in flips)
            assert nx.is_isomorphic(g, bg.to_networkx())
    for t in tilings("4321"):
        i = [str(v.canonical) for v in braid_graph("4321").vertices].index(str(t.word))
        assert len(hexagon_flips(t)) == len(braid_graph("4321").neighbors(i))


# --- MONO -------------------------------------------------------------------------


def test_mono_figure_3():
    p, w = P("52143"), P("6213574")
    trace = mono_trace(p, w, (1, 2, 3, 5, 7), lex_least_reduced_word(p))
    t = tiling_from_word(trace.word, w)
    assert len(t) == length(w) == 8
    assert len(trace.pieces) == length(p)
    assert all(count_commutation_classes(piece.q) == 1 for piece in trace.pieces)


def test_mono_trivial_cases():
    for w in ("3241", "4321", "21"):
        for t in tilings(w):
            assert mono(w, w, tuple(range(1, len(w) + 1)), t) == t
    e = tilings("1")[0]
    for w in ("3241", "2143"):
        for i in range(1, 5):
            assert mono("1", w, (i,), e).word == lex_least_reduced_word(w)


def test_mono_rejects_non_occurrence():
    with pytest.raises(NotAnOccurrence):
        mono_word("21", "321", (1, 1), (1,))
    with pytest.raises(NotAnOccurrence):
        mono_word("21", "123", (1, 2), (1,))


def test_mono_injective_and_labelling_free_rank_5():
    for n in range(1, 6):
        for w in all_permutations(n):
            for k in range(1, n + 1):
                for p in all_permutations(k):
                    classes = commutation_classes(p)
                    words = enumerate_reduced_words(p)
                    for occ in occurrences(p, w):
                        images = [mono_word(p, w, occ, r) for r in words]
                        assert len(set(images)) == len(images)
                        outs = set()
                        for c in classes:
                            from_class = {tiling_from_word(mono_word(p, w, occ, m), w) for m in c.members}
                            assert len(from_class) == 1
                            outs |= from_class
                        assert len(outs) == len(classes)


# --- paws ---------------------------------------------------------------------------


def test_paw_witness_examples():
    wit = paw_witness("3421", "352641")
    assert wit.isolated and wit.edges == (1, 2, 3, 5)
    assert set(wit.paw.right_labels) == set(is_value_stable("3421", "352641").values)
    assert len(wit.rhombi) == length(P("352641")) - length(P("3421"))
    assert paw_witness("312", "321") is None
    non = paw_tiling("312", "321")
    assert non is not None and not non.isolated and len(non.rhombi) == 1
    whole = paw_witness("3241", "3241")
    assert whole.isolated and whole.rhombi == () and whole.edges == (1, 2, 3, 4)


def test_decreasing_paws_are_isolated():
    for k in range(1, 6):
        dec = tuple(range(k, 0, -1))
        assert paw_is_isolated(dec, dec)
        for n in range(k, 6):
            for w in all_permutations(n):
                for wit in paw_tilings(dec, w):
                    assert wit.isolated


def test_isolation_flag_against_weak_order_rank_5():
    # a rhombus can hug two paw edges y over z exactly when swapping them
    # stays inside the lower weak interval of w
    for n in range(1, 6):
        for w in all_permutations(n):
            lower = set(_right_weak_lower_interval(w))
            for k in range(2, n + 1):
                for p in all_permutations(k):
                    for wit in paw_tilings(p, w):
                        wp, start = wit.w_prime, list(wit.w_prime).index(wit.paw.right_labels[0])
                        hugging = False
                        for i in range(start, start + k - 1):
                            if wp[i] < wp[i + 1]:
                                swapped = list(wp)
                                swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
                                hugging |= Permutation(swapped) in lower
                        assert wit.isolated == (not hugging)


def test_isolated_paw_exactly_when_value_stable_rank_5():
    for n in range(1, 6):
        for w in all_permutations(n):
            for k in range(1, n + 1):
                for p in all_permutations(k):
                    has_isolated = any(x.isolated for x in paw_tilings(p, w))
                    assert has_isolated == (is_value_stable(p, w) is not None)


# --- rendering ------------------------------------------------------------------------


@pytest.mark.parametrize("name, make", [
    ("x3241_t1", lambda: render_svg(tiling_for("3241", "2123"), tile_labels=True)),
    ("paw_3421_352641", lambda: render_svg(paw_witness("3421", "352641"), tile_labels=True)),
    ("identity_3", lambda: render_svg(tilings("123")[0])),
])
def test_svg_golden(name, make):
    assert make() == (DATA / f"{name}.svg").read_text()
    assert make() == make()


def test_svg_contents():
    svg = render_svg(tiling_for("3241", "2123"), tile_labels=True)
    assert svg.count('class="rhombus"') == 4
    assert [svg.count(f'class="tile-label"') ] == [4]
    assert svg.count("<text") == 8 + 4
    bare = render_svg(tilings("123")[0])
    assert 'class="rhombus"' not in bare and 'class="outline"' in bare
    assert 'class="paw"' in render_svg(paw_witness("3421", "352641"))
    with pytest.raises(TypeError):
        render_svg("3241")
