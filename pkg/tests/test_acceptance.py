"""
One test per acceptance criterion. Each records a PASS/FAIL line that is
printed in the terminal summary. Criterion 5's full equivalence does not
hold (see test_criterion_5c), so that part is a strict xfail.
"""
from itertools import chain

import networkx as nx
import pytest

from acceptance_log import record, timed
from redwords.elnitsky import flip_graph_edges, mono_trace, mono_word, tiling_from_word, tilings
from redwords.enumeration import (
    Partition,
    catalan,
    catalan_refinement,
    check_C_monotone,
    check_equal_C,
    check_equal_R,
    check_R_monotone,
    count_231_by_length,
    enumerate_avoiders,
    formula_231,
    partition_count,
    partition_of_perm,
    partitions,
    pi_of_partition,
    reading_word,
    table_132,
    table_132_brute,
)
from redwords.errors import NoIsolatedEmbedding
from redwords.pattern_redwords import construct_isolated_embedding, isolated_patterns
from redwords.permutation_core import Permutation, all_permutations, occurrences, spreads_contained
from redwords.reduced_words import (
    braid_graph,
    commutation_classes,
    count_commutation_classes,
    count_reduced_words,
    enumerate_reduced_words,
    has_unique_reduced_word,
    lex_least_reduced_word,
)
from redwords.verify import KNOWN_TABLE_132

P = Permutation.parse


def test_criterion_1_reduced_words_of_3241():
    with timed() as t:
        words = {str(r) for r in enumerate_reduced_words("3241")}
        classes = commutation_classes("3241")
        g = braid_graph("3241")
    ok = (words == {"2123", "1213", "1231"} and len(classes) == 2
          and len(g.vertices) == 2 and len(g.edges) == 1 and t["seconds"] < 1)
    record("1", ok, f"R(3241) = {sorted(words)}, |C| = {len(classes)}, |E(G)| = {len(g.edges)}", t["seconds"])
    assert ok


def test_criterion_2_table():
    with timed() as t:
        table = table_132(11, 11)
        brute = table_132_brute(7, 11)
    exact = table == KNOWN_TABLE_132
    brute_ok = all(brute[d][ell] == table[d][ell] for d in range(12) for ell in range(8))
    ok = exact and brute_ok and t["seconds"] < 60
    record("2", ok, f"144 cells exact: {exact}; l <= 7 by brute force: {brute_ok}", t["seconds"])
    assert ok


def test_criterion_3_partition_bijection():
    with timed() as t:
        by_bijection = all(len({pi_of_partition(l) for l in partitions(n)}) == partition_count(n)
                           for n in range(13))
        by_brute = all(len(enumerate_avoiders("132", n)) == partition_count(n) for n in range(8))
        round_trip = all(partition_of_perm(pi_of_partition(l)) == l
                         for l in chain.from_iterable(partitions(n) for n in range(13)))
    ok = by_bijection and by_brute and round_trip
    record("3", ok, f"bijection l <= 12: {by_bijection}; brute l <= 7: {by_brute}; round trip: {round_trip}",
           t["seconds"])
    assert ok


def test_criterion_4_worked_example():
    with timed() as t:
        lam = Partition((7, 4, 4, 2, 1))
        word, perm = str(reading_word(lam)), str(pi_of_partition(lam))
    ok = word == "545345623451234567" and perm == "65472381"
    record("4", ok, f"read = {word}, pi = {perm}", t["seconds"])
    assert ok


# --- criterion 5 ---------------------------------------------------------------------


@pytest.fixture(scope="module")
def theorem_scan():
    """Exhaustive scan for p of rank <= 4 and w of rank <= 6."""
    patterns = [p for k in range(1, 5) for p in all_permutations(k)]
    out = {"pairs": 0, "only_if": [], "if": [], "construct_bad": [], "positives": 0}
    with timed() as t:
        for n in range(1, 7):
            for w in all_permutations(n):
                found = isolated_patterns(w, 4)
                for p in patterns:
                    if p.n > n:
                        continue
                    out["pairs"] += 1
                    spread = spreads_contained(p, w)
                    has = p in found
                    if has and not spread:
                        out["only_if"].append((p, w))
                    if spread and not has:
                        out["if"].append((p, w))
                    if has:
                        out["positives"] += 1
                        try:
                            if not construct_isolated_embedding(p, w).verify():
                                out["construct_bad"].append((p, w))
                        except NoIsolatedEmbedding:
                            out["construct_bad"].append((p, w))
    out["seconds"] = t["seconds"]
    return out


def test_criterion_5a_embedding_implies_spreads(theorem_scan):
    s = theorem_scan
    ok = not s["only_if"] and s["seconds"] < 600
    record("5a", ok, f"isolated factor => every spread contained, {s['pairs']} pairs, "
                     f"{len(s['only_if'])} exceptions", s["seconds"])
    assert ok


def test_criterion_5b_construction_on_positives(theorem_scan):
    s = theorem_scan
    ok = not s["construct_bad"]
    record("5b", ok, f"construction verified on all {s['positives']} brute-force positives", 0.0)
    assert ok


@pytest.mark.xfail(strict=True, reason="spreads contained does not imply an isolated factor; "
                                       "smallest counterexamples 123 in 1324 and 1324 in 13425")
def test_criterion_5c_spreads_imply_embedding(theorem_scan):
    s = theorem_scan
    bad = s["if"]
    first = ", ".join(f"({p}, {w})" for p, w in bad[:3])
    record("5c", not bad, f"every spread contained => isolated factor: {len(bad)} of "
                          f"{len(bad) + s['positives']} exceptions, e.g. {first}", 0.0)
    assert not bad


# --- criteria 6-10 ---------------------------------------------------------------------


def test_criterion_6_monotonicity_and_equality():
    with timed() as t:
        reports = [check_R_monotone(6), check_C_monotone(6), check_equal_R(6), check_equal_C(6)]
    ok = all(r.ok for r in reports)
    record("6", ok, "; ".join(str(r) for r in reports), t["seconds"])
    assert ok


def test_criterion_7_elnitsky():
    with timed() as t:
        counts = flips = injective = True
        for n in range(6):
            for w in all_permutations(n):
                ts = tilings(w)
                counts &= len(set(ts)) == count_commutation_classes(w)
                bg = braid_graph(w)
                g = nx.Graph()
                g.add_nodes_from(str(x.word) for x in ts)
                g.add_edges_from(tuple(e) for e in flip_graph_edges(w))
                flips &= nx.is_isomorphic(g, bg.to_networkx())
                for k in range(1, n + 1):
                    for p in all_permutations(k):
                        rp = enumerate_reduced_words(p)
                        for occ in occurrences(p, w):
                            words = [mono_word(p, w, occ, r) for r in rp]
                            tiles = {tiling_from_word(x, w) for x in words}
                            injective &= len(set(words)) == len(words)
                            injective &= len(tiles) == count_commutation_classes(p)
        p, w = P("52143"), P("6213574")
        trace = mono_trace(p, w, (1, 2, 3, 5, 7), lex_least_reduced_word(p))
        fig = len(tiling_from_word(trace.word, w)) == 8
    ok = counts and flips and injective and fig
    record("7", ok, f"|T| = |C|: {counts}; flips = G(w): {flips}; MONO injective: {injective}; "
                    f"52143 in 6213574: {fig}", t["seconds"])
    assert ok


def test_criterion_8_catalan():
    with timed() as t:
        sums = [sum(map(sum, catalan_refinement(n))) for n in range(1, 6)]
        four = catalan_refinement(4)
    ok = sums == [catalan(n) for n in range(1, 6)] and four == [[1], [1], [2, 1], [2, 3, 3, 1]]
    record("8", ok, f"sums {sums}; n = 4 summands {four}", t["seconds"])
    assert ok


def test_criterion_9_231_formulas():
    with timed() as t:
        bad = [(n, ell) for n in range(4, 9) for ell in range(1, 6)
               if count_231_by_length(n, ell) != formula_231(n, ell)]
    record("9", not bad, f"25 (n, l) cells, mismatches {bad}", t["seconds"])
    assert not bad


def test_criterion_10_unique_reduced_word():
    with timed() as t:
        bad = [w for n in range(8) for w in all_permutations(n)
               if has_unique_reduced_word(w) != (count_reduced_words(tuple(w)) == 1)]
    record("10", not bad, f"ranks 0..7, {len(bad)} disagreements", t["seconds"])
    assert not bad
