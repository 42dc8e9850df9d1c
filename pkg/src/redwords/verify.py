"""
Exhaustive verification suites. Each suite takes a rank bound and returns a
CheckReport; an empty violation list means every checked instance agreed.

>>> run_suite("catalan", 5).ok
True
"""
from __future__ import annotations

from typing import Callable

import networkx as nx

from .elnitsky import (
    flip_graph_edges,
    mono_trace,
    paw_is_isolated,
    paw_tilings,
    paw_witness,
    tiling_from_word,
    tiling_to_class,
    tilings,
)
from .enumeration import (
    P132,
    CheckReport,
    catalan,
    catalan_refinement,
    cell_132,
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
    partitions_with_k_parts,
    pi_of_partition,
    table_132,
    table_132_brute,
)
from .errors import NoIsolatedEmbedding
from .pattern_redwords import construct_isolated_embedding, is_value_stable, isolated_patterns
from .permutation_core import Permutation, all_permutations, occurrences, spreads_contained
from .reduced_words import (
    braid_graph,
    count_commutation_classes,
    count_reduced_words,
    enumerate_reduced_words,
    has_unique_reduced_word,
)

# |132-avoiders| by support d (rows) and length l (columns), 0 <= d, l <= 11.
KNOWN_TABLE_132 = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 2, 3, 3, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 2, 2, 6, 7, 6, 4, 1, 0],
    [0, 0, 0, 0, 0, 2, 2, 4, 8, 12, 15, 17],
    [0, 0, 0, 0, 0, 0, 2, 2, 4, 6, 12, 15],
    [0, 0, 0, 0, 0, 0, 0, 2, 2, 4, 6, 10],
    [0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 4, 6],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 4],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2],
]

MAX_PATTERN_RANK = 4


def suite_theorem_main(max_n: int) -> CheckReport:
    """
    For p of rank <= 4 and w of rank <= max_n: an isolated shifted factor
    exists exactly when every spread of p is contained in w, and the
    constructive search agrees with the exhaustive one.
    """
    report = CheckReport("theorem-main")
    patterns = [p for k in range(1, MAX_PATTERN_RANK + 1) for p in all_permutations(k)]
    for n in range(1, max_n + 1):
        for w in all_permutations(n):
            embedded = isolated_patterns(w, MAX_PATTERN_RANK)
            for p in patterns:
                if p.n > n:
                    continue
                report.checked += 1
                has, spread = p in embedded, spreads_contained(p, w)
                if has and not spread:
                    report.violations.append(f"{p} embeds in {w} but some spread is not contained")
                elif spread and not has:
                    report.violations.append(f"every spread of {p} is contained in {w} but no isolated factor exists")
                if spread:
                    try:
                        wit = construct_isolated_embedding(p, w)
                    except NoIsolatedEmbedding:
                        if has:
                            report.violations.append(f"construction failed for {p} in {w}")
                    else:
                        if not (has and wit.verify()):
                            report.violations.append(f"construction for {p} in {w} is not a valid witness")
    return report


def suite_r_mono(max_n: int) -> CheckReport:
    return check_R_monotone(max_n)


def suite_c_mono(max_n: int) -> CheckReport:
    return check_C_monotone(max_n)


def suite_equal_r(max_n: int) -> CheckReport:
    """The equal-R checks plus the closed-form test for a unique reduced word."""
    report = check_equal_R(max_n)
    for n in range(0, max_n + 1):
        for w in all_permutations(n):
            report.checked += 1
            if has_unique_reduced_word(w) != (count_reduced_words(tuple(w)) == 1):
                report.violations.append(f"unique-word shape test disagrees on {w}")
    return report


def suite_equal_c(max_n: int) -> CheckReport:
    return check_equal_C(max_n)


def suite_elnitsky(max_n: int) -> CheckReport:
    report = CheckReport("elnitsky")
    for n in range(0, max_n + 1):
        for w in all_permutations(n):
            report.checked += 1
            ts = tilings(w)
            if len(set(ts)) != count_commutation_classes(w):
                report.violations.append(f"|T({w})| != |C({w})|")
            if any(tiling_to_class(t).canonical != t.word for t in ts):
                report.violations.append(f"tiling/class round trip fails for {w}")
            bg = braid_graph(w)
            named = {frozenset(str(bg.vertices[i].canonical) for i in e) for e in bg.edges}
            flips = flip_graph_edges(w)
            g = nx.Graph()
            g.add_nodes_from(str(t.word) for t in ts)
            g.add_edges_from(tuple(e) for e in flips)
            if named != flips or not nx.is_isomorphic(g, bg.to_networkx()):
                report.violations.append(f"flip graph of {w} differs from its braid graph")
            for k in range(1, n + 1):
                for p in all_permutations(k):
                    words = enumerate_reduced_words(p)
                    for occ in occurrences(p, w):
                        report.checked += 1
                        images = [mono_trace(p, w, occ, r).word for r in words]
                        if len(set(images)) != len(images):
                            report.violations.append(f"MONO word map not injective for {p} at {occ.positions} in {w}")
                        by_tile = {tiling_from_word(img, w) for img in images}
                        if len(by_tile) != count_commutation_classes(p):
                            report.violations.append(f"MONO not injective on tilings for {p} at {occ.positions} in {w}")
                    isolated = any(x.isolated for x in paw_tilings(p, w))
                    if isolated != (is_value_stable(p, w) is not None):
                        report.violations.append(f"isolated paw for {p} in {w} disagrees with value-stability")
            rev = tuple(range(n, 0, -1))
            if n and not paw_is_isolated(Permutation(rev), rev):
                report.violations.append(f"decreasing paw of rank {n} not isolated")
    report.checked += 1
    if not _figure_3_ok():
        report.violations.append("the 52143 in 6213574 instance fails")
    return report


def _figure_3_ok() -> bool:
    from .reduced_words import lex_least_reduced_word

    p, w = Permutation.parse("52143"), Permutation.parse("6213574")
    trace = mono_trace(p, w, (1, 2, 3, 5, 7), lex_least_reduced_word(p))
    t = tiling_from_word(trace.word, w)
    return len(t) == 8 and all(count_commutation_classes(piece.q) == 1 for piece in trace.pieces)


def suite_bijection_132(max_n: int) -> CheckReport:
    report = CheckReport("bijection-132")
    for ell in range(0, 13):
        parts = partitions(ell)
        images = [pi_of_partition(lam) for lam in parts]
        report.checked += len(parts)
        if len(parts) != partition_count(ell) or len(set(images)) != len(images):
            report.violations.append(f"bijection count fails at length {ell}")
        for lam, w in zip(parts, images):
            if partition_of_perm(w) != lam:
                report.violations.append(f"round trip fails for {lam}")
        if ell <= 7:
            if set(images) != enumerate_avoiders(P132, ell):
                report.violations.append(f"image differs from brute-force avoiders at length {ell}")
            if len(enumerate_avoiders("213", ell)) != partition_count(ell):
                report.violations.append(f"213 mirror count fails at length {ell}")
        if ell <= 10:
            for k in range(1, ell + 1):
                lead = sum(1 for w in images if w and w[0] == k + 1)
                if lead != len(partitions_with_k_parts(ell, k)):
                    report.violations.append(f"first-entry refinement fails at length {ell}, k = {k}")
    return report


def suite_table1(max_n: int) -> CheckReport:
    report = CheckReport("table1", checked=144)
    table = table_132(11, 11)
    for d in range(12):
        for ell in range(12):
            if table[d][ell] != KNOWN_TABLE_132[d][ell]:
                report.violations.append(f"cell d={d}, l={ell}: {table[d][ell]} != {KNOWN_TABLE_132[d][ell]}")
    brute = table_132_brute(7, 11)
    for d in range(12):
        for ell in range(8):
            report.checked += 1
            if brute[d][ell] != table[d][ell]:
                report.violations.append(f"brute force cell d={d}, l={ell}: {brute[d][ell]} != {table[d][ell]}")
    for ell in range(12):
        if sum(table[d][ell] for d in range(12)) != partition_count(ell):
            report.violations.append(f"column {ell} does not sum to p({ell})")
    return report


def suite_catalan(max_n: int) -> CheckReport:
    report = CheckReport("catalan")
    for n in range(1, 16):
        report.checked += 1
        if sum(map(sum, catalan_refinement(n))) != catalan(n):
            report.violations.append(f"refinement sum fails for n = {n}")
    table = table_132(10, 4)
    for n in range(1, 6):
        report.checked += 1
        direct = sum(table[d][ell] for d in range(n) for ell in range(n * (n - 1) // 2 + 1))
        if direct != catalan(n) or any(cell_132(ell, d) != table[d][ell] for d in range(5) for ell in range(11)):
            report.violations.append(f"table sum fails for n = {n}")
    if catalan_refinement(4) != [[1], [1], [2, 1], [2, 3, 3, 1]]:
        report.violations.append("n = 4 decomposition differs")
    return report


def suite_s6_231(max_n: int) -> CheckReport:
    report = CheckReport("s6-231")
    for n in range(4, 9):
        for ell in range(1, 6):
            report.checked += 1
            if count_231_by_length(n, ell) != formula_231(n, ell):
                report.violations.append(f"n={n}, l={ell}: {count_231_by_length(n, ell)} != {formula_231(n, ell)}")
    return report


SUITES: dict[str, Callable[[int], CheckReport]] = {
    "theorem-main": suite_theorem_main,
    "r-mono": suite_r_mono,
    "c-mono": suite_c_mono,
    "equal-r": suite_equal_r,
    "equal-c": suite_equal_c,
    "elnitsky": suite_elnitsky,
    "bijection-132": suite_bijection_132,
    "table1": suite_table1,
    "catalan": suite_catalan,
    "s6-231": suite_s6_231,
}


def run_suite(name: str, max_n: int = 5) -> CheckReport:
    report = SUITES[name](max_n)
    report.name = name
    return report


def run_suites(names: list[str], max_n: int = 5) -> list[CheckReport]:
    return [run_suite(name, max_n) for name in names]
