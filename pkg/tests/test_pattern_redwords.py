import pytest
from hypothesis import given, strategies as st

from strategies import perms
from redwords.errors import MalformedSpan, NoIsolatedEmbedding, NotContained, SpreadsNotContained
from redwords.pattern_redwords import (
    IsolationSpan,
    construct_isolated_embedding,
    find_isolated_embedding,
    gap,
    is_isolated,
    is_value_stable,
    isolated_patterns,
    iter_isolated_factors,
    occurrence_gap,
)
from redwords.permutation_core import (
    Permutation,
    all_permutations,
    apply_left,
    apply_right,
    contains,
    occurrences,
    spreads_contained,
)
from redwords.reduced_words import ReducedWord, enumerate_reduced_words, evaluate

P = Permutation.parse
S = ReducedWord((1, 2, 3, 2, 5), 6)   # a reduced word of 243165


def small_patterns(max_k):
    return [p for k in range(1, max_k + 1) for p in all_permutations(k)]


def test_isolation_examples():
    assert evaluate(S) == P("243165")
    not_iso = IsolationSpan(S, 1, 2, 1, 2)
    assert evaluate(not_iso.prefix, 6) == P("213456")
    assert not is_isolated(not_iso)
    iso = IsolationSpan(S, 3, 4, 1, 2)
    assert evaluate(iso.prefix, 6) == P("234156")
    assert evaluate(iso.suffix, 6) == P("123465")
    assert is_isolated(iso)


def test_isolation_empty_factor_and_malformed():
    w = ReducedWord((3, 4), 5)       # prefix and suffix both fix 1 and 2
    assert is_isolated(IsolationSpan(w, 1, 1, 1, 1))
    with pytest.raises(MalformedSpan):
        is_isolated(IsolationSpan(w, 2, 1, 1, 1))
    with pytest.raises(MalformedSpan):
        is_isolated(IsolationSpan(w, 0, 0, 0, 1))
    with pytest.raises(MalformedSpan):
        is_isolated(IsolationSpan(ReducedWord((1, 1), 3), 0, 1, 1, 1))
    assert not is_isolated(IsolationSpan(w, 0, 1, 1, 5))     # m' must stay below the rank


def test_gap_examples():
    assert gap("321", "321").total == 0
    g = gap("21", "2143")
    assert g.total == 0 and g.occurrence.positions == (1, 2)
    brute = min(occurrence_gap(o).total for o in occurrences(P("321"), P("42513")))
    assert gap("321", "42513").total == brute
    with pytest.raises(NotContained):
        gap("12", "21")


@given(perms(min_n=1, max_n=6), st.data())
def test_gap_zero_flags(w, data):
    k = data.draw(st.integers(1, w.n))
    occ = occurrences(P("1" if k == 1 else "12"[:k]), w) if k <= 2 else []
    for o in occ:
        g = occurrence_gap(o)
        assert (g.gap_pos == 0) == (o.positions[-1] - o.positions[0] == len(o.positions) - 1)


def test_find_isolated_embedding_examples():
    wit = find_isolated_embedding("132", "243165")
    assert wit is not None and wit.verify() and wit.shift == 0 and wit.interval == (1, 2)
    for p in ("3241", "21", "1"):
        wit = find_isolated_embedding(p, p)
        assert wit.verify() and wit.shift == 0
        assert (wit.start, wit.end) == (0, len(wit.word))
    assert find_isolated_embedding("2143", "21354") is None
    assert find_isolated_embedding("321", "14325") is not None


def test_construct_examples():
    wit = construct_isolated_embedding("132", "243165")
    assert wit.verify() and wit.factor == (2,)
    for p in ("3241", "4321", "12"):
        wit = construct_isolated_embedding(p, p)
        assert wit.verify() and wit.shift == 0 and len(wit.factor) == len(wit.word)
    wit = construct_isolated_embedding("3421", "352641")
    assert wit.verify() and wit.pattern == P("3421")
    with pytest.raises(SpreadsNotContained):
        construct_isolated_embedding("2143", "21354")


def test_construct_reports_counterexamples():
    # every spread contained, but exhaustively no isolated embedding
    for p, w in (("123", "1324"), ("1324", "13425")):
        assert spreads_contained(p, w)
        assert find_isolated_embedding(p, w) is None
        with pytest.raises(NoIsolatedEmbedding):
            construct_isolated_embedding(p, w)
    assert {str(r) for r in enumerate_reduced_words("13425")} == {"23"}


def test_value_stable_examples():
    occ = is_value_stable("3421", "352641")
    assert occ.values == (3, 5, 2, 1)
    assert is_value_stable("21354", "241365") is None
    for p in ("3241", "1", "21"):
        assert is_value_stable(p, p).positions == tuple(range(1, len(p) + 1))


def test_factor_scan_agrees_with_word_scan_rank_5():
    for n in range(1, 6):
        for w in all_permutations(n):
            assert isolated_patterns(w, 4) == isolated_patterns(w, 4, by_words=True)


def test_embedding_implies_spreads_rank_5():
    for n in range(1, 6):
        for w in all_permutations(n):
            for p in isolated_patterns(w, 4):
                assert spreads_contained(p, w)


def test_construct_sound_on_positives_rank_5():
    for n in range(1, 6):
        for w in all_permutations(n):
            found = isolated_patterns(w, 4)
            for p in small_patterns(min(4, n)):
                if not spreads_contained(p, w):
                    continue
                if p in found:
                    assert construct_isolated_embedding(p, w).verify()
                else:
                    with pytest.raises(NoIsolatedEmbedding):
                        construct_isolated_embedding(p, w)


def test_factor_replaceability_rank_5():
    for n in range(1, 6):
        for w in all_permutations(n):
            for wit in iter_isolated_factors(w, 3):
                for r in enumerate_reduced_words(wit.pattern):
                    other = wit.replace_factor(r.letters)
                    assert other.verify()


def test_swaps_avoiding_an_occurrence_keep_the_pattern_rank_5():
    for n in range(2, 6):
        for w in all_permutations(n):
            for p in small_patterns(min(3, n)):
                for o in occurrences(p, w):
                    vals, pos = set(o.values), set(o.positions)
                    for i in range(1, n):
                        if not {i, i + 1} <= vals:
                            assert contains(p, apply_left(i, w))
                        if not {i, i + 1} <= pos:
                            assert contains(p, apply_right(w, i))


def test_value_stable_implies_spreads_rank_5():
    for n in range(1, 6):
        for w in all_permutations(n):
            for p in small_patterns(min(4, n)):
                if is_value_stable(p, w) is not None:
                    assert spreads_contained(p, w)
