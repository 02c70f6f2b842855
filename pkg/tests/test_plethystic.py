from plethysm.partitions import dominates, is_partition, trim
from plethysm.plethystic import (
    PlethysticTableau,
    count_pssyt_weight,
    enumerate_pssyt,
    enumerate_pssyt_weight,
    format_pssyt,
    inner_alphabet,
    is_closed,
    maximal_weights,
    parse_pssyt,
    weight_histogram,
)
from plethysm.tableaux import Tableau, parse_tableau, superstandard

T = parse_tableau


def test_weight_examples():
    S = parse_pssyt("[1 1/2][1 1/2] || [1 1/3][1 2/2]", (2, 1))
    assert S.weight() == (7, 4, 1)
    allones = parse_pssyt("[1 1 1][1 1 1][1 1 1]", (3,))
    assert allones.weight() == (9,)
    single = PlethysticTableau((2, 1), ((superstandard((2, 1)),),))
    assert single.weight() == (2, 1)


def test_parse_format_roundtrip():
    text = "[1 1/2][1 1/3] || [1 2/2]"
    S = parse_pssyt(text, (2, 1))
    assert format_pssyt(S) == text
    assert parse_pssyt(format_pssyt(S), (2, 1)) == S


def test_semistandard_predicate():
    good = parse_pssyt("[1 1][1 2] || [2 2][2 3]", (2,))
    assert good.is_semistandard()
    # outer column fails strictness
    bad = parse_pssyt("[1 1] || [1 1]", (2,))
    assert not bad.is_semistandard()


def test_enumerate_pssyt_weight_examples():
    found = enumerate_pssyt_weight((1, 1, 1), (1, 1, 1), (3, 3, 1, 1, 1))
    assert len(found) == 1
    assert format_pssyt(found[0]) == "[1/2/3] || [1/2/4] || [1/2/5]"

    col = enumerate_pssyt((2,), (1, 1, 1), 2)
    assert len(col) == 1
    assert format_pssyt(col[0]) == "[1 1] || [1 2] || [2 2]"

    assert len(enumerate_pssyt((), (1,), 3)) == 1
    assert len(enumerate_pssyt((2, 1), (), 3)) == 1


def test_enumeration_consistency():
    for mu, nu, d in [((2,), (2, 1), 2), ((1, 1), (2,), 3), ((2, 1), (2,), 2)]:
        full = enumerate_pssyt(mu, nu, d)
        assert all(S.is_semistandard() for S in full)
        hist = weight_histogram(mu, nu, d)
        assert sum(hist.values()) == len(full)
        for beta, n in hist.items():
            per_weight = enumerate_pssyt_weight(mu, nu, beta, d)
            assert len(per_weight) == n == count_pssyt_weight(mu, nu, beta, d)
            assert per_weight == [S for S in full if trim(S.weight()) == trim(beta)]


def test_count_matches_enumeration_with_limit():
    assert count_pssyt_weight((2,), (1, 1, 1), (4, 1, 1), limit=1) == 1
    assert count_pssyt_weight((2,), (1, 1, 1), (5, 1)) == 0
    assert count_pssyt_weight((2,), (1, 1, 1), (2, 2, 2)) == len(
        enumerate_pssyt_weight((2,), (1, 1, 1), (2, 2, 2))
    )


def test_is_closed():
    entries = [
        "1 1/2 2", "1 1/2 3", "1 2/2 3", "1 1/3 3", "1 2/3 3", "1 1/2 4",
        "1 2/2 4", "1 1/3 4", "1 2/3 4", "1 1/4 4", "1 2/4 4",
    ]
    assert is_closed([T(e) for e in entries])
    assert is_closed([superstandard((2, 1))])
    assert not is_closed([T("1 2/3")])


def test_maximal_weights_examples():
    assert maximal_weights((1, 1, 1), (1, 1, 1)) == {
        (3, 3, 1, 1, 1): 1,
        (3, 2, 2, 2): 1,
    }
    assert maximal_weights((2,), (1, 1, 1)) == {(4, 1, 1): 1, (3, 3): 1}
    mw = maximal_weights((2, 1), (1, 1, 1, 1))
    assert mw[(6, 4, 2)] == 2


def test_maximal_weights_match_full_enumeration():
    # oracle: dominance-maximal elements of the full achievable weight set
    for mu, nu in [((2,), (2,)), ((1, 1), (2, 1)), ((2, 1), (1, 1)), ((2,), (1, 1, 1))]:
        mw = maximal_weights(mu, nu)
        d = sum(mu) * sum(nu)
        hist = weight_histogram(mu, nu, d)
        achievable = {trim(b) for b, n in hist.items() if n}
        expected = {
            w for w in achievable
            if not any(b != w and dominates(b, w) for b in achievable)
        }
        assert set(mw) == expected
        for w, cnt in mw.items():
            assert is_partition(w)
            assert cnt == count_pssyt_weight(mu, nu, w, d)


def test_maximal_weight_pssyt_of_single_column_are_closed():
    for mu, n in [((2,), 3), ((1, 1), 3), ((2, 1), 2), ((3,), 2)]:
        nu = (1,) * n
        for w in maximal_weights(mu, nu):
            for S in enumerate_pssyt_weight(mu, nu, w, len(w)):
                assert is_closed(S.entries())


def test_inner_alphabet_sorted():
    alpha = inner_alphabet((2, 1), 3)
    assert len(alpha) == 8
    assert all(a < b for a, b in zip(alpha, alpha[1:]))


def test_pssyt_validation_errors():
    import pytest

    with pytest.raises(ValueError):
        PlethysticTableau((2,), ((T("1/2"),),))  # wrong inner shape
    with pytest.raises(ValueError):
        parse_pssyt("no brackets here", (2,))
    # outer row lengths must form a partition
    with pytest.raises(ValueError):
        Tableau(((1,), (1, 2)))


def test_clear_caches_preserves_results():
    import plethysm

    before = maximal_weights((2,), (1, 1, 1))
    plethysm.clear_caches()
    assert maximal_weights((2,), (1, 1, 1)) == before
    from plethysm.symfunc import decompose

    assert [c for _, c in decompose((2,), (2,)).terms()] == [1, 1]
