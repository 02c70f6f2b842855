import itertools

import pytest

from plethysm.hwv import (
    HwVector,
    foulkes_hwv,
    get_space,
    hwv_space,
    is_highest_weight,
    multiply_hwv,
    raising_action,
    star_map,
    tilde_map,
    weight_space_basis,
)
from plethysm.partitions import add, dominates, trim
from plethysm.plethystic import (
    PlethysticTableau,
    format_pssyt,
    maximal_weights,
    parse_pssyt,
)
from plethysm.symfunc import plethysm_coefficient
from plethysm.tableaux import EMPTY_TABLEAU, Tableau, parse_tableau

T = parse_tableau


def vector_of(T_, d):
    return HwVector(T_.mu, T_.nu, d, T_.weight(), {T_: 1})


def test_raising_on_pair_example():
    mu = (2, 1, 1)
    T1 = parse_pssyt("[1 1/2/3][1 2/3/4]", mu)
    T2 = parse_pssyt("[1 1/2/3][1 3/2/4]", mu)
    img = raising_action(2, vector_of(T1, 4))
    expected = parse_pssyt("[1 1/2/3][1 1/3/4]", mu)
    assert img.coeffs == {expected: 1}
    assert trim(img.weight) == (4, 1, 2, 1)
    assert raising_action(2, vector_of(T2, 4)).is_zero()


def test_raising_bad_letter():
    v = foulkes_hwv(2)
    with pytest.raises(ValueError):
        raising_action(1, v)
    with pytest.raises(ValueError):
        raising_action(5, v)


def test_raising_wedge_example():
    entries = [
        "1 1/2 2", "1 1/2 3", "1 2/2 3", "1 1/3 3", "1 2/3 3", "1 1/2 4",
        "1 2/2 4", "1 1/3 4", "1 2/3 4", "1 1/4 4", "1 2/4 4",
    ]
    tabs = sorted((T(e) for e in entries), key=Tableau.sort_key)
    big = PlethysticTableau((2, 2), tuple((t,) for t in tabs))
    assert big.is_semistandard() and big.weight() == (17, 11, 8, 8)
    v = vector_of(big, 4)
    img = raising_action(4, v)
    assert len(img.coeffs) == 1
    (Tp, c), = img.coeffs.items()
    assert c == -1
    assert Tp.weight() == (17, 11, 9, 7)
    assert dominates(Tp.weight(), big.weight())
    assert not is_highest_weight(v)
    assert is_highest_weight(vector_of(Tp, 4))
    replaced = T("1 3/2 4")
    assert replaced in Tp.entries() and T("1 2/4 4") not in Tp.entries()


def test_weight_space_basis_examples():
    basis = weight_space_basis((2, 1, 1), (2,), 4, (3, 2, 2, 1))
    named = {format_pssyt(S) for S in basis}
    for text in [
        "[1 1/2/3][1 2/3/4]",
        "[1 1/2/3][1 3/2/4]",
        "[1 1/3/4][1 2/2/3]",
        "[1 1/2/4][1 3/2/3]",
    ]:
        assert text in named
    assert weight_space_basis((2,), (2,), 2, (3, 2)) == []  # wrong degree
    assert len(weight_space_basis((3,), (3,), 9, (9,))) == 1


def test_hwv_space_examples():
    vs = hwv_space((2, 1, 1), (2,), (3, 2, 2, 1), 4)
    assert len(vs) == 1
    v = vs[0]
    mu = (2, 1, 1)
    expected = {
        parse_pssyt("[1 1/2/3][1 2/3/4]", mu): 1,
        parse_pssyt("[1 1/2/3][1 3/2/4]", mu): -1,
        parse_pssyt("[1 1/3/4][1 2/2/3]", mu): -1,
        parse_pssyt("[1 1/2/4][1 3/2/3]", mu): 1,
    }
    scale = v.coeffs[parse_pssyt("[1 1/2/3][1 2/3/4]", mu)]
    assert abs(scale) == 1
    assert v.coeffs == {k: scale * c for k, c in expected.items()}
    assert is_highest_weight(v)
    for c in (2, 3, 4):
        assert raising_action(c, v).is_zero()

    assert len(hwv_space((2, 1), (1, 1, 1, 1), (6, 4, 2), 3)) == 2
    # first part above the box bound forces zero
    assert hwv_space((2,), (2,), (4,)) == [] or plethysm_coefficient((2,), (2,), (4,)) == 1
    assert hwv_space((2, 1), (2,), (5, 1)) == []


def test_hwv_space_validation():
    with pytest.raises(ValueError):
        hwv_space((2,), (2,), (3, 2))
    with pytest.raises(ValueError):
        hwv_space((2,), (2,), (2, 1, 1), d=2)


def test_foulkes_examples():
    w1 = foulkes_hwv(1)
    assert format_pssyt(next(iter(w1.coeffs))) == "[1 1]"
    w2 = foulkes_hwv(2)
    assert w2.coeffs == {
        parse_pssyt("[1 1][2 2]", (2,)): 1,
        parse_pssyt("[1 2][1 2]", (2,)): -1,
    }
    w3 = foulkes_hwv(3)
    allones = parse_pssyt("[1 1][2 2][3 3]", (2,))
    assert w3.coeffs[allones] == 1
    for l in (1, 2, 3, 4):
        w = foulkes_hwv(l)
        assert trim(w.weight) == (2,) * l
        assert is_highest_weight(w)
    with pytest.raises(ValueError):
        foulkes_hwv(8)


def test_tilde_map_chain_from_empty():
    # iterated top-row insertion starting from the trivial module
    v = HwVector((), (3,), 1, (), {PlethysticTableau((), ((EMPTY_TABLEAU,) * 3,)): 1})
    for step, expected_weight in [(1, (3,)), (2, (3, 3)), (3, (3, 3, 3))]:
        v = tilde_map(v, 1)
        assert trim(v.weight) == expected_weight
        assert is_highest_weight(v)
        assert all(S.is_semistandard() for S in v.coeffs)
    assert v.mu == (1, 1, 1)
    assert plethysm_coefficient((3,), (1, 1, 1), (3, 3, 3)) == 1
    # sign-twisted restatements of the same multiplicity
    assert plethysm_coefficient((1, 1, 1), (3,), (3, 3, 3)) == 1
    assert plethysm_coefficient((1, 1, 1), (1, 1, 1), (1,) * 9) == 1


def test_tilde_map_single_box():
    v = HwVector((1,), (1,), 1, (1,), {parse_pssyt("[1]", (1,)): 1})
    w = tilde_map(v, 1)
    assert w.mu == (1, 1) and trim(w.weight) == (1, 1)
    assert format_pssyt(next(iter(w.coeffs))) == "[1/2]"
    assert is_highest_weight(w)


def test_tilde_map_preserves_hwv():
    for v in hwv_space((2, 1, 1), (2,), (3, 2, 2, 1), 4):
        w = tilde_map(v, 3)
        assert w.mu == (3, 2, 1, 1)
        assert trim(w.weight) == (6, 3, 2, 2, 1)
        assert is_highest_weight(w)
    with pytest.raises(ValueError):
        tilde_map(v, 1)


def test_star_map_examples():
    v = hwv_space((2, 1, 1), (2,), (3, 2, 2, 1), 4)[0]
    vstar = star_map(v, 2)
    assert vstar.mu == (3, 2, 1)
    assert trim(vstar.weight) == (5, 4, 2, 1)
    assert is_highest_weight(vstar)
    # iterating adds another column
    vstar2 = star_map(vstar, 2)
    assert vstar2.mu == (4, 3, 1)
    assert trim(vstar2.weight) == (7, 6, 2, 1)
    assert is_highest_weight(vstar2)
    with pytest.raises(ValueError):
        star_map(v, 5)


def test_star_map_padded_quadratic_family():
    # the padded tableaux family: lengthening the inner row keeps each
    # maximal constituent with multiplicity one
    for lam in ((4, 1, 1), (3, 3)):
        vs = hwv_space((2,), (1, 1, 1), lam, 3)
        assert len(vs) == 1
        w = star_map(vs[0], 1)
        assert w.mu == (3,)
        assert trim(w.weight) == add(lam, (3,))
        assert is_highest_weight(w)


def test_multiply_hwv():
    w2, w1 = foulkes_hwv(2, 3), foulkes_hwv(1, 3)
    prod = multiply_hwv(w2, w1)
    assert trim(prod.weight) == (4, 2)
    assert prod.nu == (3,)
    assert is_highest_weight(prod)

    empty = HwVector((2,), (), 3, (), {PlethysticTableau((2,), ()): 1})
    again = multiply_hwv(w2, empty)
    assert again.coeffs == w2.coeffs and trim(again.weight) == (2, 2)

    # the quadratic symmetric cube decomposes with weights (6), (4,2), (2,2,2)
    w3 = foulkes_hwv(3)
    top = HwVector(
        (2,), (1,), 3, (2,), {parse_pssyt("[1 1]", (2,)): 1}
    )
    cube = multiply_hwv(multiply_hwv(top, top), top)
    assert trim(cube.weight) == (6,)
    for v in (cube, multiply_hwv(prod, HwVector((2,), (), 3, (), {PlethysticTableau((2,), ()): 1})), w3):
        assert is_highest_weight(v)
    with pytest.raises(ValueError):
        multiply_hwv(w2, foulkes_hwv(1, 4))


def test_maximal_weight_singletons_are_highest_weight():
    for mu, nu in [((2,), (2,)), ((1, 1), (2, 1)), ((2, 1), (1, 1)), ((2,), (1, 1, 1))]:
        for lam, count in maximal_weights(mu, nu).items():
            d = max(len(lam), 1)
            basis = weight_space_basis(mu, nu, d, lam)
            assert len(basis) == count
            for S in basis:
                assert is_highest_weight(vector_of(S, d))


def test_raising_weight_bookkeeping():
    space_cases = [((2, 1), (2,), (2, 2, 1, 1)), ((2,), (2, 1), (3, 2, 1))]
    for mu, nu, beta in space_cases:
        for S in weight_space_basis(mu, nu, len(beta), beta):
            v = vector_of(S, len(beta))
            for c in range(2, len(beta) + 1):
                img = raising_action(c, v)
                for U in img.coeffs:
                    assert trim(U.weight()) == trim(img.weight)


def _double_tabloid_expand(space, rank_tab):
    """Fully expand F(S) over outer tabloids of inner tabloids.

    Independent of the straightening machinery: both symmetrization levels
    are expanded by brute signed sums, and keys are canonicalized by row
    sorting at both levels.
    """
    from plethysm.polytabloid import expand_polytabloid

    outer_terms = expand_polytabloid(rank_tab)
    acc = {}
    for outer_key, outer_coeff in outer_terms.items():
        per_box = []
        for row in outer_key.rows:
            for rank in row:
                inner = expand_polytabloid(space.alphabet[rank])
                per_box.append(list(inner.items()))
        shape = tuple(len(r) for r in outer_key.rows)
        for combo in itertools.product(*per_box):
            coeff = outer_coeff
            flat = []
            for inner_key, c in combo:
                coeff *= c
                flat.append(inner_key)
            rows, k = [], 0
            for r in shape:
                rows.append(tuple(sorted(flat[k : k + r], key=lambda t: (t.sort_key(), t.rows))))
                k += r
            key = tuple(rows)
            val = acc.get(key, 0) + coeff
            if val:
                acc[key] = val
            else:
                acc.pop(key, None)
    return acc


def _double_tabloid_raise(c, vec):
    """Leibniz action of the raising operator at the fully expanded level."""
    out = {}
    for key, coeff in vec.items():
        for bi, row in enumerate(key):
            for bj, inner in enumerate(row):
                for i, j in inner.boxes():
                    if inner.entry(i, j) != c:
                        continue
                    lowered = Tableau(
                        tuple(tuple(sorted(r)) for r in inner.replace_entry(i, j, c - 1).rows)
                    )
                    new_row = list(row)
                    new_row[bj] = lowered
                    new_key = list(key)
                    new_key[bi] = tuple(sorted(new_row, key=lambda t: (t.sort_key(), t.rows)))
                    new_key = tuple(new_key)
                    val = out.get(new_key, 0) + coeff
                    if val:
                        out[new_key] = val
                    else:
                        out.pop(new_key, None)
    return out


def test_raising_commutes_with_double_tabloid_expansion():
    # the canonical-basis raising action, re-expanded to the double tabloid
    # level, must agree with the Leibniz action applied there directly;
    # iterating twice exercises straightened intermediates
    from plethysm.hwv import get_space

    from plethysm.plethystic import weight_histogram

    cases = [((2,), (2, 1), 3), ((2, 1), (1, 1), 3), ((2, 1), (2,), 3)]
    for mu, nu, d in cases:
        space = get_space(mu, nu, d)
        hist = weight_histogram(mu, nu, d)
        some_weights = sorted(hist)[:4]
        for beta in some_weights:
            for S in space.weight_basis(beta)[:3]:
                start = {S: 1}
                for c in range(2, d + 1):
                    canonical = {}
                    for tab, coeff in start.items():
                        for key, val in space.raising_on_basis(c, tab).items():
                            canonical[key] = canonical.get(key, 0) + coeff * val
                    lhs = {}
                    for tab, coeff in canonical.items():
                        for key, val in _double_tabloid_expand(space, tab).items():
                            v = lhs.get(key, 0) + coeff * val
                            if v:
                                lhs[key] = v
                            else:
                                lhs.pop(key, None)
                    expanded = {}
                    for tab, coeff in start.items():
                        for key, val in _double_tabloid_expand(space, tab).items():
                            v = expanded.get(key, 0) + coeff * val
                            if v:
                                expanded[key] = v
                            else:
                                expanded.pop(key, None)
                    rhs = _double_tabloid_raise(c, expanded)
                    assert lhs == rhs, (mu, nu, beta, c)
                    # one more application on the image
                    second_start = canonical
                    canonical2 = {}
                    for tab, coeff in second_start.items():
                        for key, val in space.raising_on_basis(c, tab).items():
                            canonical2[key] = canonical2.get(key, 0) + coeff * val
                    lhs2 = {}
                    for tab, coeff in canonical2.items():
                        for key, val in _double_tabloid_expand(space, tab).items():
                            v = lhs2.get(key, 0) + coeff * val
                            if v:
                                lhs2[key] = v
                            else:
                                lhs2.pop(key, None)
                    assert lhs2 == _double_tabloid_raise(c, lhs), (mu, nu, beta, c, "2nd")


def test_maximal_weight_singletons_grid():
    # every maximal-weight tableau is a highest-weight vector, across all
    # shape pairs of total degree at most 10
    from plethysm.partitions import enumerate_partitions

    checked = 0
    for m in range(1, 11):
        for n in range(1, 11):
            if m * n > 10:
                continue
            for mu in enumerate_partitions(m):
                for nu in enumerate_partitions(n):
                    for lam, count in maximal_weights(mu, nu).items():
                        d = max(len(lam), 1)
                        basis = weight_space_basis(mu, nu, d, lam)
                        assert len(basis) == count, (mu, nu, lam)
                        for S in basis:
                            assert is_highest_weight(vector_of(S, d)), (mu, nu, lam)
                            checked += 1
    assert checked > 300


def test_insertion_and_product_maps_stay_highest_weight():
    # sweep small spaces: every kernel vector stays highest-weight under
    # top-row insertion, column insertion, and (for rows) multiplication
    from plethysm.partitions import enumerate_partitions

    for m, n in [(1, 2), (2, 2), (3, 1), (2, 3), (1, 4)]:
        for mu in enumerate_partitions(m):
            for nu in enumerate_partitions(n):
                for lam in enumerate_partitions(m * n, max_length=4):
                    vs = hwv_space(mu, nu, lam)
                    for v in vs[:2]:
                        t = tilde_map(v, (mu[0] if mu else 0) + 1)
                        assert is_highest_weight(t)
                        r = 1
                        if v.d >= max(r, len(mu)):
                            s = star_map(v, r)
                            assert is_highest_weight(s)
                        if len(nu) == 1:
                            sq = multiply_hwv(v, v)
                            assert is_highest_weight(sq)


def test_outer_polytabloid_expansion_signs():
    # the outer signed expansion of a 2x2 plethystic tableau has the four
    # column-swap terms with the classical signs
    from plethysm.hwv import get_space
    from plethysm.polytabloid import expand_polytabloid

    space = get_space((2, 1), (2, 2), 3)
    a = space.index[T("1 1/2")]
    b = space.index[T("1 1/3")]
    c = space.index[T("1 2/2")]
    S = Tableau(((a, a), (b, c)))
    exp = expand_polytabloid(S)
    assert exp == {
        Tableau(((a, a), (b, c))): 1,
        Tableau(((a, b), (a, c))): -1,
        Tableau(((a, c), (a, b))): -1,
        Tableau(((b, c), (a, a))): 1,
    }
