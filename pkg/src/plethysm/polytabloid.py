"""Signed column-symmetrized tableau calculus and the straightening algorithm.

Sym^shape V has a basis of "tabloids" f(t) indexed by row-semistandard
tableaux (rows as multisets); the signed column symmetrization of f over all
column-preserving place permutations gives the polytabloid F(t).  Snake
relations rewrite any F(t) against tableaux strictly greater in the total
order, terminating in the semistandard basis.

Everything here is generic over the entry alphabet: entries only need to be
hashable and mutually comparable, so the same engine serves integer-filled
tableaux and tableaux whose entries are themselves tableaux.
"""

from __future__ import annotations

import itertools

from .partitions import conjugate
from .tableaux import Tableau, row_semistandardize, tableau_dominates

TabloidVector = dict[Tableau, int]
StraightenedVector = dict[Tableau, int]


def column_normalize(t: Tableau) -> tuple[Tableau, int]:
    """Sort each column ascending; return (sorted tableau, sign).

    The sign is the product of the per-column sorting permutation signs, or 0
    when some column repeats an entry (the polytabloid vanishes then).
    """
    cols = t.columns()
    sign = 1
    new_cols = []
    for col in cols:
        order = sorted(range(len(col)), key=lambda k: (col[k], k))
        sorted_col = tuple(col[k] for k in order)
        for a in range(len(sorted_col) - 1):
            if not sorted_col[a] < sorted_col[a + 1]:
                return t, 0
        inversions = sum(
            1 for a in range(len(order)) for b in range(a + 1, len(order)) if order[a] > order[b]
        )
        if inversions % 2:
            sign = -sign
        new_cols.append(sorted_col)
    shape = t.shape
    rows = tuple(
        tuple(new_cols[j][i] for j in range(shape[i])) for i in range(len(shape))
    )
    return Tableau(rows), sign


def expand_polytabloid(t: Tableau) -> TabloidVector:
    """Expansion of F(t) in the tabloid basis.

    Sums sgn(sigma) f(t sigma) over all column-preserving place permutations;
    keys are row-sorted.  Cost is the product of column-length factorials,
    so this is an oracle for small shapes, not a production path.
    """
    cols = t.columns()
    out: TabloidVector = {}
    if any(len(set(col)) != len(col) for col in cols):
        return out
    perms_per_col = []
    for col in cols:
        arrangements = []
        for perm in itertools.permutations(range(len(col))):
            inversions = sum(
                1
                for a in range(len(perm))
                for b in range(a + 1, len(perm))
                if perm[a] > perm[b]
            )
            arrangements.append((tuple(col[k] for k in perm), -1 if inversions % 2 else 1))
        perms_per_col.append(arrangements)
    shape = t.shape
    for combo in itertools.product(*perms_per_col):
        sign = 1
        for _, s in combo:
            sign *= s
        rows = tuple(
            tuple(sorted(combo[j][0][i] for j in range(shape[i])))
            for i in range(len(shape))
        )
        key = Tableau(rows)
        c = out.get(key, 0) + sign
        if c:
            out[key] = c
        else:
            out.pop(key, None)
    return out


def _coset_representatives(a_boxes: list, b_boxes: list):
    """Transposition products pairing subsets of A with subsets of B.

    Swapped boxes are matched preserving the relative vertical order within
    each set; the identity (k=0) is skipped.  Yields (pairs, sign).
    """
    for k in range(1, min(len(a_boxes), len(b_boxes)) + 1):
        for a_sub in itertools.combinations(a_boxes, k):
            for b_sub in itertools.combinations(b_boxes, k):
                yield tuple(zip(a_sub, b_sub)), -1 if k % 2 else 1


def snake_terms(
    t: Tableau, i: int, j: int, jp: int
) -> list[tuple[Tableau, int]]:
    """Right-hand side of the snake relation for F(t) at columns j < jp.

    A runs from box (i,j) to the bottom of column j and B from the top of
    column jp down to (i,jp).  Returns (tableau, sign) pairs; terms whose
    tableau has a repeated column entry are dropped.
    """
    shape = t.shape
    conj = conjugate(shape)
    if not (1 <= j < jp <= shape[0]) or not (1 <= i <= conj[jp - 1]):
        raise ValueError(f"snake indices out of range: i={i}, j={j}, jp={jp} for {shape}")
    a_boxes = [(r, j) for r in range(i, conj[j - 1] + 1)]
    b_boxes = [(r, jp) for r in range(1, i + 1)]
    terms = []
    for pairs, sign in _coset_representatives(a_boxes, b_boxes):
        rows = [list(r) for r in t.rows]
        for (ra, ca), (rb, cb) in pairs:
            rows[ra - 1][ca - 1], rows[rb - 1][cb - 1] = (
                rows[rb - 1][cb - 1],
                rows[ra - 1][ca - 1],
            )
        u = Tableau(rows)
        if any(len(set(col)) != len(col) for col in u.columns()):
            continue
        terms.append((u, -sign))
    return terms


_STRAIGHTEN_CACHE: dict[Tableau, StraightenedVector] = {}


def clear_straighten_cache() -> None:
    _STRAIGHTEN_CACHE.clear()


def _first_violation(t: Tableau) -> tuple[int, int] | None:
    """Smallest column j, then smallest row i, with t(i,j) > t(i,j+1)."""
    shape = t.shape
    if not shape:
        return None
    conj = conjugate(shape)
    for j in range(1, shape[0]):
        for i in range(1, conj[j] + 1):
            if t.rows[i - 1][j - 1] > t.rows[i - 1][j]:
                return i, j
    return None


def _straighten_column_standard(t: Tableau) -> StraightenedVector:
    cached = _STRAIGHTEN_CACHE.get(t)
    if cached is not None:
        return cached
    violation = _first_violation(t)
    if violation is None:
        result = {t: 1}
        _STRAIGHTEN_CACHE[t] = result
        return result
    i, j = violation
    out: StraightenedVector = {}
    for u, sign in snake_terms(t, i, j, j + 1):
        u0, s0 = column_normalize(u)
        if s0 == 0:
            continue
        for s, c in _straighten_column_standard(u0).items():
            val = out.get(s, 0) + sign * s0 * c
            if val:
                out[s] = val
            else:
                out.pop(s, None)
    _STRAIGHTEN_CACHE[t] = out
    return out


def straighten(t: Tableau) -> StraightenedVector:
    """Expansion of F(t) in the semistandard basis.

    Column-normalizes, then repeatedly applies snake relations at the first
    row violation (smallest column, then smallest row); each replacement is
    strictly greater in the total order, so the recursion terminates.
    Results are memoized on the column-standard form.
    """
    t0, sign = column_normalize(t)
    if sign == 0:
        return {}
    base = _straighten_column_standard(t0)
    if sign == 1:
        return dict(base)
    return {s: -c for s, c in base.items()}


def leading_term_check(t: Tableau) -> bool:
    """Verify both leading-term statements on a column-standard tableau.

    Straightening must produce the row-sorted tableau with coefficient one
    plus strictly dominated semistandard terms, and the tabloid expansion
    must consist of the row-sorted tabloid plus strictly dominated tabloids.
    """
    if not t.is_column_standard():
        raise ValueError("leading_term_check requires a column-standard tableau")
    tbar = row_semistandardize(t)
    if not tbar.is_semistandard():
        return False
    st = straighten(t)
    if st.get(tbar) != 1:
        return False
    for s in st:
        if s != tbar and not (tableau_dominates(tbar, s) and s != tbar):
            return False
    exp = expand_polytabloid(t)
    if exp.get(tbar) != 1:
        return False
    for u in exp:
        if u != tbar and not tableau_dominates(tbar, u):
            return False
    return True
