"""Tableaux over a totally ordered alphabet.

Entries may be any hashable, mutually comparable values; integer entries
(letters 1..d) are the common case, and tableaux themselves are valid
entries (nesting gives the plethystic level).  The total order on
column-standard tableaux compares the rightmost differing column and places
the tableau holding the greatest non-common entry later; per column this is
colexicographic order on entry sets, so the sort key below is the tuple of
descending column contents read right to left.
"""

from __future__ import annotations

import functools
from typing import Any, Iterable, Iterator, Sequence

from . import _kernels
from .partitions import Composition, Partition, is_partition, make_partition, trim


class Tableau:
    """Immutable filling of a Young diagram, stored as a tuple of row tuples."""

    __slots__ = ("rows", "_key", "_hash")

    def __init__(self, rows: Iterable[Sequence[Any]]):
        self.rows = tuple(tuple(r) for r in rows)
        if not is_partition(tuple(len(r) for r in self.rows)) or any(
            len(r) == 0 for r in self.rows
        ):
            raise ValueError(f"row lengths must form a partition: {self.rows}")
        self._key = None
        self._hash = None

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    def boxes(self) -> Iterator[tuple[int, int]]:
        """1-indexed (row, column) pairs in row-major order."""
        for i, row in enumerate(self.rows, start=1):
            for j in range(1, len(row) + 1):
                yield (i, j)

    def entry(self, i: int, j: int) -> Any:
        return self.rows[i - 1][j - 1]

    def columns(self) -> list[tuple[Any, ...]]:
        ncols = len(self.rows[0]) if self.rows else 0
        return [
            tuple(row[j] for row in self.rows if len(row) > j) for j in range(ncols)
        ]

    def sort_key(self):
        """Key realizing the total order on column-standard tableaux."""
        if self._key is None:
            cols = self.columns()
            self._key = tuple(
                tuple(sorted(col, reverse=True)) for col in reversed(cols)
            )
        return self._key

    def __lt__(self, other: "Tableau") -> bool:
        return self.sort_key() < other.sort_key()

    def __le__(self, other: "Tableau") -> bool:
        return self.sort_key() <= other.sort_key()

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Tableau) and self.rows == other.rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.rows)
        return self._hash

    def __repr__(self) -> str:
        return f"Tableau({self.rows!r})"

    def __str__(self) -> str:
        return format_tableau(self)

    def is_row_semistandard(self) -> bool:
        return all(
            row[j] <= row[j + 1] for row in self.rows for j in range(len(row) - 1)
        )

    def is_column_standard(self) -> bool:
        return all(col[i] < col[i + 1] for col in self.columns() for i in range(len(col) - 1))

    def is_semistandard(self) -> bool:
        return self.is_row_semistandard() and self.is_column_standard()

    def replace_entry(self, i: int, j: int, value: Any) -> "Tableau":
        rows = [list(r) for r in self.rows]
        rows[i - 1][j - 1] = value
        return Tableau(rows)


EMPTY_TABLEAU = Tableau(())


def less(t: Tableau, u: Tableau) -> bool:
    """Strict total order on column-standard tableaux of equal shape."""
    if t.shape != u.shape:
        raise ValueError(f"shape mismatch: {t.shape} vs {u.shape}")
    return t < u


def content(t: Tableau, nletters: int | None = None) -> Composition:
    """Count of each letter 1..d among integer entries."""
    counts: dict[int, int] = {}
    top = 0
    for row in t.rows:
        for x in row:
            counts[x] = counts.get(x, 0) + 1
            if x > top:
                top = x
    n = nletters if nletters is not None else top
    out = tuple(counts.get(b, 0) for b in range(1, n + 1))
    return out if nletters is not None else trim(out)


def superstandard(shape: Partition) -> Tableau:
    """The tableau with every entry equal to its row index; least in the order."""
    return Tableau(tuple((i,) * r for i, r in enumerate(shape, start=1)))


def row_semistandardize(t: Tableau) -> Tableau:
    """Sort every row into weakly increasing order."""
    return Tableau(tuple(tuple(sorted(row)) for row in t.rows))


def _prefix_dominates(beta: Sequence[int], gamma: Sequence[int]) -> bool:
    sb = sg = 0
    for i in range(max(len(beta), len(gamma))):
        sb += beta[i] if i < len(beta) else 0
        sg += gamma[i] if i < len(gamma) else 0
        if sb < sg:
            return False
    return True


def tableau_dominates(t: Tableau, u: Tableau) -> bool:
    """Dominance on row-semistandard tableaux: prefix counts t^{<=b} dominate u^{<=b}.

    An arbitrary alphabet is reduced to ranks through the unique
    order-preserving bijection onto 1..|alphabet|.
    """
    if t.shape != u.shape:
        raise ValueError(f"shape mismatch: {t.shape} vs {u.shape}")
    alphabet = sorted({x for row in t.rows for x in row} | {x for row in u.rows for x in row})
    for b in alphabet[:-1]:
        tb = tuple(sum(1 for x in row if x <= b) for row in t.rows)
        ub = tuple(sum(1 for x in row if x <= b) for row in u.rows)
        if not _prefix_dominates(tb, ub):
            return False
    return True


def apply_place_permutation(t: Tableau, sigma: dict[tuple[int, int], tuple[int, int]]) -> Tableau:
    """Right place-permutation action: the entry at box b of t lands at box sigma(b)."""
    rows = [list(r) for r in t.rows]
    for (i, j), (ip, jp) in sigma.items():
        rows[ip - 1][jp - 1] = t.entry(i, j)
    return Tableau(rows)


def column_place_permutations(shape: Partition) -> Iterator[tuple[dict, int]]:
    """All place permutations preserving columns, with signs.

    The group is the direct product of the symmetric groups on each column's
    boxes, so its size is the product of factorials of the column lengths.
    """
    import itertools

    cols = []
    conj = tuple(sum(1 for x in shape if x > j) for j in range(shape[0])) if shape else ()
    for j, h in enumerate(conj, start=1):
        cols.append([(i, j) for i in range(1, h + 1)])

    def perm_sign(perm: tuple[int, ...]) -> int:
        sign = 1
        seen = [False] * len(perm)
        for i in range(len(perm)):
            if seen[i]:
                continue
            clen = 0
            k = i
            while not seen[k]:
                seen[k] = True
                k = perm[k]
                clen += 1
            if clen % 2 == 0:
                sign = -sign
        return sign

    choices = [list(itertools.permutations(range(len(col)))) for col in cols]
    for combo in itertools.product(*choices):
        sigma = {}
        sign = 1
        for col, perm in zip(cols, combo):
            sign *= perm_sign(perm)
            for a, b in enumerate(perm):
                sigma[col[a]] = col[b]
        yield sigma, sign


def _ranks_to_letters(rows: tuple[tuple[int, ...], ...]) -> Tableau:
    return Tableau(tuple(tuple(x + 1 for x in row) for row in rows))


def enumerate_ssyt(shape: Partition, d: int) -> list[Tableau]:
    """All semistandard tableaux with entries in 1..d, sorted by the total order."""
    shape = make_partition(shape)
    tabs = [_ranks_to_letters(rows) for rows in _kernels.fill_all_list(shape, d)]
    tabs.sort(key=Tableau.sort_key)
    return tabs


_UNIT_CACHE: dict[int, tuple[tuple[int, ...], ...]] = {}


def _unit_contents(d: int) -> tuple[tuple[int, ...], ...]:
    if d not in _UNIT_CACHE:
        _UNIT_CACHE[d] = tuple(
            tuple(1 if p == b else 0 for p in range(d)) for b in range(d)
        )
    return _UNIT_CACHE[d]


def enumerate_ssyt_content(shape: Partition, beta: Composition) -> list[Tableau]:
    """All semistandard tableaux of the given content, sorted by the total order."""
    shape = make_partition(shape)
    if sum(shape) != sum(beta):
        raise ValueError(f"content degree {sum(beta)} != |shape| {sum(shape)}")
    d = len(beta)
    _, rows = _kernels.fill_weighted(
        shape, d, _unit_contents(d), tuple(beta), (1,) * d, 0, True
    )
    tabs = [_ranks_to_letters(r) for r in rows]
    tabs.sort(key=Tableau.sort_key)
    return tabs


@functools.lru_cache(maxsize=None)
def kostka(lam: Partition, beta: Composition) -> int:
    """Number of semistandard lam-tableaux of content beta."""
    lam = make_partition(lam)
    beta = tuple(beta)
    if sum(lam) != sum(beta):
        raise ValueError(f"degree mismatch: |{lam}| != |{beta}|")
    d = len(beta)
    n, _ = _kernels.fill_weighted(lam, d, _unit_contents(d), beta, (1,) * d, 0, False)
    return n


def count_ssyt(shape: Partition, d: int) -> int:
    """|SSYT(shape, <=d)|, the dimension of the corresponding GL_d module."""
    return _kernels.fill_all_count(make_partition(shape), d)


def format_tableau(t: Tableau) -> str:
    """Rows separated by "/", entries space-separated, e.g. "1 1/2 3"."""
    return "/".join(" ".join(str(x) for x in row) for row in t.rows)


def parse_tableau(text: str) -> Tableau:
    """Inverse of format_tableau; commas also accepted between entries."""
    text = text.strip()
    if not text:
        return EMPTY_TABLEAU
    rows = []
    for row_text in text.split("/"):
        row = [int(tok) for tok in row_text.replace(",", " ").split()]
        if not row:
            raise ValueError(f"empty row in tableau text: {text!r}")
        rows.append(row)
    return Tableau(rows)
