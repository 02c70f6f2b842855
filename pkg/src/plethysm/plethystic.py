"""Plethystic semistandard tableaux: outer shape nu filled with semistandard
inner tableaux of shape mu, the filling itself semistandard for the total
order on inner tableaux.

The ranked form used internally replaces each inner tableau by its index in
the sorted alphabet of all semistandard mu-tableaux with entries <= d, so the
outer level becomes an ordinary integer tableau problem and the enumeration
kernels apply unchanged.
"""

from __future__ import annotations

import re
from typing import Iterable, Optional

import numpy as np

from . import _kernels
from .config import parallel_map
from .partitions import (
    Composition,
    Partition,
    compositions,
    dominates,
    enumerate_partitions,
    is_partition,
    make_partition,
    prefix_sums,
    trim,
)
from .tableaux import (
    EMPTY_TABLEAU,
    Tableau,
    _unit_contents,
    content,
    enumerate_ssyt,
    format_tableau,
    parse_tableau,
)


class PlethysticTableau:
    """Outer tableau of shape nu whose entries are mu-tableaux."""

    __slots__ = ("mu", "rows", "_hash")

    def __init__(self, mu: Partition, rows: Iterable[Iterable[Tableau]]):
        self.mu = make_partition(mu)
        self.rows = tuple(tuple(r) for r in rows)
        for row in self.rows:
            for t in row:
                if t.shape != self.mu:
                    raise ValueError(f"inner shape {t.shape} != {self.mu}")
        self._hash = None

    @property
    def nu(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    def entries(self) -> list[Tableau]:
        return [t for row in self.rows for t in row]

    def weight(self) -> Composition:
        """Total count of each integer letter over all inner entries."""
        counts: dict[int, int] = {}
        top = 0
        for t in self.entries():
            for row in t.rows:
                for x in row:
                    counts[x] = counts.get(x, 0) + 1
                    if x > top:
                        top = x
        return tuple(counts.get(b, 0) for b in range(1, top + 1))

    def is_semistandard(self) -> bool:
        outer = Tableau(self.rows) if self.rows else EMPTY_TABLEAU
        return all(t.is_semistandard() for t in self.entries()) and (
            not self.rows or outer.is_semistandard()
        )

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, PlethysticTableau)
            and self.mu == other.mu
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.mu, self.rows))
        return self._hash

    def __repr__(self) -> str:
        return f"PlethysticTableau(mu={self.mu}, {format_pssyt(self)!r})"


def format_pssyt(T: PlethysticTableau) -> str:
    """Outer rows joined by " || ", entries bracketed, e.g. "[1 1/2][1 2/2]"."""
    return " || ".join(
        "".join("[" + format_tableau(t) + "]" for t in row) for row in T.rows
    )


_BRACKET = re.compile(r"\[([^\]]*)\]")


def parse_pssyt(text: str, mu: Partition) -> PlethysticTableau:
    text = text.strip()
    if not text:
        return PlethysticTableau(mu, ())
    rows = []
    for row_text in text.split("||"):
        entries = [parse_tableau(m.group(1)) for m in _BRACKET.finditer(row_text)]
        if not entries:
            raise ValueError(f"no bracketed entries in row: {row_text!r}")
        for t in entries:
            if any(x < 1 for row in t.rows for x in row):
                raise ValueError(f"tableau letters must be positive: {row_text!r}")
        rows.append(entries)
    return PlethysticTableau(mu, rows)


_ALPHABET_CACHE: dict[tuple[Partition, int], tuple[Tableau, ...]] = {}


def inner_alphabet(mu: Partition, d: int) -> tuple[Tableau, ...]:
    """All semistandard mu-tableaux with entries <= d, sorted by the total order."""
    key = (make_partition(mu), d)
    if key not in _ALPHABET_CACHE:
        _ALPHABET_CACHE[key] = tuple(enumerate_ssyt(key[0], d))
    return _ALPHABET_CACHE[key]


_CONTENT_CACHE: dict[tuple[Partition, int], tuple[tuple[int, ...], ...]] = {}


def alphabet_contents(mu: Partition, d: int) -> tuple[tuple[int, ...], ...]:
    key = (make_partition(mu), d)
    if key not in _CONTENT_CACHE:
        _CONTENT_CACHE[key] = tuple(
            content(t, d) for t in inner_alphabet(*key)
        )
    return _CONTENT_CACHE[key]


_CAP_CACHE: dict[tuple[Partition, int], tuple[int, ...]] = {}


def _prefix_cap(mu: Partition, d: int) -> tuple[int, ...]:
    """cap[p] = max number of letters <= p+1 in one alphabet element."""
    key = (mu, d)
    cached = _CAP_CACHE.get(key)
    if cached is not None:
        return cached
    caps = []
    for p in range(d):
        best = 0
        for c in alphabet_contents(mu, d):
            s = sum(c[: p + 1])
            if s > best:
                best = s
        caps.append(best)
    result = tuple(caps)
    _CAP_CACHE[key] = result
    return result


def pssyt_from_ranks(
    mu: Partition, rank_rows: tuple[tuple[int, ...], ...], alphabet: tuple[Tableau, ...]
) -> PlethysticTableau:
    return PlethysticTableau(
        mu, tuple(tuple(alphabet[r] for r in row) for row in rank_rows)
    )


def ranks_from_pssyt(
    T: PlethysticTableau, rank_index: dict[Tableau, int]
) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(rank_index[t] for t in row) for row in T.rows)


def _outer_sort_key(rank_rows: tuple[tuple[int, ...], ...]):
    if not rank_rows:
        return ()
    return Tableau(rank_rows).sort_key()


def enumerate_pssyt(mu: Partition, nu: Partition, d: int) -> list[PlethysticTableau]:
    """All plethystic semistandard tableaux of the given shapes with letters <= d."""
    mu, nu = make_partition(mu), make_partition(nu)
    alphabet = inner_alphabet(mu, d)
    rank_rows = _kernels.fill_all_list(nu, len(alphabet))
    rank_rows.sort(key=_outer_sort_key)
    return [pssyt_from_ranks(mu, rows, alphabet) for rows in rank_rows]


def _pad(beta: Composition, d: int) -> Optional[tuple[int, ...]]:
    beta = trim(beta)
    if len(beta) > d:
        return None
    if any(x < 0 for x in beta):
        raise ValueError(f"negative weight entry: {beta}")
    return beta + (0,) * (d - len(beta))


_COUNT_CACHE: dict[tuple[Partition, Partition, Composition], int] = {}


def count_pssyt_weight(
    mu: Partition,
    nu: Partition,
    beta: Composition,
    d: Optional[int] = None,
    limit: int = 0,
) -> int:
    """Number of plethystic semistandard tableaux of the given weight.

    The count does not depend on the letter bound once it covers the weight,
    so it is computed on len(beta) letters and cached; an explicit smaller d
    that cannot carry the weight gives 0.  limit=1 makes this an existence
    test (exact counts are still served from the cache when available).
    """
    mu, nu = make_partition(mu), make_partition(nu)
    key_beta = trim(beta)
    if d is not None and len(key_beta) > d:
        return 0
    if sum(key_beta) != sum(mu) * sum(nu):
        return 0
    key = (mu, nu, key_beta)
    cached = _COUNT_CACHE.get(key)
    if cached is not None:
        return min(cached, limit) if limit else cached
    deff = max(len(key_beta), 1)
    target = key_beta + (0,) * (deff - len(key_beta))
    if nu == (1,):
        # single outer box: count inner tableaux of this content directly,
        # skipping the alphabet materialization
        n, _ = _kernels.fill_weighted(
            mu, deff, _unit_contents(deff), target, (1,) * deff, limit, False
        )
    else:
        alphabet = inner_alphabet(mu, deff)
        n, _ = _kernels.fill_weighted(
            nu,
            len(alphabet),
            alphabet_contents(mu, deff),
            target,
            _prefix_cap(mu, deff),
            limit,
            False,
        )
    if not limit:
        _COUNT_CACHE[key] = n
    return n


def enumerate_pssyt_weight(
    mu: Partition, nu: Partition, beta: Composition, d: Optional[int] = None
) -> list[PlethysticTableau]:
    """All plethystic semistandard tableaux of the given weight, sorted."""
    mu, nu = make_partition(mu), make_partition(nu)
    if d is None:
        d = len(trim(beta))
    d = max(d, 1)
    target = _pad(beta, d)
    if target is None or sum(target) != sum(mu) * sum(nu):
        return []
    if nu == (1,):
        _, rows = _kernels.fill_weighted(
            mu, d, _unit_contents(d), target, (1,) * d, 0, True
        )
        tabs = [Tableau(tuple(tuple(x + 1 for x in row) for row in r)) for r in rows]
        tabs.sort(key=Tableau.sort_key)
        return [PlethysticTableau(mu, ((t,),)) for t in tabs]
    alphabet = inner_alphabet(mu, d)
    _, rows = _kernels.fill_weighted(
        nu, len(alphabet), alphabet_contents(mu, d), target, _prefix_cap(mu, d), 0, True
    )
    rows.sort(key=_outer_sort_key)
    return [pssyt_from_ranks(mu, r, alphabet) for r in rows]


def weight_histogram(mu: Partition, nu: Partition, d: int) -> dict[Composition, int]:
    """Counts of plethystic semistandard tableaux by weight, letters <= d.

    Keys are padded to length d; this is the full list of monomial-weight
    multiplicities of the composite module on d letters.
    """
    mu, nu = make_partition(mu), make_partition(nu)
    d = max(d, 1)
    if nu == (1,):
        return _kernels.fill_weight_histogram(mu, d, _unit_contents(d), d)
    alphabet = inner_alphabet(mu, d)
    return _kernels.fill_weight_histogram(
        nu, len(alphabet), alphabet_contents(mu, d), d
    )


def is_closed(tabs: Iterable[Tableau]) -> bool:
    """Whether a set of semistandard same-shape tableaux is decrement-closed.

    Closed means: every semistandard tableau obtained from a member by
    lowering one entry c to c-1 is again a member.
    """
    pool = set(tabs)
    for t in pool:
        for i, j in t.boxes():
            c = t.entry(i, j)
            if c <= 1:
                continue
            s = t.replace_entry(i, j, c - 1)
            if s.is_semistandard() and s not in pool:
                return False
    return True


_COMPOSITION_ARRAYS: dict[tuple[int, int], list[np.ndarray]] = {}
_SWEEP_BLOCK = 1 << 19
_SWEEP_CACHE_LIMIT = 1 << 22


def _composition_blocks(n: int, max_len: int):
    """Compositions of n into max_len padded parts, yielded as int16 blocks.

    Blocking keeps the sweep's memory bounded for huge composition counts;
    desk-scale tables are cached for reuse across shapes of one degree.
    """
    import math

    key = (n, max_len)
    cached = _COMPOSITION_ARRAYS.get(key)
    if cached is not None:
        yield from cached
        return
    keep = math.comb(n + max_len - 1, max_len - 1) <= _SWEEP_CACHE_LIMIT
    blocks: list[np.ndarray] = []
    chunk: list[tuple[int, ...]] = []
    for c in compositions(n, max_len):
        chunk.append(c + (0,) * (max_len - len(c)))
        if len(chunk) >= _SWEEP_BLOCK:
            block = np.array(chunk, dtype=np.int16)
            chunk = []
            if keep:
                blocks.append(block)
            yield block
    block = np.array(chunk, dtype=np.int16).reshape(len(chunk), max_len)
    if keep:
        blocks.append(block)
        _COMPOSITION_ARRAYS[key] = blocks
    yield block


def _undominated_compositions(
    n: int, d: int, maximal: list[Partition], mu: Partition, nu_size: int
) -> list[Composition]:
    """Compositions of n with <= d parts not dominated by any confirmed weight
    and not excluded by the per-letter prefix capacity bound."""
    out: list[Composition] = []
    mu_pref = np.array(
        [nu_size * sum(mu[: p + 1]) for p in range(d)], dtype=np.int32
    )
    prefixes = [np.array(prefix_sums(w, d), dtype=np.int16) for w in maximal]
    for comps in _composition_blocks(n, d):
        pref = np.cumsum(comps, axis=1)
        dominated = np.zeros(len(comps), dtype=bool)
        for pw in prefixes:
            dominated |= (pref <= pw).all(axis=1)
        keep = ~dominated & (pref <= mu_pref).all(axis=1)
        out.extend(trim(tuple(int(x) for x in row)) for row in comps[keep])
    return out


_MAXIMAL_CACHE: dict[tuple[Partition, Partition, int], dict[Partition, int]] = {}


def maximal_weights(
    mu: Partition, nu: Partition, d: Optional[int] = None
) -> dict[Partition, int]:
    """Dominance-maximal weights of plethystic semistandard tableaux, with the
    number of tableaux attaining each.

    Candidate weights are scanned in a linear extension of dominance (larger
    prefix sums first).  Partition candidates are tested first; the remaining
    compositions are then swept, and any achievable composition not dominated
    by a confirmed weight would be reported as maximal too -- none exists,
    but the maximality filter does not assume that.
    """
    mu, nu = make_partition(mu), make_partition(nu)
    mn = sum(mu) * sum(nu)
    if d is None:
        d = mn
    cached = _MAXIMAL_CACHE.get((mu, nu, d))
    if cached is not None:
        return dict(cached)
    if mn == 0:
        return {(): 1} if count_pssyt_weight(mu, nu, (), 1, limit=1) else {}

    confirmed: list[Partition] = []
    for pi in enumerate_partitions(mn, max_length=d):
        if any(dominates(c, pi) for c in confirmed):
            continue
        if count_pssyt_weight(mu, nu, pi, d, limit=1):
            confirmed.append(pi)

    extra: list[Composition] = []
    for beta in _undominated_compositions(mn, d, confirmed, mu, sum(nu)):
        if count_pssyt_weight(mu, nu, beta, d, limit=1):
            extra.append(beta)

    candidates = confirmed + extra
    maximal = [
        w
        for w in candidates
        if not any(
            v != w and dominates(v, w) for v in candidates
        )
    ]
    counts = parallel_map(lambda w: count_pssyt_weight(mu, nu, w, d), maximal)
    result = dict(zip(maximal, counts))
    _MAXIMAL_CACHE[(mu, nu, d)] = result
    return dict(result)
