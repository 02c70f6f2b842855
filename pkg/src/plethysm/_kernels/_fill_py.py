"""Pure-Python semistandard-filling kernels.

A "filling" of a Young-diagram shape over an alphabet of K ranked symbols
(ranks 0..K-1) is semistandard when rows weakly increase and columns strictly
increase in rank.  Symbols may carry integer content vectors; the weighted
kernels enumerate or count fillings whose total content equals a target.

These are the innermost loops of the whole package.  The compiled twin in
_fill_cy.pyx implements the identical API; _kernels/__init__ picks one at
import time.
"""

from __future__ import annotations

from typing import Optional

IMPL = "python"


def _box_neighbours(shape: tuple[int, ...]) -> list[tuple[int, int]]:
    """Flat row-major box list; each entry is (left_index, up_index), -1 if absent."""
    offsets = [0]
    for r in shape:
        offsets.append(offsets[-1] + r)
    boxes = []
    for i, r in enumerate(shape):
        for j in range(r):
            left = offsets[i] + j - 1 if j > 0 else -1
            up = offsets[i - 1] + j if i > 0 else -1
            boxes.append((left, up))
    return boxes


def _ranks_by_content(contents: tuple[tuple[int, ...], ...]) -> dict[tuple[int, ...], list[int]]:
    groups: dict[tuple[int, ...], list[int]] = {}
    for r, c in enumerate(contents):
        groups.setdefault(c, []).append(r)
    return groups


def fill_all_count(shape: tuple[int, ...], K: int) -> int:
    """Number of semistandard fillings of shape with ranks 0..K-1."""
    return _fill_all(shape, K, None)


def fill_all_list(shape: tuple[int, ...], K: int) -> list[tuple[tuple[int, ...], ...]]:
    """All semistandard fillings, as tuples of rank rows (row-major emission)."""
    out: list[tuple[tuple[int, ...], ...]] = []
    _fill_all(shape, K, out)
    return out


def _fill_all(shape, K, out):
    if not shape:
        if out is not None:
            out.append(())
        return 1
    if len(shape) > K:
        return 0
    boxes = _box_neighbours(shape)
    n = len(boxes)
    entries = [0] * n
    count = 0
    pos = 0
    # iterative backtracking: cand[pos] is the next rank to try at box pos
    cand = [0] * n
    lo = [0] * n
    cand[0] = 0
    while pos >= 0:
        if cand[pos] >= K:
            pos -= 1
            if pos >= 0:
                cand[pos] = entries[pos] + 1
            continue
        entries[pos] = cand[pos]
        if pos == n - 1:
            count += 1
            if out is not None:
                out.append(_rows(shape, entries))
            cand[pos] += 1
            continue
        pos += 1
        left, up = boxes[pos]
        m = 0
        if left >= 0:
            m = entries[left]
        if up >= 0 and entries[up] + 1 > m:
            m = entries[up] + 1
        cand[pos] = m
    return count


def _rows(shape, entries):
    rows = []
    k = 0
    for r in shape:
        rows.append(tuple(entries[k : k + r]))
        k += r
    return tuple(rows)


def fill_weight_histogram(
    shape: tuple[int, ...],
    K: int,
    contents: tuple[tuple[int, ...], ...],
    nletters: int,
) -> dict[tuple[int, ...], int]:
    """Histogram of total content over all semistandard fillings."""
    hist: dict[tuple[int, ...], int] = {}
    if not shape:
        hist[(0,) * nletters] = 1
        return hist
    if len(shape) > K:
        return hist
    boxes = _box_neighbours(shape)
    n = len(boxes)
    entries = [0] * n
    weight = [0] * nletters
    L = nletters

    def rec(pos: int) -> None:
        left, up = boxes[pos]
        lo = 0
        if left >= 0:
            lo = entries[left]
        if up >= 0 and entries[up] + 1 > lo:
            lo = entries[up] + 1
        last = pos == n - 1
        for e in range(lo, K):
            c = contents[e]
            for p in range(L):
                weight[p] += c[p]
            if last:
                key = tuple(weight)
                hist[key] = hist.get(key, 0) + 1
            else:
                entries[pos] = e
                rec(pos + 1)
            for p in range(L):
                weight[p] -= c[p]

    rec(0)
    return hist


def fill_weighted(
    shape: tuple[int, ...],
    K: int,
    contents: tuple[tuple[int, ...], ...],
    target: tuple[int, ...],
    cap: tuple[int, ...],
    limit: int = 0,
    collect: bool = False,
) -> tuple[int, Optional[list[tuple[tuple[int, ...], ...]]]]:
    """Count (and optionally list) fillings of total content exactly `target`.

    cap[p] must bound, over every alphabet symbol, the number of letters
    <= p+1 in that symbol's content; it drives the prefix-feasibility prune.
    A positive `limit` stops the search once that many fillings are found
    (limit=1 is an existence test).
    """
    out: Optional[list] = [] if collect else None
    L = len(target)
    if not shape:
        if any(target):
            return 0, out
        if collect:
            out.append(())
        return 1, out
    if len(shape) > K:
        return 0, out
    total = sum(target)
    degree = 0
    for c in contents:
        degree = sum(c)
        break
    nboxes = sum(shape)
    if degree * nboxes != total:
        return 0, out

    boxes = _box_neighbours(shape)
    n = len(boxes)
    entries = [0] * n
    rem = list(target)
    groups = _ranks_by_content(contents)
    count = 0

    def feasible(slots_left: int) -> bool:
        s = 0
        for p in range(L):
            r = rem[p]
            if r < 0:
                return False
            s += r
            if s > slots_left * cap[p]:
                return False
        return True

    def rec(pos: int) -> bool:
        nonlocal count
        left, up = boxes[pos]
        lo = 0
        if left >= 0:
            lo = entries[left]
        if up >= 0 and entries[up] + 1 > lo:
            lo = entries[up] + 1
        if pos == n - 1:
            # the last box must carry exactly the remaining content
            ranks = groups.get(tuple(rem))
            if ranks is None:
                return False
            for e in ranks:
                if e < lo:
                    continue
                count += 1
                if collect:
                    entries[pos] = e
                    out.append(_rows(shape, entries))
                if limit and count >= limit:
                    return True
            return False
        slots_left = n - pos - 1
        for e in range(lo, K):
            c = contents[e]
            ok = True
            for p in range(L):
                if c[p] > rem[p]:
                    ok = False
                    break
            if not ok:
                continue
            for p in range(L):
                rem[p] -= c[p]
            if feasible(slots_left):
                entries[pos] = e
                if rec(pos + 1):
                    for p in range(L):
                        rem[p] += c[p]
                    return True
            for p in range(L):
                rem[p] += c[p]
        return False

    rec(0)
    return count, out
