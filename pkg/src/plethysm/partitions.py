"""Partition and composition arithmetic, dominance order, and enumeration.

Partitions are plain tuples of weakly decreasing positive integers, stored
without trailing zeros; indexing past the last part reads as 0.  Compositions
are tuples of non-negative integers, compared with trailing zeros trimmed.
All functions are pure, so values may be shared freely across threads.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional

Partition = tuple[int, ...]
Composition = tuple[int, ...]


def make_partition(parts: Iterable[int]) -> Partition:
    """Validate and normalize a sequence of parts into a partition.

    Trailing zeros are dropped; a strictly increasing step or a negative
    part raises ValueError.
    """
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    for i, x in enumerate(p):
        if x <= 0:
            raise ValueError(f"partition parts must be positive: {p}")
        if i > 0 and p[i - 1] < x:
            raise ValueError(f"partition parts must be weakly decreasing: {p}")
    return p


def is_partition(seq: Iterable[int]) -> bool:
    s = trim(tuple(seq))
    return all(x > 0 for x in s) and all(s[i] >= s[i + 1] for i in range(len(s) - 1))


def trim(beta: Iterable[int]) -> Composition:
    """Drop trailing zeros so composition equality ignores padding."""
    b = tuple(beta)
    n = len(b)
    while n and b[n - 1] == 0:
        n -= 1
    return b[:n]


def part(lam: Partition, i: int) -> int:
    """The i-th part (1-indexed), reading 0 past the end."""
    return lam[i - 1] if 1 <= i <= len(lam) else 0


def size(lam: Iterable[int]) -> int:
    return sum(lam)


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram: result[j] = #{i : lam[i] >= j+1}."""
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0]))


def disjoint_union(lam: Partition, mu: Partition) -> Partition:
    """Partition whose multiset of parts is the union of both multisets."""
    return tuple(sorted(lam + mu, reverse=True))


def add(lam: Composition, mu: Composition) -> Composition:
    """Componentwise sum, missing parts read as 0."""
    n = max(len(lam), len(mu))
    return trim(tuple((lam[i] if i < len(lam) else 0) + (mu[i] if i < len(mu) else 0) for i in range(n)))


def scale(n: int, lam: Composition) -> Composition:
    if n < 0:
        raise ValueError("scale factor must be non-negative")
    return trim(tuple(n * x for x in lam)) if n else ()


def dominates(beta: Composition, gamma: Composition) -> bool:
    """Prefix-sum dominance: beta >= gamma at every prefix.

    Both arguments must be compositions of the same number.
    """
    if sum(beta) != sum(gamma):
        raise ValueError(f"dominance needs equal degree: {beta} vs {gamma}")
    sb = sg = 0
    for i in range(max(len(beta), len(gamma))):
        sb += beta[i] if i < len(beta) else 0
        sg += gamma[i] if i < len(gamma) else 0
        if sb < sg:
            return False
    return True


def strictly_dominates(beta: Composition, gamma: Composition) -> bool:
    return trim(beta) != trim(gamma) and dominates(beta, gamma)


def prefix_sums(beta: Composition, length: int) -> tuple[int, ...]:
    out = []
    s = 0
    for i in range(length):
        s += beta[i] if i < len(beta) else 0
        out.append(s)
    return tuple(out)


def enumerate_partitions(
    n: int, max_length: Optional[int] = None, max_part: Optional[int] = None
) -> list[Partition]:
    """All partitions of n within the bounds, in decreasing reverse-lex order.

    Reverse-lex compares part tuples lexicographically, so (n) comes first
    and (1^n) last; this order refines dominance.
    """
    if n < 0:
        return []
    ml = n if max_length is None else max_length
    mp = n if max_part is None else max_part
    out: list[Partition] = []

    def rec(remaining: int, slots: int, cap: int, acc: list[int]) -> None:
        if remaining == 0:
            out.append(tuple(acc))
            return
        if slots == 0 or cap == 0 or remaining > slots * cap:
            return
        for x in range(min(cap, remaining), 0, -1):
            acc.append(x)
            rec(remaining - x, slots - 1, x, acc)
            acc.pop()

    rec(n, ml, mp, [])
    return out


def compositions(n: int, max_length: int) -> Iterator[Composition]:
    """All compositions of n into at most max_length non-negative parts.

    Emitted in decreasing lexicographic order of the padded part tuple,
    which is a linear extension of dominance (larger prefix sums first).
    Trailing zeros are trimmed in the yielded tuples.
    """
    if n == 0:
        yield ()
        return
    if max_length <= 0:
        return

    acc = [0] * max_length

    def rec(pos: int, remaining: int) -> Iterator[Composition]:
        if pos == max_length - 1:
            acc[pos] = remaining
            yield trim(tuple(acc))
            acc[pos] = 0
            return
        for x in range(remaining, -1, -1):
            acc[pos] = x
            yield from rec(pos + 1, remaining - x)
        acc[pos] = 0

    yield from rec(0, n)


def parse_partition(text: str) -> Partition:
    """Parse the CLI partition grammar.

    Accepts comma-separated parts ("5,4,2,1"), exponent shorthand
    ("2^3,1" for (2,2,2,1)), optional surrounding brackets, and "[]" or ""
    for the empty partition.  Whitespace anywhere is rejected.
    """
    if text != text.strip() or any(ch.isspace() for ch in text):
        raise ValueError(f"whitespace not allowed in partition: {text!r}")
    body = text
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    if body == "":
        return ()
    parts: list[int] = []
    for token in body.split(","):
        if not token:
            raise ValueError(f"empty component in partition: {text!r}")
        if "^" in token:
            base_s, _, exp_s = token.partition("^")
            try:
                base, exp = int(base_s), int(exp_s)
            except ValueError:
                raise ValueError(f"bad partition component: {token!r}") from None
            if exp < 0:
                raise ValueError(f"negative exponent in partition: {token!r}")
            parts.extend([base] * exp)
        else:
            try:
                parts.append(int(token))
            except ValueError:
                raise ValueError(f"bad partition component: {token!r}") from None
    if any(x <= 0 for x in parts):
        raise ValueError(f"partition parts must be positive: {text!r}")
    return make_partition(parts)


def format_partition(lam: Composition) -> str:
    """Canonical textual form: comma-separated parts in square brackets."""
    return "[" + ",".join(str(x) for x in lam) + "]"
