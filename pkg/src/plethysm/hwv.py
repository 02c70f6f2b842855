"""Weight spaces, raising operators, and highest-weight vectors of the
composite module built from an outer shape nu over an inner shape mu on d
letters.

The canonical basis is indexed by plethystic semistandard tableaux; the
raising operator for letter c sends a basis vector to the sum over all ways
of lowering a single c to c-1 inside a single inner entry, re-expressed in
the canonical basis by straightening first the modified inner tableau and
then the outer tableau over the ranked alphabet.  Highest-weight vectors are
integer kernel elements of the stacked raising matrices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional

from . import _kernels
from .linalg import integer_kernel
from .partitions import Composition, Partition, add, make_partition, trim
from .plethystic import (
    PlethysticTableau,
    _outer_sort_key,
    _prefix_cap,
    alphabet_contents,
    format_pssyt,
    inner_alphabet,
    pssyt_from_ranks,
)
from .polytabloid import straighten
from .tableaux import Tableau


class PlethysmSpace:
    """Canonical-basis bookkeeping for one (mu, nu, d) triple.

    Outer tableaux are handled in ranked form: entries are indices into the
    sorted alphabet of semistandard inner tableaux.  Instances are cached by
    get_space and hold straightening and raising caches; all cached values
    are deterministic, so concurrent repeated computation is harmless.
    """

    def __init__(self, mu: Partition, nu: Partition, d: int):
        self.mu = make_partition(mu)
        self.nu = make_partition(nu)
        self.d = d
        self.alphabet = inner_alphabet(self.mu, d)
        self.index = {t: r for r, t in enumerate(self.alphabet)}
        self.contents = alphabet_contents(self.mu, d)
        self._weight_bases: dict[tuple[int, ...], list[Tableau]] = {}
        self._raising: dict[tuple[int, Tableau], dict[Tableau, int]] = {}

    def pad(self, beta: Composition) -> Optional[tuple[int, ...]]:
        beta = trim(beta)
        if len(beta) > self.d:
            return None
        return beta + (0,) * (self.d - len(beta))

    def weight_basis(self, beta: Composition) -> list[Tableau]:
        """Ranked canonical-basis tableaux of the given weight, in outer order."""
        target = self.pad(beta)
        if target is None or sum(target) != sum(self.mu) * sum(self.nu):
            return []
        if target not in self._weight_bases:
            _, rows = _kernels.fill_weighted(
                self.nu,
                len(self.alphabet),
                self.contents,
                target,
                _prefix_cap(self.mu, self.d),
                0,
                True,
            )
            rows.sort(key=_outer_sort_key)
            self._weight_bases[target] = [Tableau(r) for r in rows]
        return self._weight_bases[target]

    def pssyt(self, rank_tab: Tableau) -> PlethysticTableau:
        return pssyt_from_ranks(self.mu, rank_tab.rows, self.alphabet)

    def ranked(self, T: PlethysticTableau) -> Tableau:
        try:
            return Tableau(tuple(tuple(self.index[t] for t in row) for row in T.rows))
        except KeyError:
            raise ValueError(
                "tableau entry outside the semistandard alphabet for "
                f"mu={self.mu}, d={self.d}"
            ) from None

    def normalize(self, raw_rows: tuple[tuple[Tableau, ...], ...]) -> dict[Tableau, int]:
        """Express a raw outer filling (inner entries arbitrary) canonically.

        Straightens every inner entry, expands multilinearly, then
        straightens the outer tableau over ranks.
        """
        per_box: list[list[tuple[int, int]]] = []
        for row in raw_rows:
            for t in row:
                st = straighten(t)
                if not st:
                    return {}
                per_box.append([(self.index[s], c) for s, c in st.items()])
        shape = tuple(len(r) for r in raw_rows)
        out: dict[Tableau, int] = {}
        for combo in itertools.product(*per_box):
            coeff = 1
            ranks: list[int] = []
            for rk, c in combo:
                coeff *= c
                ranks.append(rk)
            rows = []
            k = 0
            for r in shape:
                rows.append(tuple(ranks[k : k + r]))
                k += r
            for key, c in straighten(Tableau(tuple(rows))).items():
                val = out.get(key, 0) + coeff * c
                if val:
                    out[key] = val
                else:
                    out.pop(key, None)
        return out

    def raising_on_basis(self, c: int, S: Tableau) -> dict[Tableau, int]:
        """Image of one canonical basis vector under the raising operator."""
        key = (c, S)
        cached = self._raising.get(key)
        if cached is not None:
            return cached
        out: dict[Tableau, int] = {}
        rows = S.rows
        for bi, row in enumerate(rows):
            for bj, rank in enumerate(row):
                t = self.alphabet[rank]
                for i, j in t.boxes():
                    if t.entry(i, j) != c:
                        continue
                    lowered = t.replace_entry(i, j, c - 1)
                    raw = tuple(
                        tuple(
                            lowered if (ri == bi and rj == bj) else self.alphabet[rk]
                            for rj, rk in enumerate(r)
                        )
                        for ri, r in enumerate(rows)
                    )
                    for key2, val in self.normalize(raw).items():
                        acc = out.get(key2, 0) + val
                        if acc:
                            out[key2] = acc
                        else:
                            out.pop(key2, None)
        self._raising[key] = out
        return out


_SPACES: dict[tuple[Partition, Partition, int], PlethysmSpace] = {}


def get_space(mu: Partition, nu: Partition, d: int) -> PlethysmSpace:
    key = (make_partition(mu), make_partition(nu), d)
    if key not in _SPACES:
        _SPACES[key] = PlethysmSpace(*key)
    return _SPACES[key]


@dataclass(frozen=True)
class HwVector:
    """Sparse integer vector in the canonical basis, tagged with its weight."""

    mu: Partition
    nu: Partition
    d: int
    weight: Composition
    coeffs: dict[PlethysticTableau, int] = field(default_factory=dict)

    def is_zero(self) -> bool:
        return not self.coeffs

    def terms(self) -> list[tuple[PlethysticTableau, int]]:
        space = get_space(self.mu, self.nu, self.d)
        return sorted(
            self.coeffs.items(), key=lambda kv: _outer_sort_key(space.ranked(kv[0]).rows)
        )

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, HwVector)
            and (self.mu, self.nu, self.d) == (other.mu, other.nu, other.d)
            and trim(self.weight) == trim(other.weight)
            and self.coeffs == other.coeffs
        )

    def to_json(self) -> dict:
        return {
            "weight": list(trim(self.weight)),
            "terms": [
                {"tableau": format_pssyt(T), "coeff": c} for T, c in self.terms()
            ],
        }


def weight_space_basis(
    mu: Partition, nu: Partition, d: int, beta: Composition
) -> list[PlethysticTableau]:
    """Canonical basis elements of one weight, in a fixed deterministic order."""
    space = get_space(mu, nu, d)
    return [space.pssyt(S) for S in space.weight_basis(beta)]


def raising_action(c: int, v: HwVector) -> HwVector:
    """Apply the raising operator for letter c, staying in the canonical basis."""
    if not 2 <= c <= v.d:
        raise ValueError(f"raising letter must satisfy 2 <= c <= d={v.d}: got {c}")
    space = get_space(v.mu, v.nu, v.d)
    acc: dict[Tableau, int] = {}
    for T, coeff in v.coeffs.items():
        for key, val in space.raising_on_basis(c, space.ranked(T)).items():
            value = acc.get(key, 0) + coeff * val
            if value:
                acc[key] = value
            else:
                acc.pop(key, None)
    padded = space.pad(v.weight)
    if padded is None:
        raise ValueError(f"weight {v.weight} needs more than d={v.d} letters")
    beta = list(padded)
    beta[c - 2] += 1
    beta[c - 1] -= 1
    return HwVector(
        v.mu, v.nu, v.d, trim(tuple(beta)), {space.pssyt(S): x for S, x in acc.items()}
    )


def is_highest_weight(v: HwVector) -> bool:
    """Whether every raising operator annihilates the vector."""
    if v.is_zero():
        return False
    return all(raising_action(c, v).is_zero() for c in range(2, v.d + 1))


def hwv_space(
    mu: Partition, nu: Partition, lam: Partition, d: Optional[int] = None
) -> list[HwVector]:
    """Integral basis of the highest-weight vectors of weight lam.

    Stacks the raising matrices for all letters over the lam-weight space and
    returns primitive integer kernel vectors; the count is the Schur
    coefficient of lam in the plethysm.
    """
    mu, nu, lam = make_partition(mu), make_partition(nu), make_partition(lam)
    if sum(lam) != sum(mu) * sum(nu):
        raise ValueError(
            f"|lambda|={sum(lam)} must equal |mu||nu|={sum(mu) * sum(nu)}"
        )
    if d is None:
        d = max(len(lam), 1)
    if d < len(lam):
        raise ValueError(f"need d >= len(lambda): d={d}, lambda={lam}")
    space = get_space(mu, nu, d)
    basis = space.weight_basis(lam)
    if not basis:
        return []
    images = {
        c: [space.raising_on_basis(c, S) for S in basis] for c in range(2, d + 1)
    }
    rows: list[list[int]] = []
    for c in range(2, d + 1):
        targets: list[Tableau] = sorted(
            {t for img in images[c] for t in img}, key=lambda t: t.sort_key()
        )
        for t in targets:
            rows.append([img.get(t, 0) for img in images[c]])
    kernel = integer_kernel(rows, len(basis))
    out = []
    for vec in kernel:
        coeffs = {
            space.pssyt(S): x for S, x in zip(basis, vec) if x
        }
        out.append(HwVector(mu, nu, d, lam, coeffs))
    return out


def _perm_sign(perm: tuple[int, ...]) -> int:
    inversions = sum(
        1
        for a in range(len(perm))
        for b in range(a + 1, len(perm))
        if perm[a] > perm[b]
    )
    return -1 if inversions % 2 else 1


def foulkes_hwv(l: int, d: Optional[int] = None) -> HwVector:
    """The alternating highest-weight vector of weight (2^l) in the l-th
    symmetric power of the quadratic module.

    Sums, over permutations sigma with sign, the product of the degree-two
    basis vectors pairing i with sigma(i).  The factorial loop is a fixture
    generator, capped at l <= 7.
    """
    if l < 1:
        raise ValueError("l must be positive")
    if l > 7:
        raise ValueError("factorial-size construction capped at l = 7")
    if d is None:
        d = l
    if d < l:
        raise ValueError(f"need d >= l: d={d}, l={l}")
    mu, nu = (2,), (l,)
    space = get_space(mu, nu, d)
    acc: dict[tuple[int, ...], int] = {}
    for perm in itertools.permutations(range(1, l + 1)):
        sign = _perm_sign(perm)
        ranks = sorted(
            space.index[Tableau(((min(i, s), max(i, s)),))]
            for i, s in enumerate(perm, start=1)
        )
        key = tuple(ranks)
        val = acc.get(key, 0) + sign
        if val:
            acc[key] = val
        else:
            acc.pop(key, None)
    coeffs = {
        space.pssyt(Tableau((ranks,))): c for ranks, c in acc.items()
    }
    return HwVector(mu, nu, d, (2,) * l, coeffs)


def tilde_map(v: HwVector, r: int) -> HwVector:
    """Prepend a longest row of 1s of length r to every inner entry.

    Entries shift up by one letter and gain a top row of r ones; this is a
    weight-space bijection sending highest-weight vectors of weight lam to
    highest-weight vectors of weight (|nu| r) joined with lam, on d+1 letters.
    """
    if r < (v.mu[0] if v.mu else 0):
        raise ValueError(f"need r >= greatest part of mu: r={r}, mu={v.mu}")
    new_mu = (r,) + v.mu
    n = sum(v.nu)
    coeffs: dict[PlethysticTableau, int] = {}
    for T, c in v.coeffs.items():
        rows = tuple(
            tuple(
                Tableau(((1,) * r,) + tuple(tuple(x + 1 for x in row) for row in t.rows))
                for t in outer_row
            )
            for outer_row in T.rows
        )
        coeffs[PlethysticTableau(new_mu, rows)] = c
    weight = (n * r,) + trim(v.weight)
    return HwVector(new_mu, v.nu, v.d + 1, weight, coeffs)


def star_map(v: HwVector, r: int) -> HwVector:
    """Insert a fresh column with entries 1..r into every inner entry.

    The column goes to position 1 when r is at least the number of rows of
    mu, and just right of the columns forced by row r+1 otherwise.  Raw
    images are column-standard but not always row-semistandard, so the
    result is re-expressed in the canonical basis.
    """
    if r < 1:
        raise ValueError("r must be positive")
    if v.d < r or v.d < len(v.mu):
        raise ValueError(f"need d >= r and d >= len(mu): d={v.d}, r={r}, mu={v.mu}")
    mu = v.mu
    e = 1 if r >= len(mu) else mu[r] + 1
    new_mu = add(mu, (1,) * r)
    n = sum(v.nu)
    space = get_space(new_mu, v.nu, v.d)
    acc: dict[Tableau, int] = {}
    for T, c in v.coeffs.items():
        raw = tuple(
            tuple(_insert_column(t, r, e) for t in outer_row) for outer_row in T.rows
        )
        for key, val in space.normalize(raw).items():
            value = acc.get(key, 0) + c * val
            if value:
                acc[key] = value
            else:
                acc.pop(key, None)
    weight = add(trim(v.weight), (n,) * r)
    return HwVector(
        new_mu, v.nu, v.d, weight, {space.pssyt(S): x for S, x in acc.items()}
    )


def _insert_column(t: Tableau, r: int, e: int) -> Tableau:
    rows = []
    for i in range(max(len(t.rows), r)):
        row = list(t.rows[i]) if i < len(t.rows) else []
        if i < r:
            row.insert(e - 1, i + 1)
        rows.append(tuple(row))
    out = Tableau(tuple(rows))
    if not out.is_column_standard():
        raise ValueError(f"column insertion broke column-standardness on {t}")
    return out


def multiply_hwv(v: HwVector, w: HwVector) -> HwVector:
    """Product in the symmetric algebra on the inner module.

    Both outer shapes must be single rows (or empty); outer rows concatenate
    and re-sort, weights add, and a product of highest-weight vectors is
    highest-weight.
    """
    if (v.mu, v.d) != (w.mu, w.d):
        raise ValueError("factors must share the inner shape and letter count")
    for u in (v, w):
        if len(u.nu) > 1:
            raise ValueError(f"outer shape must be a single row: {u.nu}")
    new_nu = (sum(v.nu) + sum(w.nu),) if sum(v.nu) + sum(w.nu) else ()
    coeffs: dict[PlethysticTableau, int] = {}
    for (T, a), (U, b) in itertools.product(v.coeffs.items(), w.coeffs.items()):
        merged = sorted(T.entries() + U.entries(), key=Tableau.sort_key)
        key = PlethysticTableau(v.mu, (tuple(merged),) if merged else ())
        val = coeffs.get(key, 0) + a * b
        if val:
            coeffs[key] = val
        else:
            coeffs.pop(key, None)
    return HwVector(v.mu, new_nu, v.d, add(trim(v.weight), trim(w.weight)), coeffs)
