"""Symmetric functions of one fixed degree in the Schur and monomial bases.

The plethysm of two Schur functions is computed through its monomial-weight
multiplicities: the count of plethystic semistandard tableaux by weight is
the formal character of the composite module, and the unitriangular Kostka
change of basis converts partition-weight multiplicities into Schur
coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .config import parallel_map
from .errors import ComputationError
from .partitions import (
    Composition,
    Partition,
    conjugate,
    dominates,
    enumerate_partitions,
    is_partition,
    make_partition,
    trim,
)
from .plethystic import count_pssyt_weight, weight_histogram
from .tableaux import count_ssyt, kostka


@dataclass(frozen=True)
class SchurVector:
    """Sparse integer combination of Schur functions of one degree."""

    degree: int
    coeffs: dict[Partition, int] = field(default_factory=dict)

    def __post_init__(self):
        for lam, c in self.coeffs.items():
            if sum(lam) != self.degree:
                raise ValueError(f"key {lam} is not a partition of {self.degree}")
            if c == 0:
                raise ValueError("zero coefficients must not be stored")

    def terms(self) -> list[tuple[Partition, int]]:
        """(partition, coefficient) pairs in decreasing reverse-lex order."""
        return sorted(self.coeffs.items(), key=lambda kv: kv[0], reverse=True)

    def __getitem__(self, lam: Partition) -> int:
        return self.coeffs.get(make_partition(lam), 0)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SchurVector)
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "terms": [
                {"lambda": list(lam), "coeff": c} for lam, c in self.terms()
            ],
        }

    @staticmethod
    def from_json(data: dict) -> "SchurVector":
        return SchurVector(
            data["degree"],
            {make_partition(t["lambda"]): t["coeff"] for t in data["terms"]},
        )


@dataclass(frozen=True)
class WeightMultiplicityMap:
    """Partition-weight multiplicities of a character computed on `letters` letters.

    Only partition weights are stored; a composition key reads through its
    decreasing sort, which is the same multiplicity by symmetry.
    """

    degree: int
    letters: int
    counts: dict[Partition, int] = field(default_factory=dict)

    def __getitem__(self, beta: Partition) -> int:
        return self.counts.get(trim(sorted(beta, reverse=True)), 0)


def plethysm_weights(nu: Partition, mu: Partition, d: int) -> WeightMultiplicityMap:
    """Partition-weight multiplicities of the plethysm on d letters.

    counts[beta] is the number of plethystic semistandard tableaux of shape
    mu^nu and weight beta, for each partition beta with at most d parts.
    """
    nu, mu = make_partition(nu), make_partition(mu)
    hist = weight_histogram(mu, nu, d)
    counts: dict[Partition, int] = {}
    for beta, n in hist.items():
        b = trim(beta)
        if is_partition(b):
            counts[b] = n
    return WeightMultiplicityMap(sum(mu) * sum(nu), d, counts)


def schur_expand(w: WeightMultiplicityMap) -> SchurVector:
    """Invert the Kostka unitriangular system to recover Schur coefficients.

    Repeatedly takes the reverse-lex greatest partition with a non-zero
    residue as pivot; its residue is the Schur coefficient, and the pivot's
    own weight multiplicities are subtracted.  A negative pivot residue means
    the input was not the character of an actual module.
    """
    keys = enumerate_partitions(w.degree, max_length=w.letters)
    residue = {k: w[k] for k in keys}
    coeffs: dict[Partition, int] = {}
    for i, beta in enumerate(keys):
        c = residue[beta]
        if c == 0:
            continue
        if c < 0:
            raise ComputationError(
                f"negative residue {c} at pivot {beta}: input is not a character"
            )
        coeffs[beta] = c
        for kappa in keys[i + 1 :]:
            k = kostka(beta, kappa)
            if k:
                residue[kappa] -= c * k
    return SchurVector(w.degree, coeffs)


def default_letters(nu: Partition, mu: Partition) -> int:
    """Letters sufficient for a complete Schur expansion of the plethysm.

    Constituents have at most |nu| * len(mu) parts: conjugating the plethysm
    swaps the roles of first part and length, and no weight can contain more
    copies of one letter than outer boxes times inner columns.
    """
    nu, mu = make_partition(nu), make_partition(mu)
    mn = sum(mu) * sum(nu)
    if mn == 0:
        return 1
    return min(mn, sum(nu) * len(mu))


def decompose(nu: Partition, mu: Partition, d: Optional[int] = None) -> SchurVector:
    """Full Schur expansion of the plethysm of s_nu into s_mu.

    With the default letter count the expansion is complete; a smaller d
    truncates to constituents with at most d parts.
    """
    nu, mu = make_partition(nu), make_partition(mu)
    if d is None:
        d = default_letters(nu, mu)
    return schur_expand(plethysm_weights(nu, mu, d))


def plethysm_coefficient(nu: Partition, mu: Partition, lam: Partition) -> int:
    """Single Schur coefficient of the plethysm, computed locally.

    Only weights dominating lam are enumerated (with len(lam) letters), and
    the pivot subtraction is run on that dominance-upward-closed set; the
    result agrees with the corresponding coefficient of the full expansion.

    Targets taller than wide are evaluated through the conjugated query:
    the sign-twist involution trades the number of parts against the first
    part, which keeps the dominance-upward set small.  The tests cross-check
    this route against untwisted full expansions.
    """
    nu, mu = make_partition(nu), make_partition(mu)
    lam = make_partition(lam)
    mn = sum(mu) * sum(nu)
    if sum(lam) != mn:
        raise ValueError(f"|lambda|={sum(lam)} must equal |mu||nu|={mn}")
    if mn == 0:
        return count_pssyt_weight(mu, nu, (), 1, limit=1)
    if len(lam) > lam[0]:
        kappa = nu if sum(mu) % 2 == 0 else conjugate(nu)
        return plethysm_coefficient(kappa, conjugate(mu), conjugate(lam))
    d = len(lam)
    weights = [
        beta for beta in enumerate_partitions(mn, max_length=d) if dominates(beta, lam)
    ]
    counts = parallel_map(lambda beta: count_pssyt_weight(mu, nu, beta, d), weights)
    residue = dict(zip(weights, counts))
    for i, beta in enumerate(weights):
        c = residue[beta]
        if beta == lam:
            if c < 0:
                raise ComputationError(
                    f"negative residue {c} at {beta}: inconsistent weight counts"
                )
            return c
        if c == 0:
            continue
        if c < 0:
            raise ComputationError(
                f"negative residue {c} at pivot {beta}: inconsistent weight counts"
            )
        for kappa in weights[i + 1 :]:
            k = kostka(beta, kappa)
            if k:
                residue[kappa] -= c * k
    return 0


def sign_twist(v: SchurVector) -> SchurVector:
    """The involution sending each Schur function to its conjugate partner."""
    return SchurVector(v.degree, {conjugate(lam): c for lam, c in v.coeffs.items()})


def inner_product(u: SchurVector, v: SchurVector) -> int:
    """Hall inner product; Schur functions are orthonormal."""
    if u.degree != v.degree:
        raise ValueError(f"degree mismatch: {u.degree} vs {v.degree}")
    small, large = (u.coeffs, v.coeffs) if len(u.coeffs) <= len(v.coeffs) else (v.coeffs, u.coeffs)
    return sum(c * large.get(lam, 0) for lam, c in small.items())


def dim_nabla(lam: Partition, d: int) -> int:
    """Dimension of the irreducible with this highest weight on d letters."""
    return count_ssyt(make_partition(lam), d)
