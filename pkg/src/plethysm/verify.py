"""Executable verification of the stability and maximality identities.

Each check computes both sides of one identity on a concrete instance and
reports a structured verdict.  The numbering (1, 1t, 2, 3, 5) matches the
CLI's --theorem flag:

  1   row insertion: prepending a longest row (r) to mu and (|nu| r) to
      lambda preserves the coefficient, for r >= mu_1.
  1t  sign-twisted column form: adding a column (1^r) to mu and to lambda,
      with the outer shape conjugated when r is odd, for r >= len(mu).
  2   column stability: adding columns (1^r) to mu and (|nu|^r) to lambda is
      monotone in N and constant past an explicit threshold.
  3   symmetric-power products: multiplying highest-weight vectors shows the
      coefficient can only grow when symmetric powers are concatenated.
  5   maximal constituents: the dominance-maximal constituents are exactly
      the maximal tableau weights, with multiplicity the tableau count.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Any

from .hwv import hwv_space, is_highest_weight, multiply_hwv
from .linalg import integer_rank
from .partitions import (
    Composition,
    Partition,
    add,
    conjugate,
    disjoint_union,
    dominates,
    format_partition,
    make_partition,
    scale,
    trim,
)
from .plethystic import count_pssyt_weight, maximal_weights
from .symfunc import decompose, plethysm_coefficient


@dataclass
class VerificationReport:
    theorem: str
    params: dict[str, Any]
    lhs: Any
    rhs: Any
    verdict: str
    ms: float

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "params": self.params,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "verdict": self.verdict,
            "ms": round(self.ms, 3),
        }


def _report(theorem, params, lhs, rhs, ok, started) -> VerificationReport:
    return VerificationReport(
        theorem, params, lhs, rhs, "pass" if ok else "fail",
        (time.perf_counter() - started) * 1000.0,
    )


def _p(lam: Composition) -> list[int]:
    return list(trim(lam))


def verify_theorem1(
    nu: Partition, mu: Partition, lam: Partition, r: int
) -> VerificationReport:
    """Coefficient is unchanged by (r) |_| mu and (nr) |_| lambda, r >= mu_1."""
    started = time.perf_counter()
    nu, mu, lam = make_partition(nu), make_partition(mu), make_partition(lam)
    if mu and r < mu[0]:
        raise ValueError(f"need r >= greatest part of mu: r={r}, mu={mu}")
    if sum(lam) != sum(mu) * sum(nu):
        raise ValueError("lambda must be a partition of |mu||nu|")
    n = sum(nu)
    lhs = plethysm_coefficient(nu, disjoint_union((r,), mu), disjoint_union((n * r,), lam))
    rhs = plethysm_coefficient(nu, mu, lam)
    params = {"nu": _p(nu), "mu": _p(mu), "lambda": _p(lam), "r": r}
    return _report("1", params, lhs, rhs, lhs == rhs, started)


def verify_theorem1_twisted(
    nu: Partition, mu: Partition, lam: Partition, r: int
) -> VerificationReport:
    """Coefficient is unchanged by mu+(1^r), lambda+(1^{nr}), outer conjugated
    for odd r; requires r >= len(mu)."""
    started = time.perf_counter()
    nu, mu, lam = make_partition(nu), make_partition(mu), make_partition(lam)
    if r < len(mu):
        raise ValueError(f"need r >= number of parts of mu: r={r}, mu={mu}")
    if sum(lam) != sum(mu) * sum(nu):
        raise ValueError("lambda must be a partition of |mu||nu|")
    n = sum(nu)
    kappa = nu if r % 2 == 0 else conjugate(nu)
    lhs = plethysm_coefficient(kappa, add(mu, (1,) * r), add(lam, (1,) * (n * r)))
    rhs = plethysm_coefficient(nu, mu, lam)
    params = {"nu": _p(nu), "mu": _p(mu), "lambda": _p(lam), "r": r}
    return _report("1t", params, lhs, rhs, lhs == rhs, started)


def saturation_threshold(nu: Partition, mu: Partition, lam: Partition, r: int) -> int:
    """Raw bound past which the column-added coefficient is constant.

    n(mu_1+...+mu_{r-1}) + (n-1) mu_r + mu_{r+1} - (lam_1+...+lam_r);
    may be negative, callers clamp as needed.
    """
    nu, mu, lam = make_partition(nu), make_partition(mu), make_partition(lam)
    n = sum(nu)

    def mu_at(i):
        return mu[i - 1] if i <= len(mu) else 0

    head = sum(mu_at(i) for i in range(1, r))
    lam_prefix = sum(lam[i] for i in range(min(r, len(lam))))
    return n * head + (n - 1) * mu_at(r) + mu_at(r + 1) - lam_prefix


def _column_added_coefficient(nu, mu, lam, r, N) -> int:
    return plethysm_coefficient(
        nu, add(mu, scale(N, (1,) * r)), add(lam, scale(N, (sum(nu),) * r))
    )


def verify_theorem2(
    nu: Partition, mu: Partition, lam: Partition, r: int, n_max: int
) -> VerificationReport:
    """Monotone growth in N of the column-added coefficient, constant past
    the saturation threshold."""
    started = time.perf_counter()
    nu, mu, lam = make_partition(nu), make_partition(mu), make_partition(lam)
    if sum(lam) != sum(mu) * sum(nu):
        raise ValueError("lambda must be a partition of |mu||nu|")
    values = [_column_added_coefficient(nu, mu, lam, r, N) for N in range(n_max + 1)]
    threshold = saturation_threshold(nu, mu, lam, r)
    start = max(threshold, 0)
    ok = all(values[i] <= values[i + 1] for i in range(len(values) - 1))
    ok = ok and all(
        values[i] == values[start] for i in range(start, len(values))
    )
    params = {"nu": _p(nu), "mu": _p(mu), "lambda": _p(lam), "r": r, "N_max": n_max}
    return _report("2", params, values, threshold, ok, started)


def stability_bound(nu: Partition, mu: Partition, lam: Partition, r: int) -> int:
    """Upper bound for the stable coefficient: the tableau count at the
    saturation point itself."""
    nu, mu, lam = make_partition(nu), make_partition(mu), make_partition(lam)
    L = max(saturation_threshold(nu, mu, lam, r), 0)
    inner = add(mu, scale(L, (1,) * r))
    target = add(lam, scale(L, (sum(nu),) * r))
    d = max(len(trim(target)), 1)
    return count_pssyt_weight(inner, nu, target, d)


def verify_theorem3(
    n: int,
    nstar: int,
    mu: Partition,
    lam: Partition,
    lamstar: Partition,
    check_witnesses: bool = False,
) -> VerificationReport:
    """Symmetric-power coefficient can only grow when powers concatenate.

    Skipped (not failed) when lamstar is not a constituent of the nstar-th
    power.  With check_witnesses, the product vectors are constructed and
    verified to be linearly independent highest-weight vectors.
    """
    started = time.perf_counter()
    mu, lam, lamstar = make_partition(mu), make_partition(lam), make_partition(lamstar)
    if sum(lam) != sum(mu) * n or sum(lamstar) != sum(mu) * nstar:
        raise ValueError("degree mismatch between shapes and powers")
    params = {
        "n": n, "n_star": nstar, "mu": _p(mu),
        "lambda": _p(lam), "lambda_star": _p(lamstar),
    }
    star_mult = plethysm_coefficient((nstar,), mu, lamstar) if nstar else 1
    if star_mult < 1:
        return VerificationReport(
            "3", params, None, None, "skipped",
            (time.perf_counter() - started) * 1000.0,
        )
    lhs = plethysm_coefficient((n + nstar,) if n + nstar else (), mu, add(lam, lamstar))
    rhs = plethysm_coefficient((n,) if n else (), mu, lam)
    ok = lhs >= rhs
    if ok and check_witnesses and rhs > 0 and nstar > 0:
        d = max(len(add(lam, lamstar)), 1)
        vs = hwv_space(mu, (n,), lam, d)
        w = hwv_space(mu, (nstar,), lamstar, d)[0]
        products = [multiply_hwv(v, w) for v in vs]
        ok = all(is_highest_weight(p) for p in products)
        support = sorted(
            {T for p in products for T in p.coeffs},
            key=lambda T: tuple(t.sort_key() for t in T.entries()),
        )
        matrix = [[p.coeffs.get(T, 0) for T in support] for p in products]
        ok = ok and integer_rank(matrix) == rhs
    return _report("3", params, lhs, rhs, ok, started)


def _maximal_constituents(sv) -> dict[Partition, int]:
    support = list(sv.coeffs)
    return {
        lam: c
        for lam, c in sv.coeffs.items()
        if not any(v != lam and dominates(v, lam) for v in support)
    }


def _minimal_constituents(sv) -> dict[Partition, int]:
    support = list(sv.coeffs)
    return {
        lam: c
        for lam, c in sv.coeffs.items()
        if not any(v != lam and dominates(lam, v) for v in support)
    }


def verify_theorem5(nu: Partition, mu: Partition) -> VerificationReport:
    """Dominance-maximal constituents equal maximal tableau weights with
    matching multiplicities; minimal constituents match through the sign
    twist."""
    started = time.perf_counter()
    nu, mu = make_partition(nu), make_partition(mu)
    expansion = decompose(nu, mu)
    maximal = _maximal_constituents(expansion)
    predicted = maximal_weights(mu, nu)
    ok = maximal == predicted

    # minimal constituents are the conjugated maximal tableau weights of the
    # sign-twisted shape, with the same multiplicities
    m = sum(mu)
    kappa = nu if m % 2 == 0 else conjugate(nu)
    minimal = _minimal_constituents(expansion)
    from_twist = {
        conjugate(w): c for w, c in maximal_weights(conjugate(mu), kappa).items()
    }
    ok = ok and minimal == from_twist

    params = {"nu": _p(nu), "mu": _p(mu)}
    lhs = {format_partition(k): v for k, v in sorted(maximal.items(), reverse=True)}
    rhs = {format_partition(k): v for k, v in sorted(predicted.items(), reverse=True)}
    return _report("5", params, lhs, rhs, ok, started)
