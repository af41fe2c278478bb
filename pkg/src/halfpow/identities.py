"""The exact identity suite run by ``halfpow identities``.

Each check returns a :class:`CheckResult`; nothing here raises on a failed
identity, so a report can list every failure at once.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, List

from .chebyshev_identities import (
    cheb_pair,
    gen_series,
    gf_instance_checks,
    lemma4_check,
    pell_check,
    telescope_symbolic_check,
)
from .ramanujan_coeffs import (
    A_direct,
    A_gf_catalan,
    A_gf_plus,
    P_direct,
    P_gf,
    coeffset,
    faulhaber_poly,
    odd_indices,
    sumA_functional,
    zero_pattern_holds,
)
from .series import Series, binomial_series, duality_lhs, duality_rhs, lagrange_burmann_sides
from .special_series import (
    bernoulli_numbers,
    bz1z_check,
    catalan_identity_check,
    negation_identity_check,
    reciprocal_check,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def random_rational(rng: random.Random, num: int = 9, den: int = 6) -> Fraction:
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def random_poly_series(rng: random.Random, degree: int, order: int) -> Series:
    d = rng.randint(0, degree)
    return Series.from_poly([random_rational(rng) for _ in range(d + 1)], order)


def duality_instances(count: int, seed: int = 0):
    """``(h, alpha, m)`` triples: polynomial h of degree <= 8, alpha in {p/2 : |p| <= 9}, m <= 12."""
    rng = random.Random(seed)
    for _ in range(count):
        m = rng.randint(0, 12)
        yield random_poly_series(rng, 8, 13), Fraction(rng.randint(-9, 9), 2), m


def check_duality(count: int = 500, seed: int = 0) -> CheckResult:
    bad = [
        (str(a), m)
        for h, a, m in duality_instances(count, seed)
        if duality_rhs(h, a, m) != duality_lhs(h, a, m)
    ]
    return CheckResult("duality", not bad, f"{count} instances" + (f", failures {bad[:3]}" if bad else ""))


def check_lagrange_burmann(count: int = 100, seed: int = 1) -> CheckResult:
    rng = random.Random(seed)
    phi = Series([1, 1], 12)
    g = binomial_series(-1, -1, 11).mul_z()  # z/(1-z)
    bad = 0
    for _ in range(count):
        m = rng.randint(0, 10)
        H = random_poly_series(rng, 6, 12)
        lhs, rhs = lagrange_burmann_sides(H, phi, g, m)
        bad += lhs != rhs
    return CheckResult("lagrange_burmann", bad == 0, f"{count} instances, {bad} failures")


def check_bernoulli_recurrence(count: int = 60) -> CheckResult:
    B = bernoulli_numbers(count)
    ok = B[0] == 1 and B[1] == Fraction(-1, 2)
    ok = ok and all(sum(comb(m + 1, j) * B[j] for j in range(m + 1)) == 0 for m in range(1, count))
    ok = ok and all(B[i] == 0 for i in range(3, count, 2))
    return CheckResult("bernoulli_recurrence", ok, f"B_0..B_{count - 1}")


def check_reciprocal(alpha_max: int = 20) -> CheckResult:
    return CheckResult(
        "reciprocal_bernoulli", all(reciprocal_check(a) for a in range(alpha_max + 1)), f"alpha <= {alpha_max}"
    )


def check_negation(order: int, count: int = 50, seed: int = 2) -> CheckResult:
    rng = random.Random(seed)
    alphas = [random_rational(rng, 40, 12) for _ in range(count)]
    return CheckResult(
        "bernoulli_negation", all(negation_identity_check(a, order) for a in alphas), f"{count} alphas, order {order}"
    )


def check_bz1z(order: int, alpha_max: int = 10) -> CheckResult:
    return CheckResult(
        "bernoulli_z_over_1_minus_z",
        all(bz1z_check(a, order) for a in range(1, alpha_max + 1)),
        f"integer alpha <= {alpha_max}, order {order}",
    )


def check_catalan(order: int) -> List[CheckResult]:
    return [
        CheckResult(f"catalan_{w}", catalan_identity_check(w, order), f"order {order}")
        for w in ("i", "ii", "iii", "iv", "v")
    ]


def check_route_equivalence(k_max: int) -> CheckResult:
    bad = [
        k
        for k in range(1, k_max + 1, 2)
        if not (A_direct(k) == A_gf_plus(k) == A_gf_catalan(k) and P_direct(k) == P_gf(k))
    ]
    return CheckResult("route_equivalence", not bad, f"odd k <= {k_max}" + (f", bad {bad}" if bad else ""))


def check_zero_pattern(k_max: int) -> CheckResult:
    bad = [k for k in range(1, k_max + 1, 2) if not zero_pattern_holds(k, A_direct(k))]
    return CheckResult("zero_pattern", not bad, f"odd k <= {k_max}" + (f", bad {bad}" if bad else ""))


def check_functional_sums(k_max: int = 15, per_k: int = 20, seed: int = 3) -> CheckResult:
    rng = random.Random(seed)
    bad = []
    for k in range(1, k_max + 1, 2):
        A = coeffset(k).A
        top = (k + 1) // 2
        for _ in range(per_k):
            F = random_poly_series(rng, top, top + 1)
            direct = sum(A[i] * F[(i - 1) // 2] for i in odd_indices(k))
            if not (sumA_functional(k, F, "i") == sumA_functional(k, F, "ii") == direct):
                bad.append(k)
    return CheckResult("functional_sums", not bad, f"odd k <= {k_max}, {per_k} F each")


def check_chebyshev(m_max: int = 31) -> CheckResult:
    order = (m_max + 1) // 2
    T, U = gen_series("T", order), gen_series("U", order)
    ok = all(
        T[(m - 1) // 2] == cheb_pair(m).t_over_root and U[(m - 1) // 2] == cheb_pair(m).u and pell_check(m)
        for m in range(1, m_max + 1, 2)
    )
    return CheckResult("chebyshev_bisection", ok, f"odd m <= {m_max}")


def check_gf_instances(order: int = 16) -> CheckResult:
    t_ok, u_ok = gf_instance_checks(order)
    return CheckResult("chebyshev_gf_instances", t_ok and u_ok, f"order {order}")


def check_chebyshev_sums(k_max: int) -> CheckResult:
    bad = [k for k in range(1, k_max + 1, 2) if not lemma4_check(k)]
    return CheckResult("lemma4_check", not bad, f"odd k <= {k_max}")


def check_telescope(k_max: int) -> CheckResult:
    bad = [k for k in range(1, k_max + 1, 2) if not telescope_symbolic_check(k)]
    return CheckResult("telescoping", not bad, f"odd k <= {k_max}")


def check_faulhaber(p_max: int = 12, n_max: int = 30) -> CheckResult:
    ok = all(
        faulhaber_poly(p)(Fraction(n)) == sum(i ** p for i in range(1, n + 1))
        for p in range(p_max + 1)
        for n in range(n_max + 1)
    )
    return CheckResult("faulhaber", ok, f"p <= {p_max}, n <= {n_max}")


def run_suite(order: int = 30, k_max: int = 31, samples: int = 500) -> List[CheckResult]:
    if order < 4:
        raise ValueError("order must be at least 4")
    checks: List[Callable[[], object]] = [
        lambda: check_bernoulli_recurrence(max(order, 60)),
        lambda: check_reciprocal(),
        lambda: check_negation(order),
        lambda: check_bz1z(order),
        lambda: check_catalan(order),
        lambda: check_duality(samples),
        lambda: check_lagrange_burmann(),
        lambda: check_faulhaber(),
        lambda: check_route_equivalence(k_max),
        lambda: check_zero_pattern(k_max),
        lambda: check_functional_sums(min(k_max, 15)),
        lambda: check_chebyshev(),
        lambda: check_gf_instances(),
        lambda: check_chebyshev_sums(k_max),
        lambda: check_telescope(k_max),
    ]
    out: List[CheckResult] = []
    for c in checks:
        r = c()
        out.extend(r if isinstance(r, list) else [r])
    return out
