"""Biggs potentials and exact effective resistances from an intersection array.

The potential sequence phi_0,...,phi_{D-1} is defined by phi_0 = n-1 and
phi_i = (c_i*phi_{i-1} - k)/b_i.  Every resistance between vertices at
distance j follows as r_j = 2*(phi_0+...+phi_{j-1})/(nk).  Everything in
this module is exact rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arrays import DerivedParams


def compute_potentials_recursive(params: DerivedParams) -> tuple[Fraction, ...]:
    """phi_0 = n-1, then phi_i = (c_i*phi_{i-1} - k)/b_i for 1 <= i <= D-1."""
    arr = params.array
    k = params.k
    phi = [Fraction(params.n - 1)]
    for i in range(1, arr.D):
        phi.append((arr.ci(i) * phi[-1] - k) / arr.bi(i))
    return tuple(phi)


def compute_potentials_explicit(params: DerivedParams) -> tuple[Fraction, ...]:
    """Closed form: phi_i = k * sum_{t=i+1}^{D} (b_{i+1}...b_{t-1})/(c_{i+1}...c_t)."""
    arr = params.array
    k = params.k
    out = []
    for i in range(arr.D):
        total = Fraction(0)
        num = 1
        den = 1
        for t in range(i + 1, arr.D + 1):
            if t > i + 1:
                num *= arr.bi(t - 1)
            den *= arr.ci(t)
            total += Fraction(num, den)
        out.append(k * total)
    return tuple(out)


def telescoping_terms(params: DerivedParams, i: int) -> tuple[Fraction, ...]:
    """Grouped terms of the telescoped expansion of phi_{i-1} - phi_i.

    Returns the D-i paired differences followed by the trailing product
    term; conditions (i)/(ii) make every paired group >= 0 and the trailing
    term > 0, which is the positivity (strict-decrease) argument.
    """
    arr = params.array
    D = arr.D
    if not 1 <= i <= D - 1:
        raise IndexError(f"telescoping index {i} out of range [1, {D - 1}]")
    # A_m = (b_i...b_{i+m-1})/(c_i...c_{i+m}), B_m shifted one step right
    groups = []
    a_num, a_den = 1, arr.ci(i)
    b_num, b_den = 1, arr.ci(i + 1)
    for m in range(D - i):
        if m > 0:
            a_num *= arr.bi(i + m - 1)
            a_den *= arr.ci(i + m)
            b_num *= arr.bi(i + m)
            b_den *= arr.ci(i + m + 1)
        groups.append(Fraction(a_num, a_den) - Fraction(b_num, b_den))
    trail_num = a_num * arr.bi(D - 1)
    # a brings c_i..c_{D-1} at m = D-i-1; one more factor c_D completes it
    trail_den = a_den * arr.ci(D)
    groups.append(Fraction(trail_num, trail_den))
    return tuple(groups)


def telescoping_difference(params: DerivedParams, i: int) -> Fraction:
    """phi_{i-1} - phi_i evaluated through the telescoped expansion."""
    return params.k * sum(telescoping_terms(params, i), Fraction(0))


def resistances_from_potentials(
    phi: tuple[Fraction, ...], n: int, k: int
) -> tuple[Fraction, ...]:
    """r_j = 2*(phi_0 + ... + phi_{j-1})/(nk) for 1 <= j <= D."""
    out = []
    acc = Fraction(0)
    for value in phi:
        acc += value
        out.append(2 * acc / (n * k))
    return tuple(out)


@dataclass(frozen=True)
class PotentialProfile:
    """Potentials and everything derived from them for one array."""

    params: DerivedParams
    phi: tuple[Fraction, ...]
    resistances: tuple[Fraction, ...]
    ratio: Fraction  # rho = (phi_1 + ... + phi_{D-1}) / phi_0
    k_effective: Fraction  # r_D / r_1 = 1 + rho

    @property
    def D(self) -> int:
        return self.params.D


def compute_profile(params: DerivedParams) -> PotentialProfile:
    """Build the full profile; recursion is the reference implementation."""
    phi = compute_potentials_recursive(params)
    res = resistances_from_potentials(phi, params.n, params.k)
    rho = sum(phi[1:], Fraction(0)) / phi[0]
    return PotentialProfile(
        params=params,
        phi=phi,
        resistances=res,
        ratio=rho,
        k_effective=1 + rho,
    )


def check_resistance_cap(profile: PotentialProfile) -> tuple[Fraction, bool]:
    """The 4/k cap on the maximal resistance: returns (4/k, r_D < 4/k)."""
    bound = Fraction(4, profile.params.k)
    return bound, profile.resistances[-1] < bound


@dataclass(frozen=True)
class TailSumCheck:
    """Tail bound phi_j + ... + phi_{D-1} <= (j - 1/2) * phi_{j-1}."""

    j: int
    lhs: Fraction
    rhs: Fraction

    @property
    def holds(self) -> bool:
        return self.lhs <= self.rhs


def tail_sum_check(profile: PotentialProfile) -> TailSumCheck:
    """Evaluate the tail bound at the head/tail split index j (empty sum if j = D)."""
    j = profile.params.j
    lhs = sum(profile.phi[j:], Fraction(0))
    rhs = (j - Fraction(1, 2)) * profile.phi[j - 1]
    return TailSumCheck(j=j, lhs=lhs, rhs=rhs)


@dataclass(frozen=True)
class StepBound:
    """One per-index decay inequality phi_i < bound."""

    kind: str  # recursion_ratio | head_contraction | initial_drop
    i: int
    phi_i: Fraction
    bound: Fraction

    @property
    def holds(self) -> bool:
        return self.phi_i < self.bound


def step_inequalities(profile: PotentialProfile) -> tuple[StepBound, ...]:
    """Per-step decay bounds on the potential sequence.

    recursion_ratio: phi_i < (c_i/b_i) phi_{i-1}     for 1 <= i <= D-1
    head_contraction: phi_i < ((b_1-1)/b_1) phi_{i-1} where b_i > c_i
    initial_drop:    phi_1 < phi_0 / b_1
    Requires D >= 2 and b_1 >= 2.
    """
    arr = profile.params.array
    if arr.D < 2:
        raise ValueError("step inequalities need D >= 2")
    b1 = arr.bi(1)
    if b1 < 2:
        raise ValueError("step inequalities need b_1 >= 2")
    alpha = Fraction(b1 - 1, b1)
    out: list[StepBound] = []
    for i in range(1, arr.D):
        prev = profile.phi[i - 1]
        here = profile.phi[i]
        out.append(
            StepBound("recursion_ratio", i, here, Fraction(arr.ci(i), arr.bi(i)) * prev)
        )
        if arr.bi(i) > arr.ci(i):
            out.append(StepBound("head_contraction", i, here, alpha * prev))
        if i == 1:
            out.append(StepBound("initial_drop", i, here, prev / b1))
    return tuple(out)
