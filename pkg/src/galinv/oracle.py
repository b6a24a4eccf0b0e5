"""Brute-force verification path, independent of the symbol calculus.

Everything here applies operators to amplitude-times-exponential waves by
literal term-by-term differentiation and never consults `symbol_of`.
That independence is the point: identities checked both here and through
the symbol route are confirmed by two code paths that share no
intermediate machinery.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from . import universe
from .actions import boost_phase_poly
from .gaussrat import GaussianRational
from .lpdo import LPDO
from .multipoly import MultiPoly
from .waves import ExpWave, plane_wave

DEFAULT_SEED = 94281


@dataclass(frozen=True)
class SamplePlan:
    """Deterministic random-rational sampling: seed, count, coordinate bound."""

    seed: int = DEFAULT_SEED
    count: int = 32
    bound: int = 10

    def __post_init__(self) -> None:
        if self.count < 1 or self.bound < 1:
            raise ValueError("count and bound must be positive")


def random_rational(rng: random.Random, bound: int) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def differentiate_expwave(
    wave: ExpWave, time_order: int = 0, space_orders: Sequence[int] = ()
) -> ExpWave:
    """Exact dt^j dx^alpha of a wave by repeated chain-rule steps."""
    out = wave
    for _ in range(time_order):
        out = out.differentiate(universe.TIME)
    for a, k in enumerate(space_orders, start=1):
        for _ in range(k):
            out = out.differentiate(universe.space(a))
    return out


def apply_lpdo(op: LPDO, wave: ExpWave) -> ExpWave:
    """Apply an operator to a wave term by term, never touching symbols."""
    names = wave.variables
    total = MultiPoly.zero(names)
    for (j, alpha), poly in op.coeffs.items():
        piece = differentiate_expwave(wave, j, alpha)
        total = total + poly.extend(names) * piece.amplitude
    return ExpWave(total, wave.phase)


def boost_commutator_defect(
    op: LPDO,
    lam: Fraction | int,
    v: Sequence[Fraction | int],
    c: Fraction | int = 0,
) -> MultiPoly:
    """Amplitude of  e^{i theta_v} G_v* L e  minus  L e^{i theta_v} G_v* e.

    Both sides are computed on the plane wave with symbolic frequency by
    literal differentiation; the result is the zero polynomial exactly
    when the gauged boost commutes with the operator on all plane waves.
    """
    n = op.n
    if len(v) != n:
        raise ValueError(f"boost has {len(v)} components, expected {n}")
    lam = Fraction(lam)
    names = universe.symbol_vars(n)
    theta = (
        boost_phase_poly(lam, c, n, v=v).extend(names)
        if lam
        else MultiPoly.const(names, Fraction(c))
    )
    pullback: dict[str, MultiPoly] = {}
    t_var = MultiPoly.var(names, universe.TIME)
    for a in range(1, n + 1):
        name = universe.space(a)
        pullback[name] = MultiPoly.var(names, name) - t_var * Fraction(v[a - 1])

    wave = plane_wave(n)
    lhs = apply_lpdo(op, wave).substitute(pullback).with_phase_added(theta)
    rhs = apply_lpdo(op, wave.substitute(pullback).with_phase_added(theta))
    if lhs.phase != rhs.phase:
        raise AssertionError("the two sides lost phase alignment")
    return lhs.amplitude - rhs.amplitude


@dataclass
class IdentityVerdict:
    """Outcome of a sampled polynomial-identity check."""

    all_equal: bool
    samples: int
    seed: int
    point: dict[str, Fraction] | None = None
    left_value: GaussianRational | None = None
    right_value: GaussianRational | None = None


def sampled_identity_check(
    left: MultiPoly, right: MultiPoly, plan: SamplePlan | None = None
) -> IdentityVerdict:
    """Evaluate two polynomials at seeded random rational points, exactly.

    Reports the first discrepancy, or that all samples agreed.  This is a
    probabilistic cross-check of symbolic equality; it never replaces the
    exact comparison, it guards it.
    """
    if left.variables != right.variables:
        raise ValueError("polynomials live over different universes")
    plan = plan or SamplePlan()
    rng = random.Random(plan.seed)
    for k in range(plan.count):
        point = {
            name: random_rational(rng, plan.bound) for name in left.variables
        }
        lv = left.evaluate(point)
        rv = right.evaluate(point)
        if lv != rv:
            return IdentityVerdict(
                False, k + 1, plan.seed, point=point, left_value=lv, right_value=rv
            )
    return IdentityVerdict(True, plan.count, plan.seed)
