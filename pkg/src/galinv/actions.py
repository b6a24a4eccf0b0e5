"""Galilei group elements acting on operators by conjugation.

Space-time translations, space rotations, and gauged boosts each act on
an operator; the conventions here are fixed so that an operator is
invariant under a group element exactly when it is a fixed point of the
corresponding conjugation.  Boosts come with their gauge phase

    theta_v(t, x) = c + lam * v.x - (lam/2) * t * |v|^2,

the unique quadratic family (for lam != 0) under which the Schrodinger
factor commutes with the boosted pull-back; for lam = 0 the phase is
x-independent and drops out of every plane-wave computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import universe
from .lpdo import LPDO, Symbol, operator_of, symbol_of
from .matrices import OrthogonalMatrix
from .multipoly import MultiPoly

QUADRATIC = "quadratic"
X_INDEPENDENT = "x-independent"


@dataclass(frozen=True)
class Translation:
    """A space-time shift by (s, y)."""

    s: Fraction
    y: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "s", Fraction(self.s))
        object.__setattr__(self, "y", tuple(Fraction(c) for c in self.y))

    @property
    def n(self) -> int:
        return len(self.y)


def conj_translation(op: LPDO, shift: Translation) -> LPDO:
    """Translation conjugation: every coefficient a(t,x) becomes a(t+s, x+y).

    Fixed points are exactly the translation-invariant operators, i.e.
    the ones with constant coefficients.
    """
    if shift.n != op.n:
        raise ValueError(f"shift dimension {shift.n} does not match operator {op.n}")
    names = universe.coeff_vars(op.n)
    bindings: dict[str, MultiPoly] = {
        universe.TIME: MultiPoly.var(names, universe.TIME) + shift.s
    }
    for a, y in enumerate(shift.y, start=1):
        name = universe.space(a)
        bindings[name] = MultiPoly.var(names, name) + y
    return LPDO(op.n, {key: poly.substitute(bindings) for key, poly in op.coeffs.items()})


def rotation_symbol_bindings(
    n: int, rot: OrthogonalMatrix, variables: Sequence[str]
) -> dict[str, MultiPoly]:
    """Substitutions sending xi to R^T xi, i.e. xi_a -> sum_b R[b][a] xi_b."""
    bindings: dict[str, MultiPoly] = {}
    for a in range(1, n + 1):
        acc = MultiPoly.zero(variables)
        for b in range(1, n + 1):
            acc = acc + MultiPoly.var(variables, universe.freq_space(b)) * rot.entry(
                b - 1, a - 1
            )
        bindings[universe.freq_space(a)] = acc
    return bindings


def conj_rotation(op: LPDO, rot: OrthogonalMatrix) -> LPDO:
    """Rotation conjugation at the symbol level: p(tau, xi) -> p(tau, R^T xi)."""
    if rot.n != op.n:
        raise ValueError(f"rotation size {rot.n} does not match operator {op.n}")
    if not op.is_constant_coefficient:
        raise ValueError("rotation conjugation is restricted to constant coefficients")
    sym = symbol_of(op)
    bindings = rotation_symbol_bindings(op.n, rot, sym.poly.variables)
    return operator_of(Symbol(sym.poly.substitute(bindings), op.n, op.order))


@dataclass(frozen=True)
class BoostedFrequency:
    """Image of a plane-wave frequency under a gauged boost.

    The transported wave is exp(i * phase_const) times the plane wave at
    the new frequency (tau - xi.v - (lam/2)|v|^2, xi + lam*v).
    """

    tau: MultiPoly
    xi: tuple[MultiPoly, ...]
    phase_const: Fraction


def boosted_frequency(
    n: int,
    lam: Fraction | int,
    v: Sequence[Fraction | int] | None = None,
    tau: Fraction | int | None = None,
    xi: Sequence[Fraction | int] | None = None,
    c: Fraction | int = 0,
    variables: Sequence[str] | None = None,
) -> BoostedFrequency:
    """Frequency transport law of the gauged boost.

    Components left as None stay symbolic; the result is a pair of
    polynomials over the boost universe (or `variables` if given).
    """
    lam = Fraction(lam)
    names = tuple(variables) if variables is not None else universe.boost_vars(n)

    def value_of(name: str, given) -> MultiPoly:
        if given is None:
            return MultiPoly.var(names, name)
        return MultiPoly.const(names, Fraction(given))

    tau_p = value_of(universe.FREQ_TIME, tau)
    xi_p = [
        value_of(universe.freq_space(a), None if xi is None else xi[a - 1])
        for a in range(1, n + 1)
    ]
    v_p = [
        value_of(universe.boost(a), None if v is None else v[a - 1])
        for a in range(1, n + 1)
    ]
    dot = MultiPoly.zero(names)
    speed2 = MultiPoly.zero(names)
    for xa, va in zip(xi_p, v_p):
        dot = dot + xa * va
        speed2 = speed2 + va * va
    new_tau = tau_p - dot - speed2 * Fraction(lam, 2)
    new_xi = tuple(xa + va * lam for xa, va in zip(xi_p, v_p))
    return BoostedFrequency(new_tau, new_xi, Fraction(c))


def conj_boost_gauge(
    op: LPDO, lam: Fraction | int, v: Sequence[Fraction | int] | None = None
) -> MultiPoly:
    """Symbol of the boost-and-gauge conjugated operator, q(tau, xi, v).

    q is the symbol composed with the boosted frequency; the operator is
    invariant under the gauged boosts for this lam exactly when
    q - symbol is the zero polynomial in (tau, xi, v).  With lam = 0 this
    degenerates to the pure boost pull-back q = p(tau - xi.v, xi).
    """
    if not op.is_constant_coefficient:
        raise ValueError("boost conjugation is restricted to constant coefficients")
    names = universe.boost_vars(op.n)
    moved = boosted_frequency(op.n, lam, v=v, variables=names)
    bindings: dict[str, MultiPoly] = {universe.FREQ_TIME: moved.tau}
    for a in range(1, op.n + 1):
        bindings[universe.freq_space(a)] = moved.xi[a - 1]
    return symbol_of(op).poly.extend(names).substitute(bindings)


@dataclass(frozen=True)
class GaugePhase:
    """The gauge phase family attached to boosts.

    kind "quadratic" stands for c + lam*v.x - (lam/2)*t*|v|^2 with
    lam != 0; kind "x-independent" marks the lam = 0 family, where any
    phase depending on t alone works and no canonical polynomial exists.
    """

    kind: str
    lam: Fraction = Fraction(0)
    c: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "lam", Fraction(self.lam))
        object.__setattr__(self, "c", Fraction(self.c))
        if self.kind not in (QUADRATIC, X_INDEPENDENT):
            raise ValueError(f"unknown phase kind {self.kind!r}")
        if self.kind == QUADRATIC and self.lam == 0:
            raise ValueError("the quadratic phase family requires lam != 0")
        if self.kind == X_INDEPENDENT and self.lam != 0:
            raise ValueError("the x-independent family is the lam = 0 case")


def gauge_phase(lam: Fraction | int, c: Fraction | int = 0) -> GaugePhase:
    lam = Fraction(lam)
    if lam == 0:
        return GaugePhase(X_INDEPENDENT, 0, Fraction(c))
    return GaugePhase(QUADRATIC, lam, Fraction(c))


def boost_phase_poly(
    lam: Fraction | int,
    c: Fraction | int,
    n: int,
    v: Sequence[Fraction | int] | None = None,
    variables: Sequence[str] | None = None,
) -> MultiPoly:
    """The quadratic phase c + lam*v.x - (lam/2)*t*|v|^2 as a polynomial.

    With concrete v the result lives over (t, x); with symbolic v over
    (t, x, v).  All coefficients are real by construction.
    """
    lam = Fraction(lam)
    if lam == 0:
        raise ValueError("lam = 0 phases are x-independent and have no canonical form")
    if variables is not None:
        names = tuple(variables)
    elif v is None:
        names = universe.phase_vars(n)
    else:
        names = universe.coeff_vars(n)

    def v_comp(a: int) -> MultiPoly:
        if v is None:
            return MultiPoly.var(names, universe.boost(a))
        return MultiPoly.const(names, Fraction(v[a - 1]))

    theta = MultiPoly.const(names, Fraction(c))
    speed2 = MultiPoly.zero(names)
    for a in range(1, n + 1):
        va = v_comp(a)
        theta = theta + MultiPoly.var(names, universe.space(a)) * va * lam
        speed2 = speed2 + va * va
    theta = theta - MultiPoly.var(names, universe.TIME) * speed2 * Fraction(lam, 2)
    return theta
