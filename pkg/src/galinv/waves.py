"""Exponential waves: amplitude * exp(i * phase) with polynomial data.

An `ExpWave` holds a polynomial amplitude A and a real polynomial phase
phi over one shared universe and stands for the function A * exp(i*phi).
The family is closed under differentiation,

    d(A e^{i phi}) = (dA + i A dphi) e^{i phi},

which is the whole point: applying a differential operator to a wave
never leaves the family, so operator identities on plane waves become
exact polynomial identities on amplitudes.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from .gaussrat import GaussianRational, I_UNIT
from .multipoly import MultiPoly
from . import universe


class ExpWave:
    __slots__ = ("amplitude", "phase")

    def __init__(self, amplitude: MultiPoly, phase: MultiPoly):
        if amplitude.variables != phase.variables:
            raise ValueError("amplitude and phase must share a universe")
        for coeff in phase.terms.values():
            if coeff.im != 0:
                raise ValueError("phase polynomials must be real-valued")
        object.__setattr__(self, "amplitude", amplitude)
        object.__setattr__(self, "phase", phase)

    def __setattr__(self, name, value):
        raise AttributeError("ExpWave is immutable")

    @property
    def variables(self) -> tuple[str, ...]:
        return self.amplitude.variables

    def differentiate(self, name: str) -> "ExpWave":
        """One exact derivative: (dA + i*A*dphi) * exp(i*phi)."""
        new_amplitude = self.amplitude.partial(name) + (
            self.amplitude * self.phase.partial(name) * I_UNIT
        )
        return ExpWave(new_amplitude, self.phase)

    def substitute(self, bindings: Mapping[str, MultiPoly | int | Fraction]) -> "ExpWave":
        """Point-transformation pull-back: substitute in amplitude and phase."""
        return ExpWave(
            self.amplitude.substitute(bindings), self.phase.substitute(bindings)
        )

    def with_phase_added(self, extra: MultiPoly) -> "ExpWave":
        """Multiply by exp(i * extra)."""
        return ExpWave(self.amplitude, self.phase + extra)

    def scaled(self, factor) -> "ExpWave":
        return ExpWave(self.amplitude * factor, self.phase)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExpWave):
            return NotImplemented
        return self.amplitude == other.amplitude and self.phase == other.phase

    __hash__ = None

    def __repr__(self) -> str:
        return f"ExpWave(amplitude={self.amplitude}, phase={self.phase})"


def plane_wave(n: int) -> ExpWave:
    """exp(i(tau*t + xi.x)) with symbolic frequency, over the symbol universe."""
    names = universe.symbol_vars(n)
    phase = MultiPoly.var(names, universe.FREQ_TIME) * MultiPoly.var(names, universe.TIME)
    for a in range(1, n + 1):
        phase = phase + MultiPoly.var(names, universe.freq_space(a)) * MultiPoly.var(
            names, universe.space(a)
        )
    return ExpWave(MultiPoly.const(names, 1), phase)


def plane_wave_at(n: int, tau: Fraction | int, xi: Sequence[Fraction | int]) -> ExpWave:
    """exp(i(tau*t + xi.x)) at a concrete rational frequency."""
    if len(xi) != n:
        raise ValueError(f"frequency has {len(xi)} spatial components, expected {n}")
    names = universe.symbol_vars(n)
    phase = MultiPoly.var(names, universe.TIME) * Fraction(tau)
    for a, value in enumerate(xi, start=1):
        phase = phase + MultiPoly.var(names, universe.space(a)) * Fraction(value)
    return ExpWave(MultiPoly.const(names, 1), phase)
