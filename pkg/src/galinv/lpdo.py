"""Linear partial differential operators and their plane-wave symbols.

An `LPDO` is a finite sum  sum_{j,alpha} a_{j,alpha}(t,x) dt^j dx^alpha
with polynomial coefficients; its key invariant is that the effective
order is recomputed on construction, so some coefficient of top order is
always nonzero.  The symbol p(t,x,tau,xi) is what the operator produces
when applied to the plane wave exp(i(tau*t + xi.x)):

    L e = p * e,   p = sum a_{j,alpha} (i*tau)^j (i*xi)^alpha,

and the operator is recovered from p by reading tau^j xi^alpha monomials
back into derivatives.  The two maps are exact inverses here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from . import universe
from .gaussrat import GaussianLike, GaussianRational, as_gaussian, i_power
from .multipoly import MultiPoly
from .waves import ExpWave, plane_wave, plane_wave_at

DerivKey = tuple[int, tuple[int, ...]]

_SCALARS = (int, Fraction, GaussianRational)


class LPDO:
    __slots__ = ("n", "order", "coeffs")

    def __init__(self, n: int, coeffs: Mapping[DerivKey, MultiPoly | GaussianLike]):
        if n < 1:
            raise ValueError("spatial dimension must be at least 1")
        names = universe.coeff_vars(n)
        cleaned: dict[DerivKey, MultiPoly] = {}
        for key, raw in coeffs.items():
            j, alpha = key
            alpha = tuple(alpha)
            if j < 0 or len(alpha) != n or any(a < 0 for a in alpha):
                raise ValueError(f"bad derivative key {key} for dimension {n}")
            poly = raw if isinstance(raw, MultiPoly) else MultiPoly.const(names, raw)
            if poly.variables != names:
                raise ValueError(
                    f"coefficient universe {poly.variables} is not {names}"
                )
            if poly.is_zero:
                continue
            cleaned[(j, alpha)] = poly
        if not cleaned:
            raise ValueError(
                "the zero operator is outside the class: no top-order coefficient"
            )
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "coeffs", cleaned)
        object.__setattr__(
            self, "order", max(j + sum(alpha) for j, alpha in cleaned)
        )

    def __setattr__(self, name, value):
        raise AttributeError("LPDO is immutable")

    # ------------------------------------------------------------------
    # builders

    @classmethod
    def identity(cls, n: int) -> "LPDO":
        return cls(n, {(0, (0,) * n): 1})

    @classmethod
    def time_derivative(cls, n: int, j: int = 1) -> "LPDO":
        return cls(n, {(j, (0,) * n): 1})

    @classmethod
    def space_derivative(cls, n: int, a: int, k: int = 1) -> "LPDO":
        if not 1 <= a <= n:
            raise ValueError(f"spatial index {a} outside 1..{n}")
        alpha = tuple(k if b == a else 0 for b in range(1, n + 1))
        return cls(n, {(0, alpha): 1})

    @classmethod
    def laplacian(cls, n: int) -> "LPDO":
        coeffs: dict[DerivKey, int] = {}
        for a in range(1, n + 1):
            alpha = tuple(2 if b == a else 0 for b in range(1, n + 1))
            coeffs[(0, alpha)] = 1
        return cls(n, coeffs)

    @classmethod
    def schrodinger_factor(cls, n: int, lam: Fraction | int) -> "LPDO":
        """2i*lam*dt + Laplacian, the factor the classification singles out."""
        coeffs: dict[DerivKey, GaussianRational] = {
            key: as_gaussian(value)
            for key, value in cls.laplacian(n).constant_table().items()
        }
        lam = Fraction(lam)
        if lam:
            coeffs[(1, (0,) * n)] = GaussianRational(Fraction(0), 2 * lam)
        return cls(n, coeffs)

    # ------------------------------------------------------------------
    # accessors

    @property
    def is_constant_coefficient(self) -> bool:
        return all(poly.is_constant for poly in self.coeffs.values())

    def coefficient(self, j: int, alpha: Sequence[int]) -> MultiPoly:
        key = (j, tuple(alpha))
        poly = self.coeffs.get(key)
        if poly is None:
            return MultiPoly.zero(universe.coeff_vars(self.n))
        return poly

    def constant_table(self) -> dict[DerivKey, GaussianRational]:
        """The (j, alpha) -> constant map of a constant-coefficient operator."""
        if not self.is_constant_coefficient:
            raise ValueError("operator has variable coefficients")
        return {key: poly.constant_value() for key, poly in self.coeffs.items()}

    # ------------------------------------------------------------------
    # algebra

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LPDO):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    __hash__ = None

    def __add__(self, other: "LPDO") -> "LPDO":
        if not isinstance(other, LPDO):
            return NotImplemented
        if other.n != self.n:
            raise ValueError("operators live in different dimensions")
        merged: dict[DerivKey, MultiPoly] = dict(self.coeffs)
        for key, poly in other.coeffs.items():
            merged[key] = merged[key] + poly if key in merged else poly
        return LPDO(self.n, merged)

    def scaled(self, factor: GaussianLike) -> "LPDO":
        return LPDO(
            self.n, {key: poly * as_gaussian(factor) for key, poly in self.coeffs.items()}
        )

    def __rmul__(self, factor):
        if isinstance(factor, _SCALARS):
            return self.scaled(factor)
        return NotImplemented

    def __repr__(self) -> str:
        parts = ", ".join(
            f"dt^{j} dx^{alpha}: {poly}" for (j, alpha), poly in sorted(self.coeffs.items())
        )
        return f"LPDO(n={self.n}, order={self.order}, {{{parts}}})"


@dataclass(frozen=True)
class Symbol:
    """The plane-wave symbol of an operator, with its dimension and order."""

    poly: MultiPoly
    n: int
    order: int

    def tau_slices(self) -> dict[int, MultiPoly]:
        """Coefficient polynomials of tau^j (tau removed, universe kept)."""
        return self.poly.split_by(universe.FREQ_TIME)


def symbol_of(op: LPDO) -> Symbol:
    """p = sum a_{j,alpha}(t,x) (i*tau)^j (i*xi)^alpha, exactly."""
    names = universe.symbol_vars(op.n)
    n = op.n
    terms = {}
    for (j, alpha), poly in op.coeffs.items():
        scale = i_power(j + sum(alpha))
        for exps, coeff in poly.terms.items():
            terms[exps + (j,) + alpha] = coeff * scale
    return Symbol(MultiPoly(names, terms), n, op.order)


def operator_of(symbol: Symbol) -> LPDO:
    """Inverse of `symbol_of`: read tau/xi monomials back into derivatives."""
    n = symbol.n
    names = universe.coeff_vars(n)
    buckets: dict[DerivKey, dict] = {}
    for exps, coeff in symbol.poly.terms.items():
        tx, j, alpha = exps[: n + 1], exps[n + 1], exps[n + 2 :]
        buckets.setdefault((j, alpha), {})[tx] = coeff * i_power(-(j + sum(alpha)))
    return LPDO(n, {key: MultiPoly(names, terms) for key, terms in buckets.items()})


def apply_plane_wave(
    op: LPDO,
    tau: Fraction | int | None = None,
    xi: Sequence[Fraction | int] | None = None,
) -> ExpWave:
    """Apply an operator to a plane wave, returning amplitude * exp(i*phase).

    With no frequency given the result keeps tau and xi symbolic: the
    amplitude is the full symbol.  With a concrete rational frequency the
    amplitude is the symbol evaluated there.
    """
    symbol = symbol_of(op)
    if tau is None and xi is None:
        wave = plane_wave(op.n)
        return ExpWave(symbol.poly, wave.phase)
    if tau is None or xi is None:
        raise ValueError("give both tau and xi, or neither")
    bindings: dict[str, Fraction] = {universe.FREQ_TIME: Fraction(tau)}
    for a, value in enumerate(xi, start=1):
        bindings[universe.freq_space(a)] = Fraction(value)
    wave = plane_wave_at(op.n, tau, xi)
    return ExpWave(symbol.poly.substitute(bindings), wave.phase)


def compose_const(first: LPDO, second: LPDO) -> LPDO:
    """Composition of constant-coefficient operators; symbols multiply."""
    if first.n != second.n:
        raise ValueError("operators live in different dimensions")
    if not (first.is_constant_coefficient and second.is_constant_coefficient):
        raise ValueError("composition requires constant coefficients")
    table: dict[DerivKey, GaussianRational] = {}
    for (j1, a1), c1 in first.constant_table().items():
        for (j2, a2), c2 in second.constant_table().items():
            key = (j1 + j2, tuple(x + y for x, y in zip(a1, a2)))
            table[key] = table.get(key, GaussianRational()) + c1 * c2
    return LPDO(first.n, table)


def linear_phase(
    n: int,
    constant: GaussianLike = 0,
    time_coeff: GaussianLike = 0,
    space_coeffs: Sequence[GaussianLike] = (),
) -> MultiPoly:
    """The degree-one phase  constant + time_coeff*t + sum space_coeffs.x."""
    names = universe.coeff_vars(n)
    phi = MultiPoly.const(names, constant)
    phi = phi + MultiPoly.var(names, universe.TIME) * as_gaussian(time_coeff)
    for a, b in enumerate(space_coeffs, start=1):
        phi = phi + MultiPoly.var(names, universe.space(a)) * as_gaussian(b)
    return phi


def conjugate_linear_phase(op: LPDO, phi: MultiPoly) -> LPDO:
    """exp(i*phi) L exp(-i*phi) for a degree-one phase phi(t, x).

    At the symbol level the conjugation shifts frequencies:
    tau -> tau - gamma and xi_a -> xi_a - b_a where
    phi = c0 + gamma*t + b.x.  The constant c0 cancels and is ignored.
    Quadratic or higher phases are rejected; those are handled only by the
    boost machinery.
    """
    if not op.is_constant_coefficient:
        raise ValueError("phase conjugation is defined for constant coefficients")
    names = universe.coeff_vars(op.n)
    if phi.variables != names:
        raise ValueError(f"phase universe {phi.variables} is not {names}")
    if phi.total_degree() > 1:
        raise ValueError("phase must have degree at most 1 in (t, x)")
    gamma = GaussianRational()
    b = [GaussianRational()] * op.n
    for exps, coeff in phi.terms.items():
        if not any(exps):
            continue
        if exps[0] == 1:
            gamma = coeff
        else:
            b[exps.index(1) - 1] = coeff
    sym = symbol_of(op)
    sym_names = sym.poly.variables
    bindings: dict[str, MultiPoly] = {
        universe.FREQ_TIME: MultiPoly.var(sym_names, universe.FREQ_TIME) - gamma
    }
    for a in range(1, op.n + 1):
        name = universe.freq_space(a)
        bindings[name] = MultiPoly.var(sym_names, name) - b[a - 1]
    shifted = sym.poly.substitute(bindings)
    return operator_of(Symbol(shifted, op.n, op.order))
