"""Shared helpers: seeded random values, operators, and a small corpus."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from galinv import LPDO, GaussianRational, MultiPoly
from galinv import universe


def random_fraction(rng: random.Random, bound: int = 5) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_gaussian(rng: random.Random, bound: int = 5) -> GaussianRational:
    return GaussianRational(random_fraction(rng, bound), random_fraction(rng, bound))


def random_poly(
    rng: random.Random,
    variables: tuple[str, ...],
    max_terms: int = 4,
    max_degree: int = 3,
) -> MultiPoly:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        exps = [0] * len(variables)
        budget = rng.randint(0, max_degree)
        for _ in range(budget):
            exps[rng.randrange(len(variables))] += 1
        terms[tuple(exps)] = random_gaussian(rng)
    return MultiPoly(variables, terms)


def random_keys(rng: random.Random, n: int, order: int) -> list[tuple[int, tuple[int, ...]]]:
    """A few derivative keys of order <= `order`, at least one at the top."""

    def key_of_order(total: int) -> tuple[int, tuple[int, ...]]:
        j = rng.randint(0, total)
        alpha = [0] * n
        for _ in range(total - j):
            alpha[rng.randrange(n)] += 1
        return (j, tuple(alpha))

    keys = {key_of_order(order)}
    for _ in range(rng.randint(0, 4)):
        keys.add(key_of_order(rng.randint(0, order)))
    return sorted(keys)


def random_constant_lpdo(rng: random.Random, n: int, order: int) -> LPDO:
    coeffs = {}
    keys = random_keys(rng, n, order)
    for key in keys:
        value = random_gaussian(rng)
        while key[0] + sum(key[1]) == order and not value:
            value = random_gaussian(rng)
        coeffs[key] = value
    return LPDO(n, coeffs)


def random_variable_lpdo(rng: random.Random, n: int, order: int) -> LPDO:
    """Random operator with at least one genuinely non-constant coefficient."""
    names = universe.coeff_vars(n)
    coeffs = {}
    for key in random_keys(rng, n, order):
        coeffs[key] = random_poly(rng, names)
    top = max(coeffs, key=lambda k: k[0] + sum(k[1]))
    while coeffs[top].is_zero:
        coeffs[top] = random_poly(rng, names)
    moving = next((k for k, p in coeffs.items() if not p.is_constant), None)
    if moving is None:
        tvar = MultiPoly.var(names, universe.TIME)
        coeffs[top] = coeffs[top] + tvar
        if coeffs[top].is_constant:  # the addition cancelled; force it
            coeffs[top] = coeffs[top] + tvar * 2
    return LPDO(n, coeffs)


@pytest.fixture
def corpus() -> dict[str, LPDO]:
    """Named constant-coefficient operators used across the suite."""
    ops = {
        "schrodinger-1": LPDO.schrodinger_factor(1, 1),
        "schrodinger-2": LPDO.schrodinger_factor(2, 1),
        "schrodinger-3": LPDO.schrodinger_factor(3, 1),
        "schrodinger-squared": None,  # filled below
        "heat": LPDO.time_derivative(2) + LPDO.laplacian(2).scaled(-1),
        "wave": LPDO.time_derivative(2, 2) + LPDO.laplacian(2).scaled(-1),
        "laplacian": LPDO.laplacian(2),
        "laplacian-shifted": LPDO.laplacian(2) + LPDO.identity(2).scaled(3),
        "identity": LPDO.identity(2),
        "dt": LPDO.time_derivative(2),
        "dx1": LPDO.space_derivative(2, 1),
        "mixed": None,
    }
    from galinv import compose_const

    s2 = ops["schrodinger-2"]
    ops["schrodinger-squared"] = compose_const(s2, s2)
    ops["mixed"] = compose_const(
        LPDO.space_derivative(2, 1), LPDO.space_derivative(2, 2)
    )
    return ops
