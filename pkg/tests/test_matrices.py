"""Exact orthogonal matrices: Cayley transform and signed permutations."""

from fractions import Fraction

import pytest

from galinv import (
    OrthogonalMatrix,
    RationalMatrix,
    all_signed_permutations,
    cayley_orthogonal,
    reflection,
    sample_cayley_rotations,
    signed_permutation,
)


def F(p, q=1):
    return Fraction(p, q)


def test_cayley_known_2x2():
    a = RationalMatrix(((F(0), F(1, 2)), (F(-1, 2), F(0))))
    r = cayley_orthogonal(a)
    assert r.matrix.entries == (
        (F(3, 5), F(-4, 5)),
        (F(4, 5), F(3, 5)),
    )


def test_cayley_zero_is_identity():
    a = RationalMatrix(((F(0), F(0)), (F(0), F(0))))
    assert cayley_orthogonal(a).matrix == RationalMatrix.identity(2)


def test_cayley_3x3_block():
    rows = [[F(0)] * 3 for _ in range(3)]
    rows[0][1] = F(1)
    rows[1][0] = F(-1)
    r = cayley_orthogonal(RationalMatrix(tuple(tuple(row) for row in rows)))
    assert r.entry(0, 0) == 0 and r.entry(0, 1) == -1
    assert r.entry(1, 0) == 1 and r.entry(1, 1) == 0
    assert r.entry(2, 2) == 1


def test_cayley_rejects_non_skew():
    with pytest.raises(ValueError):
        cayley_orthogonal(RationalMatrix(((F(1), F(0)), (F(0), F(1)))))


def test_signed_permutation_identity():
    r = signed_permutation((1, 2, 3), (1, 1, 1))
    assert r.matrix == RationalMatrix.identity(3)


def test_signed_permutation_o1_reflection():
    r = signed_permutation((1,), (-1,))
    assert r.matrix.entries == ((F(-1),),)


def test_signed_permutation_swap_with_sign():
    r = signed_permutation((2, 1), (1, -1))
    assert r.matrix.transpose() * r.matrix == RationalMatrix.identity(2)
    assert r.matrix.apply((F(1), F(0))) == (F(0), F(1))
    assert r.matrix.apply((F(0), F(1))) == (F(-1), F(0))


def test_signed_permutation_rejects_bad_input():
    with pytest.raises(ValueError):
        signed_permutation((1, 1), (1, 1))
    with pytest.raises(ValueError):
        signed_permutation((1, 2), (2, 1))


def test_orthogonality_verified_on_construction():
    with pytest.raises(ValueError):
        OrthogonalMatrix(RationalMatrix(((F(1), F(1)), (F(0), F(1)))))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_all_generated_matrices_are_exactly_orthogonal(n):
    identity = RationalMatrix.identity(n)
    pool = all_signed_permutations(n) + sample_cayley_rotations(n, 20, seed=7)
    assert len(all_signed_permutations(n)) == [2, 8, 48][n - 1]
    for r in pool:
        assert r.matrix.transpose() * r.matrix == identity
        assert r.matrix * r.matrix.transpose() == identity


def test_reflection_flips_one_axis():
    r = reflection(3, 2)
    assert r.matrix.apply((F(1), F(1), F(1))) == (F(1), F(-1), F(1))


def test_inverse_roundtrip():
    m = RationalMatrix(((F(2), F(1)), (F(1), F(1))))
    assert m * m.inverse() == RationalMatrix.identity(2)
    with pytest.raises(ValueError):
        RationalMatrix(((F(1), F(1)), (F(1), F(1)))).inverse()
