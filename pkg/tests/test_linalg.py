"""Exact matrix arithmetic, characteristic/minimal polynomials, projections."""

from __future__ import annotations

import math
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import (
    blocks_minpoly_exponents,
    jordan_assembly,
    max_diff,
    rational_spectrum_matrix,
    unimodular,
)
from pcanon.errors import (
    DegreeZero,
    EmptyInput,
    MixedFields,
    NonMonic,
    NonSplitField,
    SingularMatrix,
)
from pcanon.linalg import (
    Matrix,
    char_poly,
    companion,
    kron,
    matrix_poly,
    minpoly,
    spectral_data,
    spectral_projections,
)
from pcanon.scalar import CC, GF, QQ, Poly

# -- strategies ---------------------------------------------------------------

_small_fraction = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def _sq_matrix(n):
    return st.lists(st.lists(_small_fraction, min_size=n, max_size=n),
                    min_size=n, max_size=n).map(lambda rs: Matrix(QQ, rs))


_m3 = _sq_matrix(3)


def _det_fraction(m: Matrix) -> Fraction:
    """Independent determinant: fraction Gaussian elimination."""
    n = m.n
    rows = [list(r) for r in m.rows]
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if rows[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            det = -det
        det *= rows[c][c]
        inv = 1 / rows[c][c]
        for r in range(c + 1, n):
            f = rows[r][c] * inv
            if f:
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[c])]
    return det


# -- construction and arithmetic ----------------------------------------------


def test_constructors_golden():
    assert Matrix.identity(QQ, 2).rows == ((Fraction(1), Fraction(0)),
                                           (Fraction(0), Fraction(1)))
    assert Matrix.jordan_block(QQ, 3, 5).rows == (
        (5, 1, 0), (0, 5, 1), (0, 0, 5))
    assert Matrix.upper_toeplitz(QQ, [2, 4, 2, 3]).rows[1] == (0, 2, 4, 2)
    assert Matrix.diagonal(QQ, [1, 2]).trace == 3
    with pytest.raises(EmptyInput):
        Matrix(QQ, [])
    with pytest.raises(ValueError):
        Matrix(QQ, [[1, 2]])


def test_mixed_field_operands_rejected():
    a = Matrix.identity(QQ, 2)
    b = Matrix.identity(GF(5), 2)
    with pytest.raises(MixedFields):
        _ = a + b


@given(_m3, _m3, _m3)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * (b * c) == (a * b) * c
    assert (a * b).transpose() == b.transpose() * a.transpose()


@given(_m3)
def test_inverse_exact(a):
    if _det_fraction(a) == 0:
        with pytest.raises(SingularMatrix):
            a.inverse()
        return
    ident = Matrix.identity(QQ, a.n)
    assert a * a.inverse() == ident
    assert a.inverse() * a == ident
    assert a ** -2 == a.inverse() * a.inverse()


def test_power_binary_and_identity():
    a = Matrix(QQ, [[1, 1], [0, 1]])
    assert a ** 0 == Matrix.identity(QQ, 2)
    assert a ** 13 == Matrix(QQ, [[1, 13], [0, 1]])


def test_kron_mixed_product_identity():
    rng = random.Random(3)
    for _ in range(5):
        a = Matrix(QQ, [[rng.randint(-3, 3) for _ in range(2)] for _ in range(2)])
        b = Matrix(QQ, [[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)])
        c = Matrix(QQ, [[rng.randint(-3, 3) for _ in range(2)] for _ in range(2)])
        d = Matrix(QQ, [[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)])
        assert kron(a, b) * kron(c, d) == kron(a * c, b * d)
    assert kron(a, b).n == 6


# -- companion matrices --------------------------------------------------------


def test_companion_shape_and_polynomials():
    p = Poly(QQ, [2, -3, 1])  # X^2 - 3X + 2
    c = companion(p)
    assert c.rows == ((0, -2), (1, 3))
    assert char_poly(c) == p
    assert minpoly(c) == p
    with pytest.raises(NonMonic):
        companion(Poly(QQ, [1, 2]))
    with pytest.raises(DegreeZero):
        companion(Poly.one(QQ))


def test_companion_first_column_contracts_sequence():
    # a_n = sum_i (C^n)[i][0] * initials[i] reproduces the recurrence.
    p = Poly(QQ, [-1, -1, 1])  # X^2 - X - 1
    c = companion(p)
    fib = [0, 1]
    for n in range(2, 12):
        fib.append(fib[-1] + fib[-2])
    for n in range(12):
        cn = c ** n
        got = sum(cn.rows[i][0] * fib[i] for i in range(2))
        assert got == fib[n], n


@given(st.lists(st.integers(-3, 3), min_size=1, max_size=4))
def test_companion_minimal_polynomial_is_characteristic(lower):
    p = Poly(QQ, lower + [1])
    if p.degree < 1:
        return
    c = companion(p)
    assert minpoly(c) == p == char_poly(c)


# -- characteristic polynomial --------------------------------------------------


def test_char_poly_golden():
    assert char_poly(Matrix.diagonal(QQ, [1, 2])) == Poly(QQ, [2, -3, 1])
    assert char_poly(Matrix.jordan_block(QQ, 2, 0)) == Poly(QQ, [0, 0, 1])
    assert char_poly(Matrix(QQ, [[0, -1], [1, 0]])) == Poly(QQ, [1, 0, 1])


@given(_m3, _small_fraction)
def test_char_poly_evaluates_to_shifted_determinant(a, x):
    # p(x) = det(xI - A), checked against an independent elimination.
    p = char_poly(a)
    shifted = Matrix.diagonal(QQ, [x] * a.n) - a
    assert p.evaluate(x) == _det_fraction(shifted)


def test_char_poly_prime_field():
    f5 = GF(5)
    a = Matrix.diagonal(f5, [f5.coerce(1), f5.coerce(2)])
    assert char_poly(a) == Poly(f5, [f5.coerce(2), f5.coerce(2), f5.one])


# -- minimal polynomial ----------------------------------------------------------


def test_minpoly_knows_jordan_structure():
    rng = random.Random(11)
    for seed in range(12):
        a, blocks = rational_spectrum_matrix(
            random.Random(seed), [0, 1, 2, -1, Fraction(1, 2)])
        want = Poly.one(QQ)
        for lam, idx in sorted(blocks_minpoly_exponents(blocks).items()):
            want = want * Poly.from_roots(QQ, [lam]) ** idx
        assert minpoly(a) == want, seed
    _ = rng


def test_minpoly_with_denominators():
    a = Matrix.diagonal(QQ, [Fraction(1, 6), Fraction(1, 3)])
    assert minpoly(a) == (Poly.from_roots(QQ, [Fraction(1, 6)])
                          * Poly.from_roots(QQ, [Fraction(1, 3)]))


def test_minpoly_annihilates_and_divides_charpoly():
    for seed in range(8):
        a, _ = rational_spectrum_matrix(random.Random(100 + seed), [1, 2, 0])
        mp = minpoly(a)
        assert matrix_poly(mp, a).is_zero
        q, r = divmod(char_poly(a), mp)
        assert r.is_zero
        _ = q


def test_minpoly_prime_field():
    f2 = GF(2)
    p = Poly(f2, [f2.one, f2.one, f2.one])  # X^2 + X + 1
    assert minpoly(companion(p)) == p


def test_minpoly_numeric_rotation_and_defective():
    rot = Matrix(CC, [[0, -1], [1, 0]])
    mp = minpoly(rot)
    assert mp.degree == 2
    assert abs(mp.coeff(0) - 1) < 1e-10 and abs(mp.coeff(1)) < 1e-10
    j = Matrix.jordan_block(QQ, 3, 2).to_field(CC)
    mpj = minpoly(j)
    want = Poly.from_roots(CC, [2.0, 2.0, 2.0])
    assert all(abs(mpj.coeff(i) - want.coeff(i)) < 1e-7 for i in range(4))


# -- spectral projections ---------------------------------------------------------


def _check_projection_invariants(a: Matrix) -> None:
    sd = spectral_data(a)
    projs = sd.all_projections
    n = a.n
    total = Matrix.zeros(a.field, n)
    for p in projs:
        total = total + p
        assert p * p == p
        assert a * p == p * a
    assert total == Matrix.identity(a.field, n)
    for i, p in enumerate(projs):
        for q in projs[i + 1:]:
            assert (p * q).is_zero and (q * p).is_zero
    if sd.t0:
        assert (a ** sd.t0 * sd.zero_projection).is_zero
    for comp in sd.components:
        shifted = a - Matrix.diagonal(a.field, [comp.value] * n)
        assert (shifted ** comp.index * comp.projection).is_zero


def test_spectral_invariants_exact_rational():
    for seed in range(10):
        a, _ = rational_spectrum_matrix(
            random.Random(200 + seed), [0, 1, 2, -1])
        _check_projection_invariants(a)


def test_spectral_data_structure_golden():
    a = jordan_assembly(QQ, [(2, Fraction(0)), (1, Fraction(2)),
                             (2, Fraction(2))])
    sd = spectral_data(a)
    assert sd.t0 == 2
    assert [(c.value, c.index) for c in sd.components] == [(Fraction(2), 2)]
    assert sd.minimal_polynomial == (Poly.x(QQ) ** 2
                                     * Poly.from_roots(QQ, [2, 2]))


def test_spectral_projections_from_pairs():
    a = Matrix.diagonal(QQ, [1, 2, 2])
    pi1, pi2 = spectral_projections(a, [(Fraction(1), 1), (Fraction(2), 1)])
    assert pi1 == Matrix.diagonal(QQ, [1, 0, 0])
    assert pi2 == Matrix.diagonal(QQ, [0, 1, 1])


def test_spectral_data_raises_when_spectrum_is_not_rational():
    with pytest.raises(NonSplitField):
        spectral_data(Matrix(QQ, [[0, -1], [1, 0]]))


def test_numeric_spectrum_conjugate_pair(spiral_3x3):
    sd = spectral_data(spiral_3x3)
    assert sd.t0 == 1
    vals = sorted((c.value for c in sd.components),
                  key=lambda z: (z.real, z.imag))
    want = sorted((2 * complex(math.cos(math.pi / 6), -math.sin(math.pi / 6)),
                   2 * complex(math.cos(math.pi / 6), math.sin(math.pi / 6))),
                  key=lambda z: (z.real, z.imag))
    assert all(abs(g - w) < 1e-8 for g, w in zip(vals, want))
    ident = Matrix.identity(CC, 3)
    total = sd.zero_projection
    for c in sd.components:
        total = total + c.projection
    assert max_diff(total, ident) < 1e-9


def test_numeric_nilpotent_index():
    j = Matrix.jordan_block(QQ, 4, 0).to_field(CC)
    sd = spectral_data(j)
    assert sd.t0 == 4 and not sd.components


def test_unimodular_builder_has_unit_determinant():
    for seed in range(6):
        m = unimodular(random.Random(seed), 4)
        assert _det_fraction(m) in (1, -1)
