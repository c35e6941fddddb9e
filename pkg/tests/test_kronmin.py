"""Minimal polynomials of Kronecker products: symbolic route vs direct."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from functools import reduce

import pytest

from helpers import jordan_assembly
from pcanon.errors import (
    EmptyInput,
    MixedFields,
    NonMonic,
    NonSplitField,
    OrderTooLarge,
)
from pcanon.kronmin import (
    EigSpec,
    eig_spec_of_matrix,
    eig_spec_of_poly,
    kron_minpoly_direct,
    kron_minpoly_symbolic,
    lrs_product_poly,
)
from pcanon.linalg import Matrix, companion, kron, minpoly
from pcanon.scalar import CC, GF, QQ, Poly


def _jordan(field, size, lam):
    return Matrix.jordan_block(field, size, lam)


def test_unipotent_pair_is_additive_over_q():
    for s in range(1, 7):
        for t in range(1, 7):
            a, b = _jordan(QQ, s, 1), _jordan(QQ, t, 1)
            p = kron_minpoly_symbolic([eig_spec_of_matrix(a),
                                       eig_spec_of_matrix(b)])
            assert p == Poly.from_roots(QQ, [1] * (s + t - 1)), (s, t)
            assert p == kron_minpoly_direct([a, b]), (s, t)


def test_prime_characteristic_pairs_match_direct():
    for p in (2, 3, 5):
        f = GF(p)
        one = f.one
        for s in range(1, 7):
            for t in range(1, 7):
                a, b = _jordan(f, s, one), _jordan(f, t, one)
                sym = kron_minpoly_symbolic([eig_spec_of_matrix(a),
                                             eig_spec_of_matrix(b)])
                assert sym == kron_minpoly_direct([a, b]), (p, s, t)


def test_nilpotent_factor_annihilates_product():
    a = _jordan(QQ, 2, 0)       # nilpotent of index 2
    b = _jordan(QQ, 3, 0)       # nilpotent of index 3
    sym = kron_minpoly_symbolic([eig_spec_of_matrix(a), eig_spec_of_matrix(b)])
    assert sym == Poly.x(QQ) ** 2
    assert sym == kron_minpoly_direct([a, b])
    c = _jordan(QQ, 3, 1)
    sym2 = kron_minpoly_symbolic([eig_spec_of_matrix(a), eig_spec_of_matrix(c)])
    assert sym2 == Poly.x(QQ) ** 2 == kron_minpoly_direct([a, c])


def test_singular_non_nilpotent_keeps_zero_block():
    a = jordan_assembly(QQ, [(2, Fraction(0)), (2, Fraction(1))])
    b = _jordan(QQ, 3, 1)
    sym = kron_minpoly_symbolic([eig_spec_of_matrix(a), eig_spec_of_matrix(b)])
    assert sym == kron_minpoly_direct([a, b])
    # zero eigenvalue keeps index 2; unipotent part wedges to 2+3-1
    assert sym == Poly.x(QQ) ** 2 * Poly.from_roots(QQ, [1] * 4)


def test_mixed_spectra_sweep_matches_direct():
    rng = random.Random(5)
    pool = [Fraction(1), Fraction(2), Fraction(-1), Fraction(0)]
    for _ in range(12):
        blocks_a = [(rng.randint(1, 2), rng.choice(pool))]
        if rng.random() < 0.5:
            blocks_a.append((rng.randint(1, 2), rng.choice(pool)))
        blocks_b = [(rng.randint(1, 3), rng.choice(pool))]
        a = jordan_assembly(QQ, blocks_a)
        b = jordan_assembly(QQ, blocks_b)
        sym = kron_minpoly_symbolic([eig_spec_of_matrix(a),
                                     eig_spec_of_matrix(b)])
        assert sym == kron_minpoly_direct([a, b]), (blocks_a, blocks_b)


def test_three_factor_product():
    mats = [_jordan(QQ, 2, 1), _jordan(QQ, 2, 2), _jordan(QQ, 2, 1)]
    sym = kron_minpoly_symbolic([eig_spec_of_matrix(m) for m in mats])
    assert sym == kron_minpoly_direct(mats)
    assert sym == Poly.from_roots(QQ, [2] * 4)


def test_direct_route_is_a_real_kronecker_minpoly():
    mats = [_jordan(QQ, 2, 1), _jordan(QQ, 3, 2)]
    big = reduce(kron, mats)
    assert kron_minpoly_direct(mats) == minpoly(big)


def test_complex_clustering_route(spiral_3x3):
    b = Matrix.diagonal(QQ, [1, 2]).to_field(CC)
    sym = kron_minpoly_symbolic([eig_spec_of_matrix(spiral_3x3),
                                 eig_spec_of_matrix(b)])
    direct = kron_minpoly_direct([spiral_3x3, b])
    assert sym.degree == direct.degree
    assert all(abs(sym.coeff(i) - direct.coeff(i)) < 1e-6
               for i in range(sym.degree + 1))


def test_eig_spec_validation():
    with pytest.raises(NonSplitField):
        eig_spec_of_poly(Poly(QQ, [1, 0, 1]))
    with pytest.raises(NonMonic):
        eig_spec_of_poly(Poly(QQ, [1, 2]))
    spec = eig_spec_of_poly(Poly(QQ, [0, -1, 1]) * Poly.x(QQ))  # X^2(X-1)
    assert spec.zero_index == 2
    assert spec.nonzero == ((Fraction(1), 1),)
    assert not spec.is_nilpotent
    nil = eig_spec_of_poly(Poly.x(QQ) ** 3)
    assert nil.is_nilpotent


def test_eig_spec_roundtrips_to_poly():
    p = Poly.x(QQ) ** 2 * Poly.from_roots(QQ, [1, 1, 2])
    assert eig_spec_of_poly(p).poly() == p


def test_symbolic_guards():
    with pytest.raises(EmptyInput):
        kron_minpoly_symbolic([])
    f5 = GF(5)
    a = EigSpec(QQ, 0, ((Fraction(1), 1),))
    b = EigSpec(f5, 0, ((f5.one, 1),))
    with pytest.raises(MixedFields):
        kron_minpoly_symbolic([a, b])


def test_direct_order_cap():
    mats = [Matrix.identity(QQ, 8) for _ in range(5)]
    with pytest.raises(OrderTooLarge):
        kron_minpoly_direct(mats)


# -- product closures of recurrence characteristic polynomials ----------------


def test_fibonacci_square_closure():
    fib = Poly(QQ, [-1, -1, 1])
    assert lrs_product_poly([fib, fib]) == Poly(QQ, [1, -2, -2, 1])


def test_fibonacci_times_geometric():
    fib = Poly(QQ, [-1, -1, 1])
    geo = Poly(QQ, [-2, 1])
    assert lrs_product_poly([fib, geo]) == Poly(QQ, [-4, -2, 1])


def test_product_closure_falls_back_when_spectrum_is_irrational():
    p = Poly(QQ, [1, 0, 1])  # X^2 + 1, no rational roots
    q = Poly(QQ, [-1, 1])
    got = lrs_product_poly([p, q])
    assert got == minpoly(kron(companion(p), companion(q)))
    assert got == Poly(QQ, [1, 0, 1])


def test_product_closure_validates_input():
    with pytest.raises(EmptyInput):
        lrs_product_poly([])
    with pytest.raises(NonMonic):
        lrs_product_poly([Poly(QQ, [1, 2])])


def test_product_closure_prime_field():
    f5 = GF(5)
    fib5 = Poly(f5, [f5.coerce(-1), f5.coerce(-1), f5.one])
    got = lrs_product_poly([fib5, fib5])
    assert got == minpoly(kron(companion(fib5), companion(fib5)))


def test_exhaustive_jordan_sweep_multiway():
    # every unordered pair drawn from small Jordan blocks over Q and F_5
    for field, vals in ((QQ, [Fraction(0), Fraction(1), Fraction(2)]),
                        (GF(5), [GF(5).coerce(0), GF(5).coerce(1)])):
        sizes = [1, 2, 3]
        cases = [(s, v) for s in sizes for v in vals]
        for (s, u), (t, v) in itertools.combinations_with_replacement(cases, 2):
            a, b = _jordan(field, s, u), _jordan(field, t, v)
            sym = kron_minpoly_symbolic([eig_spec_of_matrix(a),
                                         eig_spec_of_matrix(b)])
            assert sym == kron_minpoly_direct([a, b]), (field, s, u, t, v)
