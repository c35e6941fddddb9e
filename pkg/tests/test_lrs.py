"""Linear recurrence sequences: evaluation, products, minimal annihilators."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pcanon.errors import (
    AnnihilatorMismatch,
    DegreeZero,
    InsufficientData,
    NonMonic,
)
from pcanon.kronmin import lrs_product_poly
from pcanon.linalg import matrix_poly, companion
from pcanon.lrs import (
    LinRecSeq,
    lrs_eval,
    lrs_min_annihilator,
    lrs_mul,
    lrs_prefix,
)
from pcanon.scalar import CC, GF, QQ, Poly

_FIB_POLY = Poly(QQ, [-1, -1, 1])


def _fib() -> LinRecSeq:
    return LinRecSeq(_FIB_POLY, (0, 1))


def test_prefix_and_eval_agree():
    seq = _fib()
    prefix = lrs_prefix(seq, 15)
    assert prefix[:8] == [0, 1, 1, 2, 3, 5, 8, 13]
    for n in (0, 1, 5, 14):
        assert lrs_eval(seq, n) == prefix[n]
    assert lrs_eval(seq, 30) == 832040


@given(st.lists(st.integers(-3, 3), min_size=1, max_size=4),
       st.data())
def test_eval_matches_unrolled_recurrence(lower, data):
    # companion-power route vs direct window unrolling
    p = Poly(QQ, lower + [1])
    if p.degree < 1:
        return
    initials = tuple(
        data.draw(st.integers(-4, 4)) for _ in range(p.degree))
    seq = LinRecSeq(p, initials)
    prefix = lrs_prefix(seq, 12)
    window = [Fraction(x) for x in initials]
    d = p.degree
    for n in range(d, 12):
        nxt = -sum(p.coeff(i) * window[i] for i in range(d))
        window = window[1:] + [nxt]
        assert prefix[n] == nxt
    for n in (0, 3, 11):
        assert lrs_eval(seq, n) == prefix[n]


def test_validation():
    with pytest.raises(NonMonic):
        LinRecSeq(Poly(QQ, [1, 2]), (1,))
    with pytest.raises(DegreeZero):
        LinRecSeq(Poly.one(QQ), ())
    with pytest.raises(ValueError):
        LinRecSeq(_FIB_POLY, (1,))


def test_product_sequence_squares_fibonacci():
    sq = lrs_mul([_fib(), _fib()], lrs_product_poly([_FIB_POLY, _FIB_POLY]))
    assert lrs_prefix(sq, 6) == [0, 1, 1, 4, 9, 25]
    fib = lrs_prefix(_fib(), 40)
    assert lrs_prefix(sq, 40) == [x * x for x in fib]


def test_product_with_geometric():
    two = LinRecSeq(Poly(QQ, [-2, 1]), (1,))
    prod = lrs_mul([_fib(), two], lrs_product_poly([_FIB_POLY, Poly(QQ, [-2, 1])]))
    assert lrs_prefix(prod, 5) == [0, 2, 4, 16, 48]


def test_product_rejects_non_annihilator():
    bogus = Poly(QQ, [5, 1, 1])  # monic but wrong
    with pytest.raises(AnnihilatorMismatch):
        lrs_mul([_fib(), _fib()], bogus)


def test_min_annihilator_of_fibonacci_square():
    sq = lrs_mul([_fib(), _fib()], lrs_product_poly([_FIB_POLY, _FIB_POLY]))
    prefix = lrs_prefix(sq, 30)
    got = lrs_min_annihilator(prefix)
    assert got == Poly(QQ, [1, -2, -2, 1])


def test_min_annihilator_finds_smaller_degree():
    # the closure polynomial can be non-minimal: constant sequence from
    # a degree-2 recurrence
    seq = LinRecSeq(Poly(QQ, [1, -2, 1]), (3, 3))  # (X-1)^2, constant start
    prefix = lrs_prefix(seq, 20)
    assert lrs_min_annihilator(prefix) == Poly(QQ, [-1, 1])


def test_min_annihilator_needs_data():
    # six terms cap the searchable degree at 2, but the true minimal
    # annihilator of the squared sequence has degree 3
    with pytest.raises(InsufficientData):
        lrs_min_annihilator([0, 1, 1, 4, 9, 25])
    assert lrs_min_annihilator([1, 2, 4, 8, 16, 32, 64]) == Poly(QQ, [-2, 1])


def test_min_annihilator_prime_field():
    f5 = GF(5)
    fib5 = LinRecSeq(Poly(f5, [f5.coerce(-1), f5.coerce(-1), f5.one]),
                     (f5.coerce(0), f5.one))
    prefix = lrs_prefix(fib5, 24)
    got = lrs_min_annihilator(prefix)
    rem = [x for x in prefix]
    # verify annihilation over the whole prefix window
    d = got.degree
    for n in range(d, len(rem)):
        acc = f5.zero
        for i in range(d + 1):
            acc = acc + got.coeff(i) * rem[n - d + i]
        assert acc == f5.zero
    assert d <= 2


def test_numeric_sequence_annihilator():
    seq = [complex(2) ** n + complex(3) ** n for n in range(16)]
    got = lrs_min_annihilator(seq, CC)
    assert got.degree == 2
    want = Poly(CC, [6, -5, 1])
    assert all(abs(got.coeff(i) - want.coeff(i)) < 1e-7 for i in range(3))


def test_prime_field_product_closure_sequence():
    f5 = GF(5)
    p5 = Poly(f5, [f5.coerce(-1), f5.coerce(-1), f5.one])
    fib5 = LinRecSeq(p5, (f5.coerce(0), f5.one))
    closure = lrs_product_poly([p5, p5])
    sq = lrs_mul([fib5, fib5], closure)
    fib = lrs_prefix(fib5, 20)
    assert lrs_prefix(sq, 20) == [x * x for x in fib]


def test_closure_polynomial_annihilates_companion_kron():
    # structural dual of the sequence check: the closure polynomial kills
    # the Kronecker product of the companion matrices
    p = lrs_product_poly([_FIB_POLY, _FIB_POLY])
    from pcanon.linalg import kron

    big = kron(companion(_FIB_POLY), companion(_FIB_POLY))
    assert matrix_poly(p, big).is_zero
