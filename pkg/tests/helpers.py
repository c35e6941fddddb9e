"""Shared oracles and matrix builders for the test suite.

Everything here is deliberately independent of the code under test:
the exponential oracle is plain scaling-and-squaring on a truncated
series, the wedge oracle is a direct scan of binomial coefficients, and
the random matrices are Jordan assemblies conjugated by unimodular
integer matrices so every expected invariant is known by construction.
"""

from __future__ import annotations

import math
from fractions import Fraction

from pcanon.linalg import Matrix
from pcanon.scalar import CC, QQ


def max_diff(a: Matrix, b: Matrix) -> float:
    return max(abs(complex(x) - complex(y))
               for ra, rb in zip(a.rows, b.rows)
               for x, y in zip(ra, rb))


def expm_series(a: Matrix, t=1.0, terms: int = 40) -> Matrix:
    """Reference e^(tA): scaling and squaring over a truncated series."""
    m = a.to_field(CC) * complex(t)
    norm = max(max(abs(e) for e in row) for row in m.rows) * m.n
    squarings = max(0, math.ceil(math.log2(norm)) + 1) if norm > 0.5 else 0
    m = m * (0.5 ** squarings)
    acc = Matrix.identity(CC, m.n)
    term = Matrix.identity(CC, m.n)
    for i in range(1, terms + 1):
        term = term * m * (1.0 / i)
        acc = acc + term
    for _ in range(squarings):
        acc = acc * acc
    return acc


def binom_span_bruteforce(s: int, t: int, p: int) -> int:
    """Largest i + j + 1 with binom(i+j, i) nonzero in characteristic p,
    over i < s, j < t — a direct scan, no carries argument."""
    best = 0
    for i in range(s):
        for j in range(t):
            c = math.comb(i + j, i)
            if (c % p if p else c) != 0:
                best = max(best, i + j + 1)
    return best


def _shear(n: int, i: int, j: int, c: int) -> Matrix:
    rows = [[Fraction(int(r == s)) for s in range(n)] for r in range(n)]
    rows[i][j] = Fraction(c)
    return Matrix(QQ, rows)


def unimodular(rng, n: int) -> Matrix:
    """Random integer matrix with determinant +-1 (product of shears)."""
    m = Matrix.identity(QQ, n)
    for _ in range(2 * n):
        i, j = rng.randrange(n), rng.randrange(n)
        if i != j:
            m = m * _shear(n, i, j, rng.choice([-2, -1, 1, 2]))
    return m


def jordan_assembly(field, blocks) -> Matrix:
    """Block-diagonal matrix of Jordan blocks given as (size, eigenvalue)."""
    n = sum(size for size, _ in blocks)
    rows = [[field.zero for _ in range(n)] for _ in range(n)]
    at = 0
    for size, lam in blocks:
        b = Matrix.jordan_block(field, size, lam)
        for r in range(size):
            for c in range(size):
                rows[at + r][at + c] = b.rows[r][c]
        at += size
    return Matrix(field, rows)


def rational_spectrum_matrix(rng, values, max_block: int = 3,
                             max_order: int = 5):
    """A dense rational matrix with a known Jordan structure.

    Returns (matrix, blocks) where blocks is the (size, eigenvalue) list
    used to assemble it before the unimodular conjugation.
    """
    blocks = []
    order = 0
    while order < 2 or (order < max_order and rng.random() < 0.7):
        size = rng.randint(1, min(max_block, max_order - order))
        if size == 0:
            break
        blocks.append((size, Fraction(rng.choice(values))))
        order += size
    j = jordan_assembly(QQ, blocks)
    s = unimodular(rng, order)
    return s * j * s.inverse(), blocks


def blocks_minpoly_exponents(blocks) -> dict:
    """eigenvalue -> index (largest block size) for a Jordan assembly."""
    out: dict = {}
    for size, lam in blocks:
        out[lam] = max(out.get(lam, 0), size)
    return out
