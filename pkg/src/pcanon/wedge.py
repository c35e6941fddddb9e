"""Nilpotency-order arithmetic for termwise products of binomial sequences.

The sequences Lambda_i(k) = binom(k, i) for i < s span an s-dimensional
space closed under the shift; multiplying two such spaces termwise yields
another, whose dimension depends only on s, t, and the characteristic.
wedge computes that dimension combinatorially (no-carry base-p addition,
per Kummer's criterion for binom(i+j, i) mod p); wedge_oracle_dim
recomputes it independently as the rank of an explicit value matrix.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce

import numpy as np

from .errors import HorizonTooSmall, PcanonError
from .scalar import is_prime


@dataclass(frozen=True)
class WedgeContext:
    """Carries the only field datum the wedge needs: the characteristic."""

    characteristic: int = 0

    def __post_init__(self):
        c = self.characteristic
        if c != 0 and not is_prime(c):
            raise PcanonError(f"characteristic must be 0 or prime, got {c}")


def _no_carry(i: int, j: int, p: int) -> bool:
    while i or j:
        if i % p + j % p >= p:
            return False
        i //= p
        j //= p
    return True


def wedge(s: int, t: int, ctx: WedgeContext = WedgeContext(0)) -> int:
    """Dimension of the termwise product of binomial spaces of dims s, t.

    Zero absorbs: s or t zero gives 0. In characteristic 0 the answer is
    s + t - 1; in characteristic p it is the largest i + j + 1 over i < s,
    j < t whose base-p addition carries nowhere.
    """
    if s < 0 or t < 0:
        raise ValueError("wedge arguments must be nonnegative")
    if s == 0 or t == 0:
        return 0
    p = ctx.characteristic
    if p == 0:
        return s + t - 1
    best = 0
    for i in range(s):
        for j in range(t):
            if i + j + 1 > best and _no_carry(i, j, p):
                best = i + j + 1
    return best


def wedge_lambda(t: int, s: int, lambda_is_zero: bool) -> int:
    """Dimension rule for multiplying a pure-shift space of dimension t by
    a geometric-times-binomial space of dimension s with ratio lambda:
    min(t, s) when lambda = 0, else t when s > 0, else 0."""
    if t < 0 or s < 0:
        raise ValueError("wedge_lambda arguments must be nonnegative")
    if lambda_is_zero:
        return min(t, s)
    return t if s != 0 else 0


def wedge_fold(orders, ctx: WedgeContext = WedgeContext(0)) -> int:
    """Left-to-right fold of wedge over a nonempty sequence of orders."""
    items = list(orders)
    if not items:
        raise ValueError("wedge_fold needs at least one order")
    return reduce(lambda a, b: wedge(a, b, ctx), items)


def _rank_exact_int(rows: list[list[int]]) -> int:
    """Rank over Q of an integer matrix by fraction-free elimination."""
    work = [list(r) for r in rows]
    if not work:
        return 0
    ncols = len(work[0])
    r = 0
    for c in range(ncols):
        if r == len(work):
            break
        piv = next((i for i in range(r, len(work)) if work[i][c]), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        lead = work[r][c]
        for i in range(r + 1, len(work)):
            if work[i][c]:
                b = work[i][c]
                merged = [lead * x - b * y for x, y in zip(work[i], work[r])]
                g = 0
                for x in merged:
                    g = math.gcd(g, x)
                work[i] = [x // g for x in merged] if g > 1 else merged
        r += 1
    return r


def _rank_mod_p(arr: np.ndarray, p: int) -> int:
    """Rank over F_p; entries must already be reduced mod p."""
    a = arr.astype(np.int64) % p
    nrows, ncols = a.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r] = a[r] * inv % p
        col = a[:, c].copy()
        col[r] = 0
        mask = col != 0
        if mask.any():
            a[mask] = (a[mask] - np.outer(col[mask], a[r])) % p
        r += 1
    return r


def wedge_oracle_dim(s: int, t: int, ctx: WedgeContext = WedgeContext(0),
                     horizon: int = 32) -> int:
    """Independent recomputation of wedge(s, t) as a matrix rank.

    Builds the (s*t) x horizon matrix whose rows sample the termwise
    products binom(k, a) * binom(k, b) for a < s, b < t, k < horizon, and
    returns its exact rank over Q or F_p. The horizon must be at least
    s + t + 2 so no dimension is truncated away.
    """
    if s < 0 or t < 0:
        raise ValueError("oracle arguments must be nonnegative")
    if horizon < s + t + 2:
        raise HorizonTooSmall(
            f"horizon {horizon} < s + t + 2 = {s + t + 2}")
    if s == 0 or t == 0:
        return 0
    p = ctx.characteristic
    rows = []
    for a in range(s):
        for b in range(t):
            row = [math.comb(k, a) * math.comb(k, b) for k in range(horizon)]
            rows.append([x % p for x in row] if p else row)
    if p == 0:
        return _rank_exact_int(rows)
    return _rank_mod_p(np.array(rows, dtype=np.int64), p)
