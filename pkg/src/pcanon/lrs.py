"""Linear recurrence (C-finite) sequences over exact or complex fields.

A sequence is a monic characteristic polynomial of degree d plus its
first d terms; everything later is forced by the recurrence. The module
evaluates terms, forms termwise products carrying an explicit annihilator
(verified on a window, so a wrong annihilator fails fast), and recovers
the minimal annihilator of a raw prefix from exact Hankel-style linear
systems — the independent minimality oracle for the product closure.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    AnnihilatorMismatch,
    DegreeZero,
    InsufficientData,
    MixedFields,
    NonMonic,
)
from .scalar import CC, QQ, GF, Field, FpElement, Poly


@dataclass(frozen=True)
class LinRecSeq:
    """char: monic polynomial X^d + sum c_i X^i; initial: the d first terms.
    Term n >= d satisfies a_n = -sum_i c_i a_(n-d+i)."""

    char: Poly
    initial: tuple

    def __post_init__(self):
        p = self.char
        if p.is_zero or not p.is_monic:
            raise NonMonic("recurrence needs a monic characteristic polynomial")
        if p.degree < 1:
            raise DegreeZero("recurrence needs degree >= 1")
        coerced = tuple(p.field.coerce(x) for x in self.initial)
        if len(coerced) != p.degree:
            raise ValueError(
                f"need exactly {p.degree} initial terms, got {len(coerced)}")
        object.__setattr__(self, "initial", coerced)

    @property
    def field(self) -> Field:
        return self.char.field


def lrs_prefix(seq: LinRecSeq, count: int) -> list:
    """First count terms by unrolling the recurrence (exact, O(count*d))."""
    f = seq.field
    d = seq.char.degree
    out = list(seq.initial[:count])
    window = list(seq.initial)
    coeffs = seq.char.coeffs[:-1]
    while len(out) < count:
        nxt = f.zero
        for c, a in zip(coeffs, window):
            nxt = nxt - c * a
        out.append(nxt)
        window = window[1:] + [nxt]
    return out


def lrs_eval(seq: LinRecSeq, n: int):
    """The n-th term."""
    if n < 0:
        raise ValueError("term index must be nonnegative")
    return lrs_prefix(seq, n + 1)[n]


def lrs_mul(factors, p: Poly) -> LinRecSeq:
    """Termwise product of sequences, packaged under the annihilator p.

    p must annihilate the product (e.g. the product-closure polynomial of
    the factor characteristic polynomials); this is re-verified on a
    3*deg(p) window and AnnihilatorMismatch raised otherwise.
    """
    factors = list(factors)
    if not factors:
        raise ValueError("need at least one factor sequence")
    f = p.field
    for s in factors:
        if s.field != f:
            raise MixedFields(f"sequences over {s.field} with polynomial over {f}")
    if p.is_zero or not p.is_monic:
        raise NonMonic("annihilator must be monic")
    d = p.degree
    if d < 1:
        raise DegreeZero("annihilator must have degree >= 1")
    horizon = 3 * d
    prefixes = [lrs_prefix(s, horizon) for s in factors]
    prod = []
    for k in range(horizon):
        term = f.one
        for pref in prefixes:
            term = term * pref[k]
        prod.append(term)
    scale = 1.0
    if not f.exact:
        scale = max(1.0, max(abs(x) for x in prod))
    for n in range(horizon - d):
        resid = f.zero
        for i, c in enumerate(p.coeffs):
            resid = resid + c * prod[n + i]
        bad = (not f.is_zero(resid)) if f.exact else abs(resid) > 1e-8 * scale
        if bad:
            raise AnnihilatorMismatch(
                f"{p.format()} fails on the product at offset {n}")
    return LinRecSeq(char=p, initial=tuple(prod[:d]))


def _infer_field(values) -> Field:
    for v in values:
        if isinstance(v, FpElement):
            return GF(v.p)
        if isinstance(v, (complex, float)):
            return CC
        if isinstance(v, Fraction):
            return QQ
    return QQ


def _solve_exact(rows, ncols: int, field: Field):
    """Solve an augmented system over an exact field; None if inconsistent.
    Free variables are set to zero."""
    work = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(work))
                    if not field.is_zero(work[i][c])), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = field.one / work[r][c]
        work[r] = [inv * x for x in work[r]]
        for i in range(len(work)):
            if i != r and not field.is_zero(work[i][c]):
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
    for i in range(r, len(work)):
        if not field.is_zero(work[i][ncols]):
            return None
    sol = [field.zero] * ncols
    for row_idx, c in enumerate(pivots):
        sol[c] = work[row_idx][ncols]
    return sol


def _solve_numeric(rows, ncols: int, tol: float = 1e-8):
    """Least-squares-free float solve with residual consistency check."""
    work = [[complex(x) for x in r] for r in rows]
    scale = max(1.0, max(abs(x) for row in work for x in row))
    pivots = []
    r = 0
    for c in range(ncols):
        piv = max(range(r, len(work)), key=lambda i: abs(work[i][c]),
                  default=None)
        if piv is None or abs(work[piv][c]) <= tol * scale:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = 1.0 / work[r][c]
        work[r] = [inv * x for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
    for i in range(r, len(work)):
        if abs(work[i][ncols]) > tol * scale:
            return None
    sol = [0j] * ncols
    for row_idx, c in enumerate(pivots):
        sol[c] = work[row_idx][ncols]
    return sol


def lrs_min_annihilator(prefix, field: Field | None = None) -> Poly:
    """Minimal monic polynomial annihilating every window of the prefix.

    Tries degrees d = 1, 2, ... up to len(prefix)//2 - 1; for each d the
    full linear system a_(n+d) = -sum c_i a_(n+i) over all available
    windows is solved exactly, and the smallest consistent d wins.
    Raises InsufficientData when no degree in range works.
    """
    values = list(prefix)
    if field is None:
        field = _infer_field(values)
    values = [field.coerce(v) for v in values]
    dmax = len(values) // 2 - 1
    if dmax < 1:
        raise InsufficientData(
            f"prefix of length {len(values)} supports no candidate degree")
    for d in range(1, dmax + 1):
        rows = []
        for n in range(len(values) - d):
            rows.append(values[n:n + d] + [-values[n + d]])
        if field.exact:
            sol = _solve_exact(rows, d, field)
        else:
            sol = _solve_numeric(rows, d)
        if sol is not None:
            return Poly(field, list(sol) + [field.one])
    raise InsufficientData(
        f"no annihilator of degree <= {dmax} fits a prefix of length {len(values)}")
