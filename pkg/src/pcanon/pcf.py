"""Closed forms for the full power sequence of a square matrix.

The power sequence k -> A^k of a matrix whose minimal polynomial splits
decomposes uniquely as a finitely supported part (one matrix per power
below the index of the eigenvalue zero) plus, per nonzero eigenvalue, a
polynomial-times-geometric part. Two scalar bases are supported for the
polynomial factor: binomial coefficients binom(k, i) (any field) and pure
powers k^i (characteristic zero only), with exact Stirling conversions
between them. Complex forms of real matrices can be rewritten over the
reals with r^k cos(k theta) / r^k sin(k theta) spirals.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import CharPositive, NotConjugateSymmetric, PcanonError
from .linalg import Matrix, spectral_data
from .scalar import CC, Field, Poly, stirling_first, stirling_second


class Basis(Enum):
    """Scalar basis carried by the polynomial factor of each term."""

    LAMBDA = "binomial"   # binom(k, i)
    GAMMA = "power"       # k^i


@dataclass(frozen=True)
class PCanonicalForm:
    """Exact closed form for A^k.

    nilpotent_terms lists (i, V_i) with V_i = A^i pi_0, contributing V_k
    only at k = i; geometric_terms lists (eigenvalue, coefficient
    matrices) in the field's canonical eigenvalue order, contributing
    sum_i C_i * lambda^k * binom(k, i) (or lambda^k * k^i in the power
    basis). Coefficient lists are trimmed so their lengths equal the
    eigenvalue indices.
    """

    field: Field
    order: int
    basis: Basis
    nilpotent_terms: tuple
    geometric_terms: tuple

    @property
    def t0(self) -> int:
        return 1 + max((i for i, _ in self.nilpotent_terms), default=-1)


@dataclass(frozen=True)
class RealTerm:
    """Real eigenvalue contribution: value^k times binomial polynomials."""

    value: float
    coeffs: tuple


@dataclass(frozen=True)
class SpiralTerm:
    """Merged conjugate pair: r^k cos(k*angle) and r^k sin(k*angle) parts."""

    modulus: float
    angle: float
    cos_coeffs: tuple
    sin_coeffs: tuple


@dataclass(frozen=True)
class RealPCF:
    """Real-coefficient closed form for A^k of a real matrix."""

    order: int
    basis: Basis
    nilpotent_terms: tuple
    terms: tuple


def _binom_factor(field: Field, k: int, i: int):
    return field.from_int(math.comb(k, i))


def _power_factor(field: Field, k: int, i: int):
    # convention 0^0 = 1 so the k = 0 evaluation needs no special case
    return field.from_int(k ** i if i else 1)


def pcf_build(a: Matrix, tol: float = 1e-8) -> PCanonicalForm:
    """Closed form of the power sequence from the spectral projections.

    V_i = A^i pi_0 for i below the index of zero; for each nonzero
    eigenvalue with index t, C_i = lambda^(-i) (A - lambda I)^i pi for
    i < t. Raises NonSplitField when the spectrum does not live in the
    coefficient field.
    """
    sd = spectral_data(a, tol)
    f = a.field
    nil = []
    cur = sd.zero_projection
    for i in range(sd.t0):
        nil.append((i, cur))
        if i + 1 < sd.t0:
            cur = a * cur
    ident = Matrix.identity(f, a.n)
    geo = []
    for comp in sd.components:
        lam = comp.value
        shift = a - ident * lam
        inv = f.one / lam
        coeffs = []
        cur = comp.projection
        factor = f.one
        for i in range(comp.index):
            coeffs.append(cur * factor if i else cur)
            if i + 1 < comp.index:
                cur = shift * cur
                factor = factor * inv
        while coeffs and coeffs[-1].is_zero:
            coeffs.pop()
        if coeffs:
            geo.append((lam, tuple(coeffs)))
    return PCanonicalForm(field=f, order=a.n, basis=Basis.LAMBDA,
                          nilpotent_terms=tuple(nil), geometric_terms=tuple(geo))


def pcf_eval(form: PCanonicalForm, k: int) -> Matrix:
    """The k-th power of the underlying matrix, evaluated from the form."""
    if k < 0:
        raise ValueError("power index must be nonnegative")
    f = form.field
    out = Matrix.zeros(f, form.order)
    for i, v in form.nilpotent_terms:
        if i == k:
            out = out + v
    basis_factor = _binom_factor if form.basis is Basis.LAMBDA else _power_factor
    for lam, coeffs in form.geometric_terms:
        geom = lam ** k
        acc = Matrix.zeros(f, form.order)
        for i, c in enumerate(coeffs):
            w = basis_factor(f, k, i)
            if not f.is_zero(w):
                acc = acc + c * w
        out = out + acc * geom
    return out


def pcf_to_gamma(form: PCanonicalForm) -> PCanonicalForm:
    """Rewrite binomial-basis polynomial factors over pure powers k^i.

    Uses binom(k, i) = sum_m (s(i, m) / i!) k^m with signed Stirling
    numbers of the first kind; characteristic zero only. Idempotent on
    forms already in the power basis.
    """
    if form.field.char != 0:
        raise CharPositive("power basis needs characteristic zero")
    if form.basis is Basis.GAMMA:
        return form
    geo = []
    for lam, coeffs in form.geometric_terms:
        t = len(coeffs)
        new = []
        for m in range(t):
            acc = Matrix.zeros(form.field, form.order)
            for i in range(m, t):
                w = Fraction(stirling_first(i, m), math.factorial(i))
                if w:
                    acc = acc + coeffs[i] * form.field.from_fraction(w)
            new.append(acc)
        while new and new[-1].is_zero:
            new.pop()
        geo.append((lam, tuple(new)))
    return PCanonicalForm(field=form.field, order=form.order, basis=Basis.GAMMA,
                          nilpotent_terms=form.nilpotent_terms,
                          geometric_terms=tuple(geo))


def pcf_to_lambda(form: PCanonicalForm) -> PCanonicalForm:
    """Inverse of pcf_to_gamma: k^m = sum_i S(m, i) i! binom(k, i)."""
    if form.field.char != 0:
        raise CharPositive("basis conversion needs characteristic zero")
    if form.basis is Basis.LAMBDA:
        return form
    geo = []
    for lam, coeffs in form.geometric_terms:
        t = len(coeffs)
        new = []
        for i in range(t):
            acc = Matrix.zeros(form.field, form.order)
            for m in range(i, t):
                w = stirling_second(m, i) * math.factorial(i)
                if w:
                    acc = acc + coeffs[m] * form.field.from_int(w)
            new.append(acc)
        while new and new[-1].is_zero:
            new.pop()
        geo.append((lam, tuple(new)))
    return PCanonicalForm(field=form.field, order=form.order, basis=Basis.LAMBDA,
                          nilpotent_terms=form.nilpotent_terms,
                          geometric_terms=tuple(geo))


def pcf_minpoly(form: PCanonicalForm) -> Poly:
    """Minimal polynomial read directly off the form: X^t0 times the
    product of (X - lambda)^(number of coefficient matrices)."""
    f = form.field
    p = Poly.x(f) ** form.t0
    for lam, coeffs in form.geometric_terms:
        p = p * Poly(f, (-lam, 1)) ** len(coeffs)
    return p


def _real_matrix(m: Matrix, tol: float, scale: float) -> Matrix:
    worst = max((abs(e.imag) for row in m.rows for e in row), default=0.0)
    if worst > tol * scale:
        raise NotConjugateSymmetric(
            f"imaginary residue {worst:.3g} exceeds tolerance")
    return Matrix(CC, [[complex(e.real, 0.0) for e in row] for row in m.rows])


def pcf_realify(form: PCanonicalForm, tol: float = 1e-8) -> RealPCF:
    """Merge conjugate eigenvalue pairs of a complex form into real spirals.

    A pair mu = r e^(i theta), conj(mu) with conjugate coefficient
    matrices C, conj(C) becomes modulus r, angle theta in (0, pi),
    cos coefficients 2 Re(C) and sin coefficients -2 Im(C). Raises
    NotConjugateSymmetric when the spectrum or the coefficients fail to
    pair up, i.e. when the source matrix was not real.
    """
    if form.field != CC:
        raise PcanonError("realification applies to complex-double forms")
    scale = 1.0
    for _, v in form.nilpotent_terms:
        scale = max(scale, v.maxnorm())
    for _, coeffs in form.geometric_terms:
        for c in coeffs:
            scale = max(scale, c.maxnorm())
    nil = tuple((i, _real_matrix(v, tol, scale)) for i, v in form.nilpotent_terms)

    real_terms: list[RealTerm] = []
    spiral_terms: list[SpiralTerm] = []
    pending = {idx: (lam, coeffs) for idx, (lam, coeffs)
               in enumerate(form.geometric_terms)}
    while pending:
        idx, (lam, coeffs) = min(pending.items())
        del pending[idx]
        lam_scale = max(1.0, abs(lam))
        if abs(lam.imag) <= tol * lam_scale:
            real_terms.append(RealTerm(
                value=lam.real,
                coeffs=tuple(_real_matrix(c, tol, scale) for c in coeffs)))
            continue
        partner = None
        for jdx, (mu, _mc) in pending.items():
            if abs(mu - lam.conjugate()) <= tol * lam_scale:
                partner = jdx
                break
        if partner is None:
            raise NotConjugateSymmetric(
                f"eigenvalue {lam!r} has no conjugate partner")
        mu, mcoeffs = pending.pop(partner)
        if len(mcoeffs) != len(coeffs):
            raise NotConjugateSymmetric(
                f"conjugate eigenvalues {lam!r}, {mu!r} have different indices")
        top, bot = (coeffs, mcoeffs) if lam.imag > 0 else (mcoeffs, coeffs)
        val = lam if lam.imag > 0 else mu
        for ct, cb in zip(top, bot):
            diff = max(abs(a - b.conjugate())
                       for ra, rb in zip(ct.rows, cb.rows) for a, b in zip(ra, rb))
            if diff > tol * max(1.0, scale):
                raise NotConjugateSymmetric(
                    f"coefficients of {val!r} are not conjugate (residue {diff:.3g})")
        cos_cs = tuple(Matrix(CC, [[complex(2 * e.real, 0.0) for e in row]
                                   for row in c.rows]) for c in top)
        sin_cs = tuple(Matrix(CC, [[complex(-2 * e.imag, 0.0) for e in row]
                                   for row in c.rows]) for c in top)
        spiral_terms.append(SpiralTerm(modulus=abs(val),
                                       angle=math.atan2(val.imag, val.real),
                                       cos_coeffs=cos_cs, sin_coeffs=sin_cs))
    real_terms.sort(key=lambda t: t.value)
    spiral_terms.sort(key=lambda t: (t.modulus, t.angle))
    return RealPCF(order=form.order, basis=form.basis,
                   nilpotent_terms=nil, terms=(*real_terms, *spiral_terms))


def realpcf_eval(form: RealPCF, k: int) -> Matrix:
    """Evaluate a real closed form at integer k (entries stay real)."""
    if k < 0:
        raise ValueError("power index must be nonnegative")
    out = Matrix.zeros(CC, form.order)
    for i, v in form.nilpotent_terms:
        if i == k:
            out = out + v
    basis_factor = _binom_factor if form.basis is Basis.LAMBDA else _power_factor
    for term in form.terms:
        if isinstance(term, RealTerm):
            geom = complex(term.value ** k, 0.0)
            acc = Matrix.zeros(CC, form.order)
            for i, c in enumerate(term.coeffs):
                w = basis_factor(CC, k, i)
                if w != 0:
                    acc = acc + c * w
            out = out + acc * geom
        else:
            rk = term.modulus ** k
            cosf = complex(rk * math.cos(k * term.angle), 0.0)
            sinf = complex(rk * math.sin(k * term.angle), 0.0)
            acc = Matrix.zeros(CC, form.order)
            for i, (cc, sc) in enumerate(zip(term.cos_coeffs, term.sin_coeffs)):
                w = basis_factor(CC, k, i)
                if w != 0:
                    acc = acc + (cc * cosf + sc * sinf) * w
            out = out + acc
    return out


def _convert_coeff_list(order: int, coeffs, to_gamma: bool) -> tuple:
    t = len(coeffs)
    new = []
    for m in range(t):
        acc = Matrix.zeros(CC, order)
        if to_gamma:
            for i in range(m, t):
                w = stirling_first(i, m) / math.factorial(i)
                if w:
                    acc = acc + coeffs[i] * complex(w)
        else:
            for j in range(m, t):
                w = stirling_second(j, m) * math.factorial(m)
                if w:
                    acc = acc + coeffs[j] * complex(w)
        new.append(acc)
    return tuple(new)


def realpcf_to_gamma(form: RealPCF) -> RealPCF:
    """Power-basis rewrite of a real closed form (same Stirling identity,
    applied to cos and sin coefficient lists independently)."""
    if form.basis is Basis.GAMMA:
        return form
    terms = []
    for term in form.terms:
        if isinstance(term, RealTerm):
            terms.append(RealTerm(
                value=term.value,
                coeffs=_convert_coeff_list(form.order, term.coeffs, True)))
        else:
            terms.append(SpiralTerm(
                modulus=term.modulus, angle=term.angle,
                cos_coeffs=_convert_coeff_list(form.order, term.cos_coeffs, True),
                sin_coeffs=_convert_coeff_list(form.order, term.sin_coeffs, True)))
    return RealPCF(order=form.order, basis=Basis.GAMMA,
                   nilpotent_terms=form.nilpotent_terms, terms=tuple(terms))


def realpcf_to_lambda(form: RealPCF) -> RealPCF:
    """Inverse of realpcf_to_gamma."""
    if form.basis is Basis.LAMBDA:
        return form
    terms = []
    for term in form.terms:
        if isinstance(term, RealTerm):
            terms.append(RealTerm(
                value=term.value,
                coeffs=_convert_coeff_list(form.order, term.coeffs, False)))
        else:
            terms.append(SpiralTerm(
                modulus=term.modulus, angle=term.angle,
                cos_coeffs=_convert_coeff_list(form.order, term.cos_coeffs, False),
                sin_coeffs=_convert_coeff_list(form.order, term.sin_coeffs, False)))
    return RealPCF(order=form.order, basis=Basis.LAMBDA,
                   nilpotent_terms=form.nilpotent_terms, terms=tuple(terms))
