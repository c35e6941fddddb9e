"""Minimal polynomials of Kronecker products, computed two ways.

The symbolic route works purely on eigenvalue data: each factor is
reduced to its spectrum-with-indices, all tuples of nonzero eigenvalues
are grouped by product, and each class contributes (X - product) raised
to the largest iterated wedge of the indices; a separate rule gives the
exponent of X from the zero eigenvalues. The direct route builds the
Kronecker product matrix and takes its minimal polynomial outright; it
is the oracle the symbolic route is tested against, and the fallback
when a factor's spectrum does not split over the base field.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from .errors import (
    DegreeZero,
    EmptyInput,
    MixedFields,
    NonMonic,
    NonSplitField,
    OrderTooLarge,
    PcanonError,
)
from .linalg import Matrix, companion, kron, minpoly
from .scalar import CLUSTER_TOL, Field, Poly, poly_factor
from .wedge import WedgeContext, wedge_fold

#: Kronecker orders past this are rejected rather than ground through
DIRECT_ORDER_LIMIT = 4096


@dataclass(frozen=True)
class EigSpec:
    """Spectrum of one factor: index of zero plus (eigenvalue, index) pairs.

    Equivalent to the factorisation of a minimal polynomial as
    X^zero_index * product of (X - value)^index with distinct nonzero
    values, i.e. it forgets everything about a matrix except what the
    Kronecker composition rules consume.
    """

    field: Field
    zero_index: int
    nonzero: tuple

    @property
    def is_nilpotent(self) -> bool:
        return not self.nonzero

    def poly(self) -> Poly:
        p = Poly.x(self.field) ** self.zero_index
        for value, index in self.nonzero:
            p = p * Poly(self.field, (-value, 1)) ** index
        return p


def eig_spec_of_poly(p: Poly, tol: float = CLUSTER_TOL) -> EigSpec:
    """Spectrum of a monic polynomial; NonSplitField when linear factors
    do not exhaust it over an exact field."""
    if p.is_zero or (p.field.exact and not p.is_monic):
        raise NonMonic("eigenvalue spectrum needs a monic polynomial")
    if p.degree < 1:
        raise DegreeZero("eigenvalue spectrum needs degree >= 1")
    fact = poly_factor(p, tol)
    if fact.remainder.degree > 0:
        raise NonSplitField(
            f"{p.format()} does not split over {p.field}")
    f = p.field
    zero = 0
    nonzero = []
    for root, mult in fact.roots:
        if f.is_zero(root):
            zero = mult
        else:
            nonzero.append((root, mult))
    return EigSpec(field=f, zero_index=zero, nonzero=tuple(nonzero))


def eig_spec_of_matrix(a: Matrix, tol: float = CLUSTER_TOL) -> EigSpec:
    return eig_spec_of_poly(minpoly(a, tol), tol)


@dataclass(frozen=True)
class ProductClassTable:
    """Products of eigenvalue tuples grouped by value, with the exponent
    each class contributes: the maximum left-folded wedge of the indices."""

    field: Field
    entries: tuple  # ((product value, exponent), ...) in canonical order

    def poly(self) -> Poly:
        p = Poly.one(self.field)
        for value, exponent in self.entries:
            p = p * Poly(self.field, (-value, 1)) ** exponent
        return p


def product_class_table(specs, ctx: WedgeContext) -> ProductClassTable:
    """Enumerate all tuples of nonzero eigenvalues across the factors,
    group by product (exact equality, or relative clustering tolerance on
    complex doubles), and keep the max folded wedge per class."""
    f = specs[0].field
    acc = [(f.one, [])]
    for spec in specs:
        nxt = []
        for prod, idxs in acc:
            for value, index in spec.nonzero:
                nxt.append((prod * value, idxs + [index]))
        acc = nxt
    groups: list[tuple[object, int]] = []
    if f.exact:
        table: dict = {}
        for prod, idxs in acc:
            w = wedge_fold(idxs, ctx)
            if w > table.get(prod, 0):
                table[prod] = w
        groups = sorted(table.items(), key=lambda t: f.sort_key(t[0]))
    else:
        items = [(prod, wedge_fold(idxs, ctx)) for prod, idxs in acc]
        used = [False] * len(items)
        for i, (prod, w) in enumerate(items):
            if used[i]:
                continue
            members = [(prod, w)]
            used[i] = True
            for j in range(i + 1, len(items)):
                if used[j]:
                    continue
                q = items[j][0]
                if abs(q - prod) <= CLUSTER_TOL * max(1.0, abs(q), abs(prod)):
                    members.append(items[j])
                    used[j] = True
            mean = sum(m[0] for m in members) / len(members)
            groups.append((mean, max(m[1] for m in members)))
        groups.sort(key=lambda t: f.sort_key(t[0]))
    return ProductClassTable(field=f, entries=tuple(groups))


def kron_minpoly_symbolic(specs, ctx: WedgeContext | None = None) -> Poly:
    """Minimal polynomial of a Kronecker product from factor spectra alone.

    X^rho times the product-class polynomial, where rho is: the smallest
    zero index among pure-nilpotent factors if any factor is nilpotent
    (such a factor annihilates the whole product); otherwise 0 when no
    factor is singular; otherwise the largest zero index across factors
    (a singular factor's zero block, paired with any nonzero eigenvalue
    elsewhere, keeps its full nilpotency order).
    """
    specs = list(specs)
    if not specs:
        raise EmptyInput("need at least one spectrum")
    f = specs[0].field
    for s in specs:
        if s.field != f:
            raise MixedFields(f"spectra over {f} and {s.field}")
    if ctx is None:
        ctx = WedgeContext(f.char)
    elif ctx.characteristic != f.char:
        raise PcanonError(
            f"wedge characteristic {ctx.characteristic} does not match field {f}")
    nilpotent = [s.zero_index for s in specs if s.is_nilpotent]
    if nilpotent:
        rho = min(nilpotent)
        upsilon = Poly.one(f)
    else:
        rho = max((s.zero_index for s in specs), default=0)
        upsilon = product_class_table(specs, ctx).poly()
    return Poly.x(f) ** rho * upsilon


def kron_minpoly_direct(mats) -> Poly:
    """Oracle: minimal polynomial of the actual Kronecker product matrix."""
    mats = list(mats)
    if not mats:
        raise EmptyInput("need at least one matrix")
    total = 1
    for m in mats:
        total *= m.n
    if total > DIRECT_ORDER_LIMIT:
        raise OrderTooLarge(
            f"Kronecker order {total} exceeds {DIRECT_ORDER_LIMIT}")
    return minpoly(reduce(kron, mats))


def lrs_product_poly(polys, ctx: WedgeContext | None = None) -> Poly:
    """Characteristic polynomial closing termwise products of recurrence
    sequences: every product of sequences annihilated by the given monic
    polynomials is annihilated by the result.

    Uses the symbolic spectrum route when every factor splits over its
    field; otherwise computes the minimal polynomial of the Kronecker
    product of the companion matrices directly (always available).
    """
    polys = list(polys)
    if not polys:
        raise EmptyInput("need at least one polynomial")
    f = polys[0].field
    for p in polys:
        if p.field != f:
            raise MixedFields(f"polynomials over {f} and {p.field}")
        if p.is_zero or not p.is_monic:
            raise NonMonic("product closure needs monic polynomials")
        if p.degree < 1:
            raise DegreeZero("product closure needs degrees >= 1")
    try:
        specs = [eig_spec_of_poly(p) for p in polys]
    except NonSplitField:
        return kron_minpoly_direct([companion(p) for p in polys])
    return kron_minpoly_symbolic(specs, ctx)
