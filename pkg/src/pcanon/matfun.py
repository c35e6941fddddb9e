"""Closed-form matrix exponentials and logarithms via spectral projections.

e^(tA) is assembled exactly from the spectral resolution: a polynomial
part sum_i (A^i pi_0 / i!) t^i from the nilpotent block plus, per nonzero
eigenvalue, e^(lambda t) times a polynomial with matrix coefficients
((A - lambda I)^i pi / i!). Logarithms go the other way: a branch choice
per eigenvalue (principal or explicit winding integers) fixes z_j =
log|lambda_j| + i(Arg lambda_j + 2 pi k_j), and the log matrix is
sum z_j pi_j plus the alternating series in the nilpotent parts, which
terminates. Both directions also exist at the level of closed forms for
the full power sequence. All arithmetic here is on complex doubles; exact
inputs are converted once at the boundary.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import (
    NotReal,
    NumericFieldUnsupported,
    PcanonError,
    PrincipalUndefined,
    SingularMatrix,
    ZeroLogClash,
)
from .linalg import Matrix, spectral_data
from .pcf import Basis, PCanonicalForm, RealPCF, RealTerm, pcf_to_gamma
from .scalar import CC, CLUSTER_TOL


@dataclass(frozen=True)
class ClosedFormExp:
    """e^(tA) = sum_i M_i t^i + sum_j e^(lambda_j t) sum_i M_(j,i) t^i.

    polynomial_part holds (i, M_i); exponential_terms holds
    (lambda_j, ((i, M_(j,i)), ...)). Evaluation at t = 0 gives the
    identity; the derivative at 0 gives the source matrix.
    """

    order: int
    polynomial_part: tuple
    exponential_terms: tuple


@dataclass(frozen=True)
class RealExpTerm:
    """e^(value * t) times a real matrix polynomial in t."""

    value: float
    coeffs: tuple  # ((i, Matrix), ...)


@dataclass(frozen=True)
class SpiralExpTerm:
    """Merged conjugate pair mu = growth + i*frequency (frequency > 0):
    e^(growth t) [cos(frequency t) * P(t) + sin(frequency t) * Q(t)]."""

    growth: float
    frequency: float
    cos_coeffs: tuple
    sin_coeffs: tuple


@dataclass(frozen=True)
class RealClosedForm:
    """Real-arithmetic e^(tA) for a real source matrix."""

    order: int
    polynomial_part: tuple
    terms: tuple


@dataclass(frozen=True)
class LogBranchSpec:
    """Branch selection for matrix logarithms.

    ks = None selects the principal branch (defined only when no
    eigenvalue lies on the closed negative real axis); otherwise ks lists
    one winding integer per eigenvalue in the field's canonical
    eigenvalue order, and z = log|lambda| + i(Arg lambda + 2 pi k) with
    Arg in (-pi, pi].
    """

    ks: tuple | None = None

    @classmethod
    def principal(cls) -> "LogBranchSpec":
        return cls(None)

    @classmethod
    def branches(cls, ks) -> "LogBranchSpec":
        return cls(tuple(int(k) for k in ks))

    @property
    def is_principal(self) -> bool:
        return self.ks is None


def _to_cc(a: Matrix) -> Matrix:
    if a.field == CC:
        return a
    if a.field.char != 0:
        raise NumericFieldUnsupported(
            f"exp/log need a characteristic-zero field, got {a.field}")
    return a.to_field(CC)


def expm_closed(a: Matrix, tol: float = 1e-8) -> ClosedFormExp:
    """Exact-form matrix exponential from the spectral resolution."""
    a = _to_cc(a)
    sd = spectral_data(a, tol)
    poly_part = []
    cur = sd.zero_projection
    for i in range(sd.t0):
        poly_part.append((i, cur * complex(1 / math.factorial(i))))
        if i + 1 < sd.t0:
            cur = a * cur
    ident = Matrix.identity(CC, a.n)
    exp_terms = []
    for comp in sd.components:
        shift = a - ident * comp.value
        cur = comp.projection
        coeffs = []
        for i in range(comp.index):
            coeffs.append((i, cur * complex(1 / math.factorial(i))))
            if i + 1 < comp.index:
                cur = shift * cur
        exp_terms.append((comp.value, tuple(coeffs)))
    return ClosedFormExp(order=a.n, polynomial_part=tuple(poly_part),
                         exponential_terms=tuple(exp_terms))


def closedform_eval(form: ClosedFormExp, t) -> Matrix:
    """Evaluate e^(tA) at a real or complex time."""
    t = complex(t)
    out = Matrix.zeros(CC, form.order)
    for i, m in form.polynomial_part:
        out = out + m * t ** i
    for lam, coeffs in form.exponential_terms:
        acc = Matrix.zeros(CC, form.order)
        for i, m in coeffs:
            acc = acc + m * t ** i
        out = out + acc * cmath.exp(lam * t)
    return out


def _real_part_matrix(m: Matrix, tol: float, scale: float, what: str) -> Matrix:
    worst = max((abs(e.imag) for row in m.rows for e in row), default=0.0)
    if worst > tol * scale:
        raise NotReal(f"{what} has imaginary residue {worst:.3g}")
    return Matrix(CC, [[complex(e.real, 0.0) for e in row] for row in m.rows])


def expm_real(a: Matrix, tol: float = 1e-8) -> RealClosedForm:
    """Real-arithmetic closed form of e^(tA) for a real matrix: conjugate
    exponential terms merge into growth/oscillation spirals."""
    a = _to_cc(a)
    scale = max(1.0, a.maxnorm())
    if max(abs(e.imag) for row in a.rows for e in row) > 1e-12 * scale:
        raise NotReal("source matrix has nonreal entries")
    form = expm_closed(a, tol)
    poly_part = tuple((i, _real_part_matrix(m, tol, scale, f"t^{i} coefficient"))
                      for i, m in form.polynomial_part)
    real_terms: list[RealExpTerm] = []
    spiral_terms: list[SpiralExpTerm] = []
    pending = dict(enumerate(form.exponential_terms))
    while pending:
        idx = min(pending)
        lam, coeffs = pending.pop(idx)
        lam_scale = max(1.0, abs(lam))
        if abs(lam.imag) <= tol * lam_scale:
            real_terms.append(RealExpTerm(
                value=lam.real,
                coeffs=tuple((i, _real_part_matrix(m, tol, scale,
                                                   f"coefficient of e^({lam.real:g}t)"))
                             for i, m in coeffs)))
            continue
        partner = None
        for jdx, (mu, _mc) in pending.items():
            if abs(mu - lam.conjugate()) <= tol * lam_scale:
                partner = jdx
                break
        if partner is None:
            raise NotReal(f"eigenvalue {lam!r} has no conjugate partner")
        mu, mcoeffs = pending.pop(partner)
        if len(mcoeffs) != len(coeffs):
            raise NotReal(f"conjugate eigenvalues {lam!r}, {mu!r} differ in index")
        top = coeffs if lam.imag > 0 else mcoeffs
        val = lam if lam.imag > 0 else mu
        cos_cs = tuple((i, Matrix(CC, [[complex(2 * e.real, 0.0) for e in row]
                                       for row in m.rows])) for i, m in top)
        sin_cs = tuple((i, Matrix(CC, [[complex(-2 * e.imag, 0.0) for e in row]
                                       for row in m.rows])) for i, m in top)
        spiral_terms.append(SpiralExpTerm(growth=val.real, frequency=val.imag,
                                          cos_coeffs=cos_cs, sin_coeffs=sin_cs))
    real_terms.sort(key=lambda trm: trm.value)
    spiral_terms.sort(key=lambda trm: (trm.growth, trm.frequency))
    return RealClosedForm(order=form.order, polynomial_part=poly_part,
                          terms=(*real_terms, *spiral_terms))


def realclosedform_eval(form: RealClosedForm, t: float) -> Matrix:
    """Evaluate a real closed form at real time (entries stay real)."""
    t = float(t)
    out = Matrix.zeros(CC, form.order)
    for i, m in form.polynomial_part:
        out = out + m * complex(t ** i)
    for term in form.terms:
        if isinstance(term, RealExpTerm):
            w = math.exp(term.value * t)
            acc = Matrix.zeros(CC, form.order)
            for i, m in term.coeffs:
                acc = acc + m * complex(t ** i)
            out = out + acc * complex(w)
        else:
            g = math.exp(term.growth * t)
            cosf = complex(g * math.cos(term.frequency * t))
            sinf = complex(g * math.sin(term.frequency * t))
            acc = Matrix.zeros(CC, form.order)
            for (i, mc), (_i, ms) in zip(term.cos_coeffs, term.sin_coeffs):
                acc = acc + (mc * cosf + ms * sinf) * complex(t ** i)
            out = out + acc
    return out


def _branch_logs(values, branch: LogBranchSpec, tol: float) -> list[complex]:
    """One log per eigenvalue, per the branch spec; canonical order."""
    if branch.is_principal:
        ks = [0] * len(values)
        for lam in values:
            if lam.real < 0 and abs(lam.imag) <= tol * abs(lam):
                raise PrincipalUndefined(
                    f"eigenvalue {lam!r} lies on the closed negative real axis")
    else:
        ks = list(branch.ks)
        if len(ks) != len(values):
            raise PcanonError(
                f"branch list has {len(ks)} entries for {len(values)} eigenvalues")
    out = []
    for lam, k in zip(values, ks):
        out.append(complex(math.log(abs(lam)),
                           math.atan2(lam.imag, lam.real) + 2 * math.pi * k))
    return out


def logm(a: Matrix, branch: LogBranchSpec = LogBranchSpec.principal(),
         tol: float = 1e-8) -> Matrix:
    """A matrix logarithm: exp of the result is the input.

    Built as sum_j z_j pi_j plus the terminating alternating series
    sum_j sum_(i>=1) ((-1)^(i-1)/i) lambda_j^(-i) (A - lambda_j I)^i pi_j.
    The eigenvalues of the result are exactly the chosen z_j.
    """
    a = _to_cc(a)
    sd = spectral_data(a, tol)
    if sd.t0 > 0:
        raise SingularMatrix("singular matrices have no logarithm")
    values = [c.value for c in sd.components]
    zs = _branch_logs(values, branch, tol)
    out = Matrix.zeros(CC, a.n)
    ident = Matrix.identity(CC, a.n)
    for comp, z in zip(sd.components, zs):
        out = out + comp.projection * z
        shift = a - ident * comp.value
        cur = comp.projection
        lam_inv = 1.0 / comp.value
        factor = 1.0 + 0j
        for i in range(1, comp.index):
            cur = shift * cur
            factor = factor * lam_inv
            out = out + cur * (factor * ((-1) ** (i - 1) / i))
    return out


def log_pcf(form: PCanonicalForm, branch: LogBranchSpec = LogBranchSpec.principal(),
            tol: float = 1e-8) -> PCanonicalForm:
    """Closed form of the full power sequence of the logarithm.

    Takes the power-basis closed form of A (binomial-basis input is
    converted); each coefficient of lambda_j^k k^i becomes i! z_j^(-i)
    times a binomial-basis coefficient at eigenvalue z_j, except that a
    z_j = 0 (eigenvalue exactly 1, principal branch) routes to the
    finitely supported slots with the same i! weight.
    """
    if form.field != CC:
        raise PcanonError("logarithm closed forms work on complex-double forms")
    if form.nilpotent_terms:
        raise SingularMatrix("singular matrices have no logarithm")
    if form.basis is Basis.LAMBDA:
        form = pcf_to_gamma(form)
    values = [lam for lam, _ in form.geometric_terms]
    zs = _branch_logs(values, branch, tol)
    for i in range(len(zs)):
        for j in range(i + 1, len(zs)):
            if abs(zs[i] - zs[j]) <= CLUSTER_TOL * max(1.0, abs(zs[i]), abs(zs[j])):
                raise ZeroLogClash(
                    f"branch maps eigenvalues {values[i]!r} and {values[j]!r} "
                    f"to the same logarithm {zs[i]!r}")
    nil: list = []
    geo: list = []
    for (lam, coeffs), z in zip(form.geometric_terms, zs):
        if z == 0:
            for i, c in enumerate(coeffs):
                nil.append((i, c * complex(math.factorial(i))))
        else:
            zinv = 1.0 / z
            new = []
            factor = 1.0 + 0j
            for i, c in enumerate(coeffs):
                new.append(c * (factor * math.factorial(i)))
                factor = factor * zinv
            while new and new[-1].is_zero:
                new.pop()
            geo.append((z, tuple(new)))
    nil.sort(key=lambda t: t[0])
    geo.sort(key=lambda t: (t[0].real, t[0].imag))
    return PCanonicalForm(field=CC, order=form.order, basis=Basis.LAMBDA,
                          nilpotent_terms=tuple(nil), geometric_terms=tuple(geo))


def logm_real_pcf(form: RealPCF, branch: LogBranchSpec = LogBranchSpec.principal(),
                  tol: float = 1e-8) -> PCanonicalForm:
    """Closed form of the power sequence of the log of a real matrix,
    from its real closed form: spiral terms unmerge into a conjugate pair
    mu, conj(mu) whose logs are chosen conjugate (w and conj(w), the
    spiral's winding integer applying with opposite signs), so the result
    agrees with log_pcf of the complex form.

    The branch list carries one integer per term of the real form, in
    stored order (real terms first ascending, then spirals).
    """
    if form.nilpotent_terms:
        raise SingularMatrix("singular matrices have no logarithm")
    if form.basis is Basis.LAMBDA:
        from .pcf import realpcf_to_gamma
        form = realpcf_to_gamma(form)
    if branch.is_principal:
        ks = [0] * len(form.terms)
        for term in form.terms:
            if isinstance(term, RealTerm) and term.value < 0:
                raise PrincipalUndefined(
                    f"eigenvalue {term.value} lies on the closed negative real axis")
    else:
        ks = list(branch.ks)
        if len(ks) != len(form.terms):
            raise PcanonError(
                f"branch list has {len(ks)} entries for {len(form.terms)} terms")
    pairs: list[tuple[complex, tuple]] = []
    for term, k in zip(form.terms, ks):
        if isinstance(term, RealTerm):
            lam = complex(term.value)
            z = complex(math.log(abs(lam)),
                        math.atan2(lam.imag, lam.real) + 2 * math.pi * k)
            pairs.append((z, term.coeffs))
        else:
            w = complex(math.log(term.modulus),
                        term.angle + 2 * math.pi * k)
            up = tuple((cc * complex(0.5) + sc * complex(0, -0.5))
                       for cc, sc in zip(term.cos_coeffs, term.sin_coeffs))
            down = tuple(Matrix(CC, [[e.conjugate() for e in row] for row in m.rows])
                         for m in up)
            pairs.append((w, up))
            pairs.append((w.conjugate(), down))
    for i in range(len(pairs)):
        for j in range(i + 1, len(pairs)):
            zi, zj = pairs[i][0], pairs[j][0]
            if abs(zi - zj) <= CLUSTER_TOL * max(1.0, abs(zi), abs(zj)):
                raise ZeroLogClash(
                    f"branch maps two spectrum points to the same logarithm {zi!r}")
    nil: list = []
    geo: list = []
    for z, coeffs in pairs:
        if z == 0:
            for i, c in enumerate(coeffs):
                nil.append((i, c * complex(math.factorial(i))))
        else:
            zinv = 1.0 / z
            new = []
            factor = 1.0 + 0j
            for i, c in enumerate(coeffs):
                new.append(c * (factor * math.factorial(i)))
                factor = factor * zinv
            while new and new[-1].is_zero:
                new.pop()
            geo.append((z, tuple(new)))
    nil.sort(key=lambda t: t[0])
    geo.sort(key=lambda t: (t[0].real, t[0].imag))
    return PCanonicalForm(field=CC, order=form.order, basis=Basis.LAMBDA,
                          nilpotent_terms=tuple(nil), geometric_terms=tuple(geo))
