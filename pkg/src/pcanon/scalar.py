"""Scalar fields and dense univariate polynomials.

Three coefficient domains are supported: exact rationals (Fraction-backed),
prime fields F_p with p checked for primality once, and complex double
floats. Every algebraic object downstream carries exactly one Field
instance; arithmetic between mismatched fields raises MixedFields rather
than coercing. Plain Python ints are accepted everywhere (the canonical
image of an integer exists in any field).
"""
from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import (
    MixedFields,
    NonMonic,
    NumericFieldUnsupported,
    PcanonError,
    ZeroPolynomial,
)

#: factorisation over F_p scans all residues, so cap the modulus at desk scale
ROOT_SCAN_PRIME_LIMIT = 10**6

#: relative tolerance used to merge nearly equal numeric roots
CLUSTER_TOL = 1e-8

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin (the fixed base set is exact far past 2**64)."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class FpElement:
    """A residue modulo a prime. Arithmetic insists on a matching modulus."""

    __slots__ = ("res", "p")

    def __init__(self, res: int, p: int):
        self.res = res % p
        self.p = p

    def _other(self, x):
        if isinstance(x, FpElement):
            if x.p != self.p:
                raise MixedFields(f"residues modulo {self.p} and {x.p}")
            return x.res
        if isinstance(x, int):
            return x % self.p
        raise MixedFields(f"cannot mix F_{self.p} with {type(x).__name__}")

    def __add__(self, x):
        return FpElement(self.res + self._other(x), self.p)

    __radd__ = __add__

    def __sub__(self, x):
        return FpElement(self.res - self._other(x), self.p)

    def __rsub__(self, x):
        return FpElement(self._other(x) - self.res, self.p)

    def __mul__(self, x):
        return FpElement(self.res * self._other(x), self.p)

    __rmul__ = __mul__

    def __truediv__(self, x):
        o = self._other(x)
        if o == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return FpElement(self.res * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, x):
        if self.res == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return FpElement(self._other(x) * pow(self.res, -1, self.p), self.p)

    def __pow__(self, e: int):
        if self.res == 0 and e < 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return FpElement(pow(self.res, e % (self.p - 1) if e < 0 else e, self.p)
                         if self.res else (0 if e else 1), self.p)

    def __neg__(self):
        return FpElement(-self.res, self.p)

    def __eq__(self, x):
        if isinstance(x, FpElement):
            return self.p == x.p and self.res == x.res
        if isinstance(x, int):
            return (x - self.res) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.res, self.p))

    def __repr__(self):
        return f"FpElement({self.res}, {self.p})"

    def __str__(self):
        return str(self.res)


class Field:
    """Interface shared by the three scalar domains."""

    char: int = 0
    exact: bool = True
    label: str = "?"

    def coerce(self, x):
        raise NotImplementedError

    def from_int(self, n: int):
        return self.coerce(n)

    def from_fraction(self, q: Fraction):
        raise NotImplementedError

    @property
    def zero(self):
        return self.from_int(0)

    @property
    def one(self):
        return self.from_int(1)

    def is_zero(self, x) -> bool:
        return x == self.zero

    def sort_key(self, x):
        raise NotImplementedError

    def format(self, x) -> str:
        raise NotImplementedError

    def __repr__(self):
        return self.label


class RationalField(Field):
    char = 0
    exact = True
    label = "Q"

    def coerce(self, x):
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, Fraction):
            return x
        raise MixedFields(f"cannot place {type(x).__name__} in Q")

    def from_fraction(self, q: Fraction):
        return q

    def sort_key(self, x: Fraction):
        return (x.numerator, x.denominator)

    def format(self, x: Fraction) -> str:
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")


class PrimeField(Field):
    exact = True

    def __init__(self, p: int):
        if not is_prime(p):
            raise PcanonError(f"{p} is not prime")
        self.char = p
        self.label = f"F{p}"

    @property
    def p(self) -> int:
        return self.char

    def coerce(self, x):
        if isinstance(x, FpElement):
            if x.p != self.char:
                raise MixedFields(f"residue modulo {x.p} in F_{self.char}")
            return x
        if isinstance(x, int):
            return FpElement(x, self.char)
        raise MixedFields(f"cannot place {type(x).__name__} in F_{self.char}")

    def from_fraction(self, q: Fraction):
        if q.denominator % self.char == 0:
            raise ZeroDivisionError(f"{q} has no image in F_{self.char}")
        return FpElement(q.numerator * pow(q.denominator, -1, self.char), self.char)

    def sort_key(self, x: FpElement):
        return x.res

    def format(self, x: FpElement) -> str:
        return str(x.res)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.char == self.char

    def __hash__(self):
        return hash(("Fp", self.char))


class ComplexField(Field):
    char = 0
    exact = False
    label = "C"

    def coerce(self, x):
        if isinstance(x, complex):
            return x
        if isinstance(x, (int, float)):
            return complex(x)
        if isinstance(x, Fraction):
            return complex(float(x))
        raise MixedFields(f"cannot place {type(x).__name__} in C")

    def from_fraction(self, q: Fraction):
        return complex(float(q))

    def sort_key(self, x: complex):
        return (x.real, x.imag)

    def format(self, x: complex) -> str:
        return format_complex(x)

    def __eq__(self, other):
        return isinstance(other, ComplexField)

    def __hash__(self):
        return hash("C")


QQ = RationalField()
CC = ComplexField()

_GF_CACHE: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    """The prime field with p elements (instances are cached per prime)."""
    f = _GF_CACHE.get(p)
    if f is None:
        f = PrimeField(p)
        _GF_CACHE[p] = f
    return f


def _fmt_float(x: float) -> str:
    if x == 0:
        x = 0.0  # normalise -0.0
    s = f"{x:.12g}"
    return "0" if s == "-0" else s


def format_complex(z: complex) -> str:
    """ASCII rendering like 1.5+2i, -3i, 2, 0."""
    re, im = z.real, z.imag
    if im == 0:
        return _fmt_float(re)
    ims = _fmt_float(abs(im)) + "i"
    if re == 0:
        return ("-" if im < 0 else "") + ims
    return _fmt_float(re) + ("-" if im < 0 else "+") + ims


class Poly:
    """Dense univariate polynomial over one Field, coefficients ascending.

    The zero polynomial is the empty coefficient tuple and reports degree -1.
    Construction strips trailing zeros, so the leading coefficient of any
    nonzero Poly is nonzero.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs=()):
        cs = [field.coerce(c) for c in coeffs]
        while cs and field.is_zero(cs[-1]):
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls, field: Field) -> "Poly":
        return cls(field, ())

    @classmethod
    def one(cls, field: Field) -> "Poly":
        return cls(field, (1,))

    @classmethod
    def x(cls, field: Field) -> "Poly":
        return cls(field, (0, 1))

    @classmethod
    def constant(cls, field: Field, c) -> "Poly":
        return cls(field, (c,))

    @classmethod
    def from_roots(cls, field: Field, roots) -> "Poly":
        p = cls.one(field)
        for r in roots:
            p = p * cls(field, (-field.coerce(r), 1))
        return p

    # -- structure ----------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self):
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    def coeff(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero

    def _check(self, other: "Poly"):
        if self.field != other.field:
            raise MixedFields(f"polynomials over {self.field} and {other.field}")

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.field, [self.coeff(i) + other.coeff(i) for i in range(n)])

    def __sub__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.field, [self.coeff(i) - other.coeff(i) for i in range(n)])

    def __neg__(self):
        return Poly(self.field, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, Poly):
            self._check(other)
            if self.is_zero or other.is_zero:
                return Poly.zero(self.field)
            out = [self.field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return Poly(self.field, out)
        c = self.field.coerce(other)
        return Poly(self.field, [c * a for a in self.coeffs])

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative polynomial power")
        r = Poly.one(self.field)
        b = self
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    def __divmod__(self, other: "Poly"):
        self._check(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly.zero(self.field), self
        quot = [self.field.zero] * (dq + 1)
        lead = other.coeffs[-1]
        for k in range(dq, -1, -1):
            c = rem[k + other.degree] / lead
            quot[k] = c
            if not self.field.is_zero(c):
                for j, b in enumerate(other.coeffs):
                    rem[k + j] = rem[k + j] - c * b
        return Poly(self.field, quot), Poly(self.field, rem[: other.degree])

    def __floordiv__(self, other: "Poly"):
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly"):
        return divmod(self, other)[1]

    def __eq__(self, other):
        return (isinstance(other, Poly) and self.field == other.field
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.field, self.coeffs))

    # -- operations ---------------------------------------------------
    def monic(self) -> "Poly":
        if self.is_zero:
            raise ZeroPolynomial("cannot normalise the zero polynomial")
        if self.is_monic:
            return self
        lead = self.coeffs[-1]
        return Poly(self.field, [c / lead for c in self.coeffs])

    def evaluate(self, x):
        x = self.field.coerce(x)
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        return Poly(self.field,
                    [self.field.from_int(i) * c for i, c in enumerate(self.coeffs)][1:])

    def shifted(self, c) -> "Poly":
        """The polynomial p(X + c)."""
        c = self.field.coerce(c)
        out: list = []
        for a in reversed(self.coeffs):
            # out <- out * (X + c) + a
            nxt = [self.field.zero] * (len(out) + 1)
            for i, v in enumerate(out):
                nxt[i + 1] = nxt[i + 1] + v
                nxt[i] = nxt[i] + c * v
            nxt[0] = nxt[0] + a
            out = nxt
        return Poly(self.field, out)

    def to_field(self, field: Field) -> "Poly":
        return Poly(field, [field.coerce(c) for c in self.coeffs])

    def format(self, var: str = "X") -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if self.field.is_zero(c):
                continue
            cs = self.field.format(c)
            if i == 0:
                term = cs
            else:
                xs = var if i == 1 else f"{var}^{i}"
                if cs == "1":
                    term = xs
                elif cs == "-1":
                    term = f"-{xs}"
                elif "+" in cs[1:] or "-" in cs[1:] or "i" in cs or "/" in cs:
                    term = f"({cs}){xs}"
                else:
                    term = f"{cs}{xs}"
            parts.append(term)
        text = parts[0]
        for t in parts[1:]:
            text += " - " + t[1:] if t.startswith("-") else " + " + t
        return text

    def __repr__(self):
        return f"Poly[{self.field}]({self.format()})"


def series_inverse(p: Poly, order: int) -> Poly:
    """Power series inverse of p modulo X**order (needs p(0) != 0)."""
    f = p.field
    c0 = p.coeff(0)
    if f.is_zero(c0):
        raise ZeroDivisionError("series inverse needs a nonzero constant term")
    inv0 = f.one / c0
    out = [inv0]
    for k in range(1, order):
        s = f.zero
        for i in range(1, k + 1):
            s = s + p.coeff(i) * out[k - i]
        out.append(-inv0 * s)
    return Poly(f, out)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd over an exact field by the Euclidean algorithm."""
    if a.field != b.field:
        raise MixedFields(f"gcd over {a.field} and {b.field}")
    if not a.field.exact:
        raise NumericFieldUnsupported("gcd is only defined over exact fields")
    if a.is_zero and b.is_zero:
        raise ZeroPolynomial("gcd(0, 0) is undefined")
    while not b.is_zero:
        a, b = b, (a % b)
        if not b.is_zero:
            b = b.monic()
    return a.monic()


def poly_lcm(a: Poly, b: Poly) -> Poly:
    if a.is_zero or b.is_zero:
        raise ZeroPolynomial("lcm with the zero polynomial")
    return ((a * b) // poly_gcd(a, b)).monic()


@dataclass(frozen=True)
class FactoredPoly:
    """Linear factors split off a monic polynomial, plus what would not split.

    roots holds (root, multiplicity) pairs in the field's canonical order;
    remainder is monic of degree >= 0 and has no roots in the field (exactly
    for exact fields, within the clustering tolerance for complex doubles).
    """

    roots: tuple
    remainder: Poly

    def reassemble(self) -> Poly:
        p = self.remainder
        f = p.field
        for r, m in self.roots:
            p = p * Poly(f, (-f.coerce(r), 1)) ** m
        return p


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def _rational_roots(p: Poly) -> list[Fraction]:
    """All rational roots of a nonzero polynomial over Q (no multiplicities)."""
    den = 1
    for c in p.coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in p.coeffs]
    while ints and ints[0] == 0:
        ints.pop(0)  # zero roots handled by the caller
    if not ints:
        return []
    a0, an = ints[0], ints[-1]
    found = []
    seen = set()
    for num in _divisors(a0):
        for dq in _divisors(an):
            for s in (1, -1):
                cand = Fraction(s * num, dq)
                if cand in seen:
                    continue
                seen.add(cand)
                if p.evaluate(cand) == 0:
                    found.append(cand)
    return found


_DK_SEED = 0x5EED


def durand_kerner(p: Poly, max_iter: int = 500, step_tol: float = 1e-12) -> list[complex]:
    """All complex roots of a monic polynomial by simultaneous iteration.

    Starting points sit on a circle of radius 1 + max|coefficient| with a
    deterministic random perturbation so symmetric configurations cannot
    stall. Iteration stops when the largest correction falls below step_tol
    or after max_iter sweeps.
    """
    n = p.degree
    if n <= 0:
        return []
    coeffs = [complex(c) for c in p.coeffs]
    rng = random.Random(_DK_SEED)
    radius = 1.0 + max(abs(c) for c in coeffs[:-1]) if n else 1.0
    zs = []
    for k in range(n):
        ang = 2 * math.pi * (k + 0.25) / n + 0.1 * (rng.random() - 0.5)
        rad = radius * (1 + 0.05 * (rng.random() - 0.5))
        zs.append(rad * cmath.exp(1j * ang))

    def val(z):
        acc = 0j
        for c in reversed(coeffs):
            acc = acc * z + c
        return acc

    for _ in range(max_iter):
        biggest = 0.0
        for k in range(n):
            zk = zs[k]
            denom = 1.0 + 0j
            for j in range(n):
                if j != k:
                    denom *= zk - zs[j]
            if denom == 0:
                zs[k] = zk + (1e-8 + 1e-8j) * (1 + rng.random())
                biggest = math.inf
                continue
            delta = val(zk) / denom
            zs[k] = zk - delta
            biggest = max(biggest, abs(delta))
        if biggest < step_tol:
            break
    return zs


def cluster_complex(values: list[complex], tol: float = CLUSTER_TOL) -> list[tuple[complex, int]]:
    """Merge nearly equal complex values; returns (mean, count) per cluster."""
    m = len(values)
    parent = list(range(m))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(m):
        for j in range(i + 1, m):
            if abs(values[i] - values[j]) <= tol * max(1.0, abs(values[i]), abs(values[j])):
                parent[find(i)] = find(j)
    groups: dict[int, list[complex]] = {}
    for i in range(m):
        groups.setdefault(find(i), []).append(values[i])
    out = []
    for vs in groups.values():
        mean = sum(vs) / len(vs)
        out.append((mean, len(vs)))
    out.sort(key=lambda t: (t[0].real, t[0].imag))
    return out


def _numeric_poly_gcd(a: Poly, b: Poly, tol: float = 1e-10) -> Poly:
    """Thresholded Euclid over complex doubles (desk-scale spectra only)."""
    scale = max(1.0,
                max((abs(c) for c in a.coeffs), default=0.0),
                max((abs(c) for c in b.coeffs), default=0.0))
    a = a.monic()
    b = b.monic()
    while True:
        if b.degree <= 0:
            return Poly.one(CC)
        r = a % b
        if r.is_zero or max(abs(c) for c in r.coeffs) <= tol * scale:
            return b.monic()
        a, b = b, r.monic()


def _numeric_squarefree(p: Poly, tol: float) -> Poly:
    g = _numeric_poly_gcd(p, p.derivative(), tol=min(tol, 1e-10))
    if g.degree <= 0:
        return p
    return (p // g).monic()


def _synthetic_div(coeffs: list[complex], r: complex) -> tuple[list[complex], complex]:
    """Divide by (X - r); returns (quotient coeffs ascending, remainder)."""
    out = [0j] * (len(coeffs) - 1)
    acc = 0j
    for i in range(len(coeffs) - 1, 0, -1):
        acc = coeffs[i] + acc * r
        out[i - 1] = acc
    rem = coeffs[0] + acc * r
    return out, rem


def _factor_complex(p: Poly, tol: float) -> FactoredPoly:
    coeffs = [complex(c) for c in p.coeffs]
    zero_mult = 0
    while len(coeffs) > 1 and coeffs[0] == 0:
        coeffs.pop(0)
        zero_mult += 1
    work = Poly(CC, coeffs)
    roots: list[tuple[complex, int]] = []
    if zero_mult:
        roots.append((0j, zero_mult))
    if work.degree >= 1:
        sf = _numeric_squarefree(work, tol)
        raw = durand_kerner(sf)
        reps = cluster_complex(raw, tol=tol)
        quotient = list(work.coeffs)
        for rep, _ in reps:
            # a few Newton polishing steps on the squarefree part
            z = rep
            dsf = sf.derivative()
            for _ in range(4):
                dv = dsf.evaluate(z)
                if dv == 0:
                    break
                z = z - sf.evaluate(z) / dv
            mult = 0
            while len(quotient) > 1:
                bound = sum(abs(c) * max(1.0, abs(z)) ** i for i, c in enumerate(quotient))
                q2, rem = _synthetic_div(quotient, z)
                if abs(rem) <= tol * max(1.0, bound):
                    quotient = q2
                    mult += 1
                else:
                    break
            if mult:
                roots.append((z, mult))
        work = Poly(CC, quotient).monic() if len(quotient) > 1 else Poly.one(CC)
    else:
        work = Poly.one(CC)
    roots.sort(key=lambda t: CC.sort_key(t[0]))
    return FactoredPoly(tuple(roots), work)


def poly_factor(p: Poly, tol: float = CLUSTER_TOL) -> FactoredPoly:
    """Split linear factors off a nonzero monic polynomial.

    Over Q: squarefree reduction, then rational-root extraction; whatever
    has no rational root stays in the remainder. Over F_p: exhaustive root
    scan (p capped at ROOT_SCAN_PRIME_LIMIT). Over C: Durand-Kerner on the
    squarefree part, root clustering at relative tolerance tol, then
    multiplicity recovery by repeated deflation.
    """
    if p.is_zero:
        raise ZeroPolynomial("cannot factor the zero polynomial")
    f = p.field
    if not f.exact:
        lead = p.lead
        if abs(lead - 1) > 1e-9 * max(1.0, max(abs(c) for c in p.coeffs)):
            raise NonMonic("complex factorisation expects a monic polynomial")
        return _factor_complex(p.monic() if lead != 1 else p, tol)
    if not p.is_monic:
        raise NonMonic("factorisation expects a monic polynomial")
    if isinstance(f, PrimeField) and f.char > ROOT_SCAN_PRIME_LIMIT:
        raise PcanonError(f"root scan supports p <= {ROOT_SCAN_PRIME_LIMIT}")

    coeffs = list(p.coeffs)
    zero_mult = 0
    while len(coeffs) > 1 and f.is_zero(coeffs[0]):
        coeffs.pop(0)
        zero_mult += 1
    work = Poly(f, coeffs)
    roots: list[tuple] = []
    if zero_mult:
        roots.append((f.zero, zero_mult))

    if work.degree >= 1:
        sf = (work // poly_gcd(work, work.derivative())).monic() \
            if not work.derivative().is_zero else work
        if isinstance(f, RationalField):
            candidates = _rational_roots(sf)
        else:
            candidates = [FpElement(x, f.char) for x in range(f.char)
                          if f.is_zero(sf.evaluate(x))]
        for r in candidates:
            lin = Poly(f, (-f.coerce(r), 1))
            mult = 0
            while True:
                q, rem = divmod(work, lin)
                if rem.is_zero:
                    work = q
                    mult += 1
                else:
                    break
            if mult:
                roots.append((f.coerce(r), mult))

    roots.sort(key=lambda t: f.sort_key(t[0]))
    return FactoredPoly(tuple(roots), work)


@lru_cache(maxsize=None)
def _stirling1_row(i: int) -> tuple[int, ...]:
    # row i holds s(i, 0..i) for the signed first kind:
    # s(i+1, m) = s(i, m-1) - i * s(i, m)
    if i == 0:
        return (1,)
    prev = _stirling1_row(i - 1)

    def at(m):
        return prev[m] if 0 <= m < len(prev) else 0

    return tuple(at(m - 1) - (i - 1) * at(m) for m in range(i + 1))


def stirling_first(i: int, m: int) -> int:
    """Signed Stirling number of the first kind s(i, m)."""
    if i < 0:
        raise ValueError("negative row index")
    if m < 0 or m > i:
        return 0
    return _stirling1_row(i)[m]


@lru_cache(maxsize=None)
def _stirling2_row(n: int) -> tuple[int, ...]:
    if n == 0:
        return (1,)
    prev = _stirling2_row(n - 1)

    def at(k):
        return prev[k] if 0 <= k < len(prev) else 0

    return tuple(k * at(k) + at(k - 1) for k in range(n + 1))


def stirling_second(n: int, k: int) -> int:
    """Stirling number of the second kind S(n, k)."""
    if n < 0:
        raise ValueError("negative row index")
    if k < 0 or k > n:
        return 0
    return _stirling2_row(n)[k]
