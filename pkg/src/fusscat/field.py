"""Exact arithmetic in the real cyclotomic field Q(2cos(pi/L)).

Root systems of finite Coxeter groups have Cartan entries -2cos(pi/m(s,t)).
All of these live in Q(2cos(pi/L)) for L the lcm of the edge labels, so one
primitive element suffices for a whole system.  Elements are stored as
coefficient vectors over the power basis modulo the minimal polynomial of
2cos(pi/L); this makes equality and the zero test exact and trivial.  Sign
determination evaluates numerically at increasing precision (a nonzero
element is bounded away from zero, so this terminates).

Crystallographic labels {2, 3} contribute rational cosines only, so systems
of type A/D/E degenerate to plain rationals (L = 1).
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

Q0 = Fraction(0)
Q1 = Fraction(1)


def _poly_trim(p: list[Fraction]) -> tuple[Fraction, ...]:
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def _poly_mul(a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple[Fraction, ...]:
    if not a or not b:
        return ()
    out = [Q0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _poly_trim(out)


def _poly_divmod(a: Sequence[Fraction], b: Sequence[Fraction]):
    """Exact division with remainder in Q[x]; b must be nonzero."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    q = [Q0] * max(len(a) - db, 0)
    while len(a) - 1 >= db and any(a):
        if a[-1] == 0:
            a.pop()
            continue
        k = len(a) - 1 - db
        c = a[-1] / lb
        q[k] = c
        for j in range(db + 1):
            a[k + j] -= c * b[j]
        a.pop()
    return _poly_trim(q), _poly_trim(a)


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial."""
    p = [Fraction(-1)] + [Q0] * (n - 1) + [Q1]
    for d in range(1, n):
        if n % d == 0:
            p, r = _poly_divmod(p, cyclotomic(d))
            assert not r
            p = list(p)
    return tuple(int(c) for c in p)


def _dickson(k: int, modpoly=None):
    """D_k with z^k + z^-k = D_k(z + z^-1); integer coefficients."""
    a, b = (Fraction(2),), (Q0, Q1)  # D_0 = 2, D_1 = y
    if k == 0:
        return a
    for _ in range(k - 1):
        yb = _poly_mul((Q0, Q1), b)
        nxt = [Q0] * max(len(yb), len(a))
        for i, c in enumerate(yb):
            nxt[i] += c
        for i, c in enumerate(a):
            nxt[i] -= c
        a, b = b, _poly_trim(nxt)
    return b


@lru_cache(maxsize=None)
def minpoly_two_cos_pi_over(L: int) -> tuple[Fraction, ...]:
    """Minimal polynomial of 2cos(pi/L) over Q, monic."""
    if L == 1:
        return (Fraction(2), Q1)  # x + 2
    if L == 2:
        return (Q0, Q1)  # x
    if L == 3:
        return (Fraction(-1), Q1)  # x - 1
    # 2cos(pi/L) = z + 1/z for z a primitive 2L-th root of unity. Fold the
    # palindromic cyclotomic polynomial through z^k + z^-k = D_k(y).
    phi = [Fraction(c) for c in cyclotomic(2 * L)]
    m = (len(phi) - 1) // 2
    acc = [phi[m]]
    for k in range(1, m + 1):
        dk = _dickson(k)
        term = [phi[m + k] * c for c in dk]
        if len(term) > len(acc):
            acc += [Q0] * (len(term) - len(acc))
        for i, c in enumerate(term):
            acc[i] += c
    out = _poly_trim(acc)
    lead = out[-1]
    return tuple(c / lead for c in out)


class RealCyclotomicField:
    """Q(2cos(pi/L)), with L=1 meaning the plain rationals."""

    def __init__(self, L: int):
        if L < 1:
            raise ValueError("L must be positive")
        self.L = L
        self.minpoly = minpoly_two_cos_pi_over(L)
        self.degree = len(self.minpoly) - 1
        self._float_powers = None
        self.zero = FieldElement(self, (Q0,) * self.degree)
        one = [Q0] * self.degree
        one[0] = Q1
        self.one = FieldElement(self, tuple(one))
        # remainders of x^degree .. x^(2*degree-2) for reduction after products
        self._red: list[tuple[Fraction, ...]] = []
        cur = [-c for c in self.minpoly[:-1]]
        for _ in range(self.degree - 1):
            self._red.append(tuple(cur))
            cur = [Q0] + cur
            if len(cur) > self.degree:
                top = cur.pop()
                if top:
                    for i, c in enumerate(self._red[0]):
                        cur[i] += top * c
        self._generator_float = 2.0 * math.cos(math.pi / L)

    @staticmethod
    def for_labels(labels: Iterable[int]) -> "RealCyclotomicField":
        L = 1
        for m in labels:
            if m >= 4:
                L = L * m // math.gcd(L, m)
        return RealCyclotomicField(L)

    def __repr__(self):
        if self.degree == 1:
            return "Q"
        return f"Q(2cos(pi/{self.L}))"

    def __eq__(self, other):
        return isinstance(other, RealCyclotomicField) and self.L == other.L

    def __hash__(self):
        return hash(("RealCyclotomicField", self.L))

    def element(self, coeffs) -> "FieldElement":
        c = [Fraction(x) for x in coeffs]
        if len(c) > self.degree:
            raise ValueError("coefficient vector too long")
        c += [Q0] * (self.degree - len(c))
        return FieldElement(self, tuple(c))

    def rational(self, q) -> "FieldElement":
        return self.element([Fraction(q)])

    def generator(self) -> "FieldElement":
        """The element 2cos(pi/L)."""
        if self.degree == 1:
            return self.rational(-self.minpoly[0])
        return self.element([Q0, Q1])

    def two_cos_pi_over(self, m: int) -> "FieldElement":
        """2cos(pi/m); requires the cosine to lie in this field."""
        if m == 1:
            return self.rational(-2)
        if m == 2:
            return self.zero
        if m == 3:
            return self.one
        if self.L % m != 0:
            raise ValueError(f"2cos(pi/{m}) does not lie in {self!r}")
        dk = _dickson(self.L // m)
        acc = self.zero
        xpow = self.one
        gen = self.generator()
        for c in dk:
            if c:
                acc = acc + xpow * self.rational(c)
            xpow = xpow * gen
        return acc

    def _reduce(self, c: list[Fraction]) -> tuple[Fraction, ...]:
        d = self.degree
        for k in range(len(c) - 1, d - 1, -1):
            top = c[k]
            if top:
                red = self._red[k - d]
                for i, r in enumerate(red):
                    c[i] += top * r
        return tuple(c[:d])

    def float_powers(self):
        if self._float_powers is None:
            x = self._generator_float
            self._float_powers = tuple(x**i for i in range(self.degree))
        return self._float_powers


class FieldElement:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: RealCyclotomicField, coeffs: tuple[Fraction, ...]):
        self.field = field
        self.coeffs = coeffs

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == self.field.rational(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if self.field.degree == 1:
            return str(self.coeffs[0])
        return f"<{' + '.join(f'{c}*x^{i}' for i, c in enumerate(self.coeffs) if c) or '0'}>"

    def __add__(self, other):
        other = self._coerce(other)
        return FieldElement(self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        other = self._coerce(other)
        return FieldElement(self.field, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return FieldElement(self.field, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        other = self._coerce(other)
        prod = _poly_mul(self.coeffs, other.coeffs)
        return FieldElement(self.field, self.field._reduce(list(prod) + [Q0] * self.field.degree))

    def __truediv__(self, other):
        other = self._coerce(other)
        return self * other.inverse()

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("field mismatch")
            return other
        return self.field.rational(other)

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroDivisionError("field element is zero")
        # extended Euclid against the minimal polynomial
        r0, r1 = list(self.field.minpoly), list(_poly_trim(list(self.coeffs)))
        s0, s1 = [], [Q1]
        while True:
            q, r = _poly_divmod(r0, r1)
            if not r:
                break
            s = list(s0)
            for i, c in enumerate(_poly_mul(q, s1)):
                if i < len(s):
                    s[i] -= c
                else:
                    s.append(-c)
            r0, s0, r1, s1 = r1, s1, list(r), _poly_trim(s)
        lead = r1[-1] if r1 else Q1
        inv = [c / lead for c in s1]
        return FieldElement(self.field, self.field._reduce(inv + [Q0] * self.field.degree))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __float__(self):
        ps = self.field.float_powers()
        return float(sum(float(c) * p for c, p in zip(self.coeffs, ps)))

    def sign(self) -> int:
        """Exact sign: -1, 0, or +1."""
        if self.is_zero():
            return 0
        approx = float(self)
        scale = sum(abs(float(c)) for c in self.coeffs) or 1.0
        if abs(approx) > 1e-9 * scale:
            return 1 if approx > 0 else -1
        import mpmath

        prec = 60
        while True:
            with mpmath.workdps(prec):
                x = 2 * mpmath.cos(mpmath.pi / self.field.L)
                val = mpmath.fsum(
                    mpmath.mpq(c.numerator, c.denominator) * x**i
                    for i, c in enumerate(self.coeffs)
                )
                if abs(val) > mpmath.mpf(10) ** (-prec // 2):
                    return 1 if val > 0 else -1
            prec *= 2
            if prec > 10000:  # pragma: no cover
                raise ArithmeticError("sign determination did not converge")

    def __lt__(self, other):
        return (self - self._coerce(other)).sign() < 0

    def __le__(self, other):
        return (self - self._coerce(other)).sign() <= 0

    def __gt__(self, other):
        return (self - self._coerce(other)).sign() > 0

    def __ge__(self, other):
        return (self - self._coerce(other)).sign() >= 0

    def as_json(self):
        return [[c.numerator, c.denominator] for c in self.coeffs]
