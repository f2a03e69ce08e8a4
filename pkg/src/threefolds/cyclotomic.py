"""Exact arithmetic in cyclotomic fields Q(zeta_e).

Elements are stored by conductor e and a coefficient vector of length
phi(e) in the power basis 1, z, ..., z^(phi(e)-1) of Q[x]/(Phi_e), where
z = exp(2*pi*i/e).  Reduction modulo the cyclotomic polynomial Phi_e makes
the representation canonical: two equal field elements with the same
conductor have identical coefficient vectors.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

DEFAULT_MAX_CONDUCTOR = 1000

_max_conductor = DEFAULT_MAX_CONDUCTOR


class ConductorLimitError(ValueError):
    """Raised when a requested conductor exceeds the configured maximum."""


def set_max_conductor(limit: int) -> None:
    global _max_conductor
    if limit < 1:
        raise ValueError("conductor limit must be positive")
    _max_conductor = limit


def get_max_conductor() -> int:
    return _max_conductor


def _check_conductor(e: int) -> None:
    if e < 1:
        raise ValueError(f"conductor must be positive, got {e}")
    if e > _max_conductor:
        raise ConductorLimitError(
            f"conductor {e} exceeds configured maximum {_max_conductor}"
        )


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("phi is defined for positive integers")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


# -- small dense polynomial helpers (coefficient lists, low degree first) --


def _poly_trim(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return _poly_trim(out)


def _poly_divmod_exact_int(num: list, den: list) -> list:
    """Exact quotient of integer polynomials, den monic; raises on remainder."""
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for k in range(len(num) - len(den), -1, -1):
        coef = num[k + len(den) - 1]
        q[k] = coef
        if coef:
            for j, dj in enumerate(den):
                num[k + j] -= coef * dj
    if any(num[: len(den) - 1]):
        raise ArithmeticError("division was not exact")
    return _poly_trim(q)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(e: int) -> tuple:
    """Integer coefficients of Phi_e, computed by dividing x^e - 1 by the
    cyclotomic polynomials of the proper divisors of e."""
    _check_conductor(e)
    num = [-1] + [0] * (e - 1) + [1]
    for d in range(1, e):
        if e % d == 0:
            num = _poly_divmod_exact_int(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


def _reduce_mod_phi(coeffs: list, e: int) -> tuple:
    """Reduce a Fraction coefficient list modulo Phi_e; returns phi(e)-tuple."""
    phi = cyclotomic_polynomial(e)
    deg = len(phi) - 1
    c = list(coeffs)
    for k in range(len(c) - 1, deg - 1, -1):
        top = c[k]
        if top:
            for j in range(len(phi)):
                c[k - deg + j] -= top * phi[j]
    c = c[:deg]
    c += [Fraction(0)] * (deg - len(c))
    return tuple(Fraction(x) for x in c)


class Cyc:
    """An element of Q(zeta_e) in canonical reduced form.

    Immutable; arithmetic between elements of different conductors embeds
    both into the lcm conductor first.
    """

    __slots__ = ("conductor", "coeffs", "_hash")

    def __init__(self, conductor: int, coeffs: Iterable):
        _check_conductor(conductor)
        coeffs = [Fraction(c) for c in coeffs]
        deg = euler_phi(conductor)
        if len(coeffs) > deg:
            coeffs = list(_reduce_mod_phi(coeffs, conductor))
        coeffs += [Fraction(0)] * (deg - len(coeffs))
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "coeffs", tuple(coeffs))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Cyc values are immutable")

    # -- constructors --

    @staticmethod
    def rational(q, conductor: int = 1) -> "Cyc":
        return Cyc(conductor, [Fraction(q)])

    @staticmethod
    def zero(conductor: int = 1) -> "Cyc":
        return Cyc(conductor, [])

    @staticmethod
    def one(conductor: int = 1) -> "Cyc":
        return Cyc(conductor, [Fraction(1)])

    @staticmethod
    def root_of_unity(e: int, k: int = 1) -> "Cyc":
        """zeta_e^k as an element of Q(zeta_e)."""
        _check_conductor(e)
        k %= e
        mono = [Fraction(0)] * k + [Fraction(1)]
        return Cyc(e, _reduce_mod_phi(mono, e))

    # -- conductor handling --

    def embed(self, e2: int) -> "Cyc":
        """Image under Q(zeta_e) -> Q(zeta_e2), requires e | e2."""
        e1 = self.conductor
        if e2 == e1:
            return self
        if e2 % e1 != 0:
            raise ValueError(f"cannot embed conductor {e1} into {e2}")
        _check_conductor(e2)
        step = e2 // e1
        out = [Fraction(0)] * (euler_phi(e1) * step)
        for i, c in enumerate(self.coeffs):
            if c:
                out[i * step] += c
        return Cyc(e2, _reduce_mod_phi(out, e2))

    def restrict(self, e2: int) -> "Cyc | None":
        """Express this element in Q(zeta_e2) if it lies there, else None.

        Solves the linear system given by the embedding of the power basis
        of Q(zeta_e2) into Q(zeta_e); used mainly by the round-trip tests.
        """
        e1 = self.conductor
        if e2 == e1:
            return self
        if e1 % e2 != 0:
            raise ValueError(f"conductor {e2} does not divide {e1}")
        d2 = euler_phi(e2)
        basis = [Cyc.root_of_unity(e2, k).embed(e1).coeffs for k in range(d2)]
        d1 = euler_phi(e1)
        # Gaussian elimination on the d1 x d2 system basis^T * x = coeffs.
        rows = [[basis[j][i] for j in range(d2)] + [self.coeffs[i]] for i in range(d1)]
        pivots = []
        r = 0
        for col in range(d2):
            pr = next((i for i in range(r, d1) if rows[i][col] != 0), None)
            if pr is None:
                continue
            rows[r], rows[pr] = rows[pr], rows[r]
            pv = rows[r][col]
            rows[r] = [x / pv for x in rows[r]]
            for i in range(d1):
                if i != r and rows[i][col] != 0:
                    f = rows[i][col]
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
            pivots.append(col)
            r += 1
            if r == d1:
                break
        sol = [Fraction(0)] * d2
        for i, col in enumerate(pivots):
            sol[col] = rows[i][-1]
        for i in range(r, d1):
            if rows[i][-1] != 0:
                return None
        cand = Cyc(e2, sol)
        if cand.embed(e1) != self:
            return None
        return cand

    @staticmethod
    def _common(a: "Cyc", b: "Cyc") -> tuple:
        if a.conductor == b.conductor:
            return a, b
        e = math.lcm(a.conductor, b.conductor)
        return a.embed(e), b.embed(e)

    # -- arithmetic --

    def __add__(self, other) -> "Cyc":
        other = _coerce(other)
        a, b = Cyc._common(self, other)
        return Cyc(a.conductor, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self) -> "Cyc":
        return Cyc(self.conductor, [-x for x in self.coeffs])

    def __sub__(self, other) -> "Cyc":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "Cyc":
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "Cyc":
        other = _coerce(other)
        a, b = Cyc._common(self, other)
        prod = _poly_mul(list(a.coeffs), list(b.coeffs))
        return Cyc(a.conductor, _reduce_mod_phi(prod, a.conductor))

    __rmul__ = __mul__

    def inverse(self) -> "Cyc":
        """Multiplicative inverse via the extended Euclidean algorithm
        against Phi_e in Q[x]."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        e = self.conductor
        r0 = [Fraction(c) for c in cyclotomic_polynomial(e)]
        r1 = _poly_trim(list(self.coeffs))
        s0, s1 = [], [Fraction(1)]
        while True:
            # divide r0 by r1
            q = []
            rem = list(r0)
            dq = len(rem) - len(r1)
            q = [Fraction(0)] * (dq + 1)
            for k in range(dq, -1, -1):
                coef = rem[k + len(r1) - 1] / r1[-1]
                q[k] = coef
                if coef:
                    for j in range(len(r1)):
                        rem[k + j] -= coef * r1[j]
            rem = _poly_trim(rem)
            if not rem:
                break
            qs1 = _poly_mul(q, s1)
            s_new = list(s0) + [Fraction(0)] * max(0, len(qs1) - len(s0))
            for i, c in enumerate(qs1):
                s_new[i] -= c
            r0, r1 = r1, rem
            s0, s1 = s1, _poly_trim(s_new)
        # r1 is the gcd (a nonzero constant since Phi_e is irreducible)
        lead = r1[0]
        inv = [c / lead for c in s1]
        return Cyc(e, _reduce_mod_phi(inv, e))

    def __truediv__(self, other) -> "Cyc":
        return self * _coerce(other).inverse()

    def __pow__(self, n: int) -> "Cyc":
        if n < 0:
            return self.inverse() ** (-n)
        result = Cyc.one(self.conductor)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "Cyc":
        """Complex conjugation, the field automorphism zeta_e -> zeta_e^(e-1)."""
        e = self.conductor
        out = [Fraction(0)] * (euler_phi(e) * (e - 1) + 1)
        for i, c in enumerate(self.coeffs):
            if c:
                out[i * (e - 1)] += c
        return Cyc(e, _reduce_mod_phi(out, e))

    # -- predicates / conversions --

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    def as_integer(self) -> int:
        q = self.as_rational()
        if q.denominator != 1:
            raise ValueError(f"{self!r} is not an integer")
        return q.numerator

    def complex_value(self) -> complex:
        """Numerical evaluation at zeta_e = exp(2*pi*i/e); test oracle only."""
        z = cmath.exp(2j * cmath.pi / self.conductor)
        return sum(float(c) * z**k for k, c in enumerate(self.coeffs))

    # -- comparisons --

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, Cyc):
            return NotImplemented
        a, b = Cyc._common(self, other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                h = hash(self.coeffs[0])
            else:
                h = hash((self.conductor, self.coeffs))
            object.__setattr__(self, "_hash", h)
        return self._hash

    def __repr__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append(f"{c}*z" if c != 1 else "z")
            else:
                terms.append(f"{c}*z^{k}" if c != 1 else f"z^{k}")
        body = " + ".join(terms) if terms else "0"
        return f"Cyc({self.conductor}: {body})"


def _coerce(x) -> Cyc:
    if isinstance(x, Cyc):
        return x
    if isinstance(x, (int, Fraction)):
        return Cyc.rational(x)
    raise TypeError(f"cannot interpret {x!r} as a cyclotomic number")


def cyclo_arith(a: Cyc, b: Cyc, op: str) -> Cyc:
    """Named arithmetic entry point: op in {'add', 'sub', 'mul'}."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")
